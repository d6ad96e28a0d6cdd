#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "daggercat/errors.hpp"
#include "daggercat/two_cat.hpp"

namespace daggercat {

// A dagger lax functor F: K -> L. Hom-wise it is a dagger functor; the
// comparison 2-cells gamma_{g,f}: F(g).F(f) => F(g.f) and delta_a:
// id1(F a) => F(id1 a) satisfy naturality, associativity and unit
// coherence, plus a Frobenius-style axiom tying gamma to its dagger.
struct DaggerLaxFunctor {
  const FinDagger2Category* source = nullptr;
  const FinDagger2Category* target = nullptr;
  std::vector<int> map0;
  std::vector<std::vector<int>> map1;  // per source hom, row-major
  std::vector<std::vector<int>> map2;
  // gamma[t(a,b,c)][g * |obj hom(a,b)| + f], a 2-cell of
  // hom(F a, F c); indices follow the source 2-category layout.
  std::vector<std::vector<int>> gamma;
  std::vector<int> delta;  // per source 0-cell

  int gamma_at(const FinDagger2Category& K, int a, int b, int c, int g,
               int f) const;
};

void validate_lax_functor(const FinDagger2Category& K,
                          const FinDagger2Category& L,
                          const DaggerLaxFunctor& F);

// The one-0-cell, one-1-cell terminal-ish source used to present monads as
// lax functors (single identity 2-cell).
FinDagger2Category trivial_2category();

// A monad (D,t) in L, seen as a dagger lax functor from the trivial
// 2-category: the unique 1-cell goes to t, gamma = mu, delta = eta.
DaggerLaxFunctor monad_to_lax(const FinDagger2Category& trivial,
                              const FinDagger2Category& L, const Monad2& m);
Monad2 lax_to_monad(const DaggerLaxFunctor& F);

// G after F; gamma^{GF} = G(gamma^F) . gamma^G_{Ff,Fg} and likewise for
// delta.
DaggerLaxFunctor compose_lax(const DaggerLaxFunctor& G,
                             const DaggerLaxFunctor& F);

// Dagger lax natural transformation alpha: F => G between dagger lax
// functors K -> L: 1-cells alpha_a: F a -> G a and 2-cells
// tau_f: G(f).alpha_a => alpha_b.F(f), natural in f, coherent with gamma
// and delta, and satisfying the dagger coherence pentagon.
struct DaggerLaxNat {
  std::vector<int> alpha;              // per source 0-cell, 1-cell in L
  std::vector<std::vector<int>> tau;   // per source hom, per 1-cell f
};

void validate_lax_nat(const FinDagger2Category& K, const FinDagger2Category& L,
                      const DaggerLaxFunctor& F, const DaggerLaxFunctor& G,
                      const DaggerLaxNat& n);

DaggerLaxNat identity_lax_nat(const FinDagger2Category& K,
                              const FinDagger2Category& L,
                              const DaggerLaxFunctor& F);

DaggerLaxNat vcomp_lax_nat(const FinDagger2Category& K,
                           const FinDagger2Category& L,
                           const DaggerLaxFunctor& F, const DaggerLaxFunctor& G,
                           const DaggerLaxFunctor& H, const DaggerLaxNat& beta,
                           const DaggerLaxNat& alpha);

// Modification Xi: alpha -> beta between two lax naturals F => G: 2-cells
// Xi_a: alpha_a => beta_a subject to the classical axiom and its dagger
// counterpart (quantified over 2-cells phi: f => g of K).
struct DaggerModification {
  std::vector<int> xi;  // per source 0-cell
};

void validate_modification(const FinDagger2Category& K,
                           const FinDagger2Category& L,
                           const DaggerLaxFunctor& F, const DaggerLaxFunctor& G,
                           const DaggerLaxNat& a, const DaggerLaxNat& b,
                           const DaggerModification& m);

// Componentwise 2-cell dagger; the modification axioms are self-dual for
// dagger lax naturals, so this lands in Mod(beta, alpha).
DaggerModification modification_dagger(const FinDagger2Category& K,
                                       const FinDagger2Category& L,
                                       const DaggerLaxFunctor& F,
                                       const DaggerLaxFunctor& G,
                                       const DaggerModification& m);

// The dagger category of dagger lax naturals Delta_C => F and modifications
// between them, built by exhaustive enumeration.
struct DagLaxHomResult {
  FinDaggerCategory cat;  // objects "L<i>", morphisms "m<j>"
  std::vector<DaggerLaxNat> nats;
  std::vector<DaggerModification> mods;
  std::vector<std::pair<int, int>> mod_endpoints;  // (src nat, tgt nat)
};

// Constant-at-C lax functor K -> L (every 1-cell to id1(C), identity
// comparisons); used as the weight for lax limits.
DaggerLaxFunctor delta_const(const FinDagger2Category& K,
                             const FinDagger2Category& L, int c0);

DagLaxHomResult daglax_hom(const FinDagger2Category& K,
                           const FinDagger2Category& L,
                           const DaggerLaxFunctor& F, int c0);

// (E, pi) presents the dagger lax limit of F when composing with pi induces
// a strict dagger isomorphism daglax_hom(C, F) <- hom(C, E) for every
// 0-cell C.
CheckOutcome check_dagger_lax_limit(const FinDagger2Category& K,
                                    const FinDagger2Category& L,
                                    const DaggerLaxFunctor& F, int E,
                                    const DaggerLaxNat& pi);

}  // namespace daggercat
