#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "daggercat/errors.hpp"
#include "daggercat/fincat.hpp"
#include "daggercat/functor.hpp"

namespace daggercat {

// A finite dagger 2-category, strict, with every hom given as a
// FinDaggerCategory. 1-cells A -> B are the objects of hom(A,B), 2-cells are
// its morphisms. Composition of 1-cells and the two whiskerings are stored
// as dense tables indexed by (a,b,c); horizontal composition of 2-cells is
// normally derived from the whisker tables, but an explicit table can be
// supplied (and is then cross-checked against the derived one).
struct FinDagger2Category {
  std::string name;
  std::vector<std::string> cells0;

  // Row-major: hom(a,b) lives at homs[a * n0() + b].
  std::vector<FinDaggerCategory> homs;

  // id1_tab[a]: object index of the identity 1-cell in hom(a,a).
  std::vector<int> id1_tab;

  // comp1_tab[t(a,b,c)][g * |obj hom(a,b)| + f] with f in hom(a,b),
  // g in hom(b,c); result is an object of hom(a,c).
  std::vector<std::vector<int>> comp1_tab;

  // lwhisk_tab[t(a,b,c)][h * |mor hom(a,b)| + alpha]: h a 1-cell in
  // hom(b,c), alpha a 2-cell in hom(a,b); result h * alpha in hom(a,c).
  std::vector<std::vector<int>> lwhisk_tab;

  // rwhisk_tab[t(a,b,c)][beta * |obj hom(a,b)| + f]: beta a 2-cell in
  // hom(b,c), f a 1-cell in hom(a,b); result beta * f in hom(a,c).
  std::vector<std::vector<int>> rwhisk_tab;

  // Optional explicit horizontal composition,
  // hcomp_tab[t(a,b,c)][beta * |mor hom(a,b)| + alpha].
  std::optional<std::vector<std::vector<int>>> hcomp_tab;

  int n0() const { return static_cast<int>(cells0.size()); }
  int tidx(int a, int b, int c) const { return (a * n0() + b) * n0() + c; }

  const FinDaggerCategory& hom(int a, int b) const {
    return homs[static_cast<std::size_t>(a * n0() + b)];
  }
  FinDaggerCategory& hom(int a, int b) {
    return homs[static_cast<std::size_t>(a * n0() + b)];
  }

  int cell0_index(const std::string& id) const;

  int id1(int a) const { return id1_tab[static_cast<std::size_t>(a)]; }

  // g o f, f: a -> b first, then g: b -> c.
  int comp1(int a, int b, int c, int g, int f) const;
  // h * alpha (post-whisker by the 1-cell h: b -> c).
  int lwhisk(int a, int b, int c, int h, int alpha) const;
  // beta * f (pre-whisker by the 1-cell f: a -> b).
  int rwhisk(int a, int b, int c, int beta, int f) const;

  bool has_explicit_hcomp() const { return hcomp_tab.has_value(); }
  // Effective horizontal composite: the explicit table when present,
  // otherwise vcomp(rwhisk(beta, src(alpha)'s target leg), lwhisk(...)),
  // evaluated along the standard route.
  int hcomp(int a, int b, int c, int beta, int alpha) const;
  // Always the derived route, ignoring any explicit table.
  int hcomp_derived(int a, int b, int c, int beta, int alpha) const;
};

// Raw description mirroring the JSON wire format; all references by id.
struct TwoCategoryDescription {
  std::string name;
  std::vector<std::string> cells0;
  std::map<std::pair<std::string, std::string>, CategoryDescription> homs;
  std::map<std::string, std::string> id1;
  // Rows [a, b, c, g, f, result] (comp1) and [a, b, c, x, y, result]
  // (whiskers / hcomp).
  std::vector<std::array<std::string, 6>> comp1;
  std::vector<std::array<std::string, 6>> lwhisker;
  std::vector<std::array<std::string, 6>> rwhisker;
  std::optional<std::vector<std::array<std::string, 6>>> hcomp;
};

// Structural assembly (dangling ids, duplicate rows, missing entries) plus
// validation of each hom category. Math-level checks live in
// validate_2category.
FinDagger2Category build_2category(const TwoCategoryDescription& desc);

// Unit and associativity of comp1, whisker functoriality and compatibility,
// interchange (pairwise squares, the quadruple law on the effective
// horizontal composition, explicit-vs-derived agreement), and
// dagger-compatibility of horizontal composition.
void validate_2category(const FinDagger2Category& K);

// Builders ------------------------------------------------------------------

// Only identity 2-cells; 0-cells are the objects of C, 1-cells its
// morphisms, with dagger on 2-cells trivial.
FinDagger2Category locally_discrete(const FinDaggerCategory& C);

// One 0-cell, one 1-cell; the 2-cells form the given one-object dagger
// category M (its morphisms become the 2-cells, horizontal composite =
// composition in M).
FinDagger2Category suspension(const FinDaggerCategory& M,
                              const std::string& name);

// 2-category of dagger categories restricted to the given 0-cell list:
// hom(A,B) = hom_category(A,B) via full enumeration.
FinDagger2Category two_cat_of(const std::vector<FinDaggerCategory>& cats,
                              std::uint64_t cap = kDefaultSearchCap);

// Reverses 1-cells only: hom_op(a,b) = hom(b,a), whisker sides swap,
// comp1_op(g, f) = comp1(f, g).
FinDagger2Category op2(const FinDagger2Category& K);

// Monads inside a 2-category -------------------------------------------------

struct Monad2 {
  int cell0 = -1;  // the 0-cell carrying the monad
  int t = -1;      // 1-cell in hom(cell0, cell0)
  int mu = -1;     // 2-cell t.t => t
  int eta = -1;    // 2-cell id1 => t
  bool operator==(const Monad2&) const = default;
};

// Associativity/unit laws; returns a failing-law witness if not a monad.
CheckOutcome check_monad2(const FinDagger2Category& K, const Monad2& m);
// mu . (t * mu^) == (t * mu) . (mu^ * t) with ^ the 2-cell dagger.
CheckOutcome check_frobenius2(const FinDagger2Category& K, const Monad2& m);

Monad2 identity_monad2(const FinDagger2Category& K, int cell0);

std::vector<Monad2> enumerate_monads2(const FinDagger2Category& K, int cell0,
                                      bool frobenius_only);

// 1-cells (f, sigma): (A,s) -> (D,t) with f: A -> D and sigma: t.f => f.s,
// subject to the two multiplication squares (the second is the dagger one)
// and the unit triangle.
struct MonadMorphism2 {
  int f = -1;
  int sigma = -1;
  bool operator==(const MonadMorphism2&) const = default;
};

CheckOutcome check_monad_morphism2(const FinDagger2Category& K,
                                   const Monad2& s, const Monad2& t,
                                   const MonadMorphism2& m);

// 2-cells alpha: (f,sigma) => (g,gamma) are plain 2-cells f => g making the
// sigma/gamma square commute together with its dagger-mate square.
CheckOutcome check_monad_cell2(const FinDagger2Category& K, const Monad2& s,
                               const Monad2& t, const MonadMorphism2& from,
                               const MonadMorphism2& to, int alpha);

// The 2-category of dagger Frobenius monads in K: 0-cells are the monads
// (enumerated per 0-cell of K), homs collect the morphisms above.
struct Dfmnd2Result {
  FinDagger2Category cat;
  std::vector<Monad2> monads;                       // 0-cell i of cat
  std::vector<std::vector<MonadMorphism2>> cells1;  // per (i,j) flattened row-major
  std::vector<std::vector<std::vector<int>>> cells2;  // alpha indices per (i,j)

  int monad_index(const Monad2& m) const;
};

Dfmnd2Result build_dfmnd(const FinDagger2Category& K);

// 0-cells of K embedded as identity monads; fully faithful.
Monad2 dfmnd_inclusion0(const FinDagger2Category& K, int cell0);

// Kleisli-flavoured completion: 1-cells (D,t) -> (A,s) are (f: D -> A,
// sigma: f.t => s.f), 2-cells (f,sigma) => (g,gamma) are alpha: f => s.g
// with vertical composition mu^s h . (s * beta) . alpha.
struct Completion1Cell {
  int f = -1;
  int sigma = -1;
  bool operator==(const Completion1Cell&) const = default;
};

struct CompletionResult {
  FinDagger2Category cat;
  std::vector<Monad2> monads;
  std::vector<std::vector<Completion1Cell>> cells1;
  std::vector<std::vector<std::vector<int>>> cells2;

  int monad_index(const Monad2& m) const;
};

CompletionResult build_fk_completion(const FinDagger2Category& K);

// Eilenberg-Moore-flavoured completion, obtained mechanically as
// op2(fk(op2(K))) and re-exposed with the orientation of build_dfmnd's
// 1-cells.
CompletionResult build_fem_completion(const FinDagger2Category& K);

// Algebra objects ------------------------------------------------------------

// Witness that (E, u) presents the algebra object of the monad (D,t):
// xi: t.u => u makes (u, xi) a monad morphism from the identity monad on E,
// f_t: D -> E with u.f_t = t, eps_t: f_t.u => id1(E) the counit of
// f_t -| u whose induced monad data recovers (t, mu, eta).
struct FEMObjectWitness {
  int E = -1;
  int u = -1;      // 1-cell E -> D
  int xi = -1;     // 2-cell t.u => u in hom(E, D)
  int f_t = -1;    // 1-cell D -> E
  int eps_t = -1;  // 2-cell f_t.u => id1(E) in hom(E, E)
};

// For every 0-cell A, postcomposition with (u, xi) must be a strict dagger
// isomorphism hom(A,E) -> { monad morphisms (A, id) -> (D,t) }; afterwards
// the f_t / eps_t equations are checked. Cardinality mismatches are
// reported per 0-cell.
CheckOutcome fem_object_check(const FinDagger2Category& K, const Monad2& m,
                              const FEMObjectWitness& w);

struct Adjunction2 {
  int a0 = -1;   // source 0-cell
  int b0 = -1;   // target 0-cell
  int f = -1;    // 1-cell a0 -> b0
  int u = -1;    // 1-cell b0 -> a0
  int eta = -1;  // 2-cell id1(a0) => u.f
  int eps = -1;  // 2-cell f.u => id1(b0)
};

CheckOutcome check_adjunction2(const FinDagger2Category& K,
                               const Adjunction2& adj);

Monad2 monad_from_adjunction2(const FinDagger2Category& K,
                              const Adjunction2& adj);

// Mediating comparison against an algebra-object witness of the induced
// monad: the unique n: b0 -> E with u_w.n = u and xi * n = u * eps; throws
// NoComparison / NonUnique, then asserts n.f = f_t and n * eps = eps_t * n.
int universal2_check(const FinDagger2Category& K, const Adjunction2& adj,
                     const FEMObjectWitness& w);

// t * eta == eta * t (both t => t.t).
CheckOutcome eta_commutation_check(const FinDagger2Category& K,
                                   const Monad2& m);

// Pairs correspondence: with algebra-object witnesses for (A,s) and (D,t),
// monad morphisms (f, sigma) biject with pairs (f, fbar) where
// fbar: E_s -> E_t satisfies u_t.fbar = f.u_s plus the xi square, and
// 2-cells alpha biject with abar satisfying u_t * abar = alpha * u_s.
struct PairsCorrespondence {
  std::vector<MonadMorphism2> morphisms;  // all (f, sigma)
  std::vector<int> fbar;                  // per morphism, object of hom(E_s, E_t)
  std::vector<std::array<int, 3>> cell_pairs;  // (from idx, to idx, alpha) ...
  std::vector<int> abar;                       // ... matched with abar
  bool dagger_preserving = false;
};

PairsCorrespondence fem_pairs_correspondence(const FinDagger2Category& K,
                                             const Monad2& s,
                                             const FEMObjectWitness& ws,
                                             const Monad2& t,
                                             const FEMObjectWitness& wt);

// Strict dagger 2-functors ---------------------------------------------------

struct Dagger2Functor {
  const FinDagger2Category* source = nullptr;
  const FinDagger2Category* target = nullptr;
  std::vector<int> map0;
  // Per source hom (row-major a*n+b): object and morphism maps into
  // hom(map0[a], map0[b]).
  std::vector<std::vector<int>> map1;
  std::vector<std::vector<int>> map2;
};

void validate_2functor(const FinDagger2Category& K,
                       const FinDagger2Category& L, const Dagger2Functor& F);

// Extension along the identity-monad inclusion: given F: K -> L and an
// algebra-object witness in L for the F-image of every monad 0-cell of the
// completion, produce the strict extension on the completion built by
// build_dfmnd(K). Identity monads must be given their trivial witnesses.
Dagger2Functor extend_2functor(const FinDagger2Category& K,
                               const Dfmnd2Result& dfmnd,
                               const FinDagger2Category& L,
                               const Dagger2Functor& F,
                               const std::vector<FEMObjectWitness>& witnesses);

}  // namespace daggercat
