#pragma once

#include <optional>
#include <string>
#include <vector>

#include "daggercat/functor.hpp"

namespace daggercat {

struct FrobeniusMonad {
  FinDaggerCategory base;
  DaggerFunctor T;
  NatTrans mu;   // T.T => T
  NatTrans eta;  // Id => T
  bool frobenius = false;
};

// Validates endofunctor shape, naturality, associativity and both unit laws,
// then records the Frobenius flag.
FrobeniusMonad validate_monad(const FinDaggerCategory& base,
                              const DaggerFunctor& T,
                              const std::vector<int>& mu_components,
                              const std::vector<int>& eta_components);

FrobeniusMonad identity_monad(const FinDaggerCategory& base);

// mu_{TD} . T(mu_D dagger) == T(mu_D) . mu_{TD} dagger at every object.
bool check_frobenius(const FrobeniusMonad& m);

bool is_em_algebra(const FrobeniusMonad& m, int carrier, int delta);
// Adds mu_D . T(delta dagger) == T(delta) . mu_D dagger.
bool is_fem_algebra(const FrobeniusMonad& m, int carrier, int delta);

struct EMAlgebra {
  int carrier = -1;
  int structure = -1;
  bool em = false;
  bool fem = false;
};

// All (carrier, delta) with the EM laws, flagged fem, in index order.
std::vector<EMAlgebra> algebras_for(const FrobeniusMonad& m);

struct Adjunction {
  DaggerFunctor F;    // A -> D
  DaggerFunctor U;    // D -> A
  NatTrans unit;      // Id_A => U.F
  NatTrans counit;    // F.U => Id_D
};

Adjunction validate_adjunction(const DaggerFunctor& F, const DaggerFunctor& U,
                               const std::vector<int>& unit_components,
                               const std::vector<int>& counit_components);

struct FEMCategoryResult {
  FrobeniusMonad monad;
  FinDaggerCategory fem_cat;       // objects "D@delta"
  std::vector<EMAlgebra> algebras;  // object i <-> algebras[i]
  std::vector<int> underlying;      // fem morphism -> base morphism
  DaggerFunctor U;                 // forgetful fem_cat -> base
  DaggerFunctor F;                 // free base -> fem_cat
  Adjunction adj;                  // F left adjoint to U
  NatTrans counit_xi;              // T.U => U, component at (D,delta) is delta

  int algebra_index(int carrier, int delta) const;
};

// The dagger category of Frobenius-compatible algebras and all EM
// homomorphisms. Throws NotFrobenius when the monad is not Frobenius and
// InternalClosureFailure if a dagger escapes the hom-sets (cannot happen
// for a Frobenius monad; checked anyway).
FEMCategoryResult build_fem_category(const FrobeniusMonad& m);

// (U.F, U eps F, eta); the result of a dagger adjunction is always
// Frobenius, which the construction asserts.
FrobeniusMonad monad_from_adjunction(const Adjunction& adj);

// The canonical N: D -> fem_cat with U^T.N = U and N.F = F^T. Throws
// MonadMismatch if fem was built for a different monad than the adjunction
// generates, NoComparison / NonUnique if the enumerated solution set is not
// a singleton.
DaggerFunctor comparison_functor(const Adjunction& adj,
                                 const FEMCategoryResult& fem);

// True iff the comparison functor is a dagger equivalence: some M backwards
// with unitary natural isomorphisms N.M ~ Id and Id ~ M.N, searched
// exhaustively.
bool is_monadic(const Adjunction& adj, const FEMCategoryResult& fem,
                std::uint64_t cap = kDefaultSearchCap);

}  // namespace daggercat
