#pragma once

#include "daggercat/monad.hpp"

namespace daggercat {

// Kleisli category with the canonical dagger. Objects keep the base ids;
// morphism i wraps base morphism underlying[i]: src -> T(tgt).
struct KleisliResult {
  FrobeniusMonad monad;
  FinDaggerCategory kl_cat;
  std::vector<int> underlying;   // kl morphism -> base morphism
  std::vector<int> kl_tgt;       // kl morphism -> base object (its target)
  DaggerFunctor F_T;             // base -> kl_cat
  DaggerFunctor U_T;             // kl_cat -> base
  Adjunction adj;

  int kl_index(int base_mor, int src_obj, int tgt_obj) const;
};

KleisliResult build_kleisli(const FrobeniusMonad& m);

// Hom-level universal property of the Kleisli construction: composing the
// explicit pair of functors between hom(kl_cat, X) and the algebra category
// of the monad induced on hom(base, X) by precomposition yields identities,
// and both directions preserve daggers.
CheckOutcome check_fk_universal(const FrobeniusMonad& m,
                                const FinDaggerCategory& X,
                                std::uint64_t cap = kDefaultSearchCap);

// Hom-level universal property of the algebra construction: hom(A, fem_cat)
// is isomorphic, as a dagger category, to the algebra category of the monad
// induced on hom(A, base) by postcomposition.
CheckOutcome check_fem_representability(const FinDaggerCategory& A,
                                        const FrobeniusMonad& m,
                                        std::uint64_t cap = kDefaultSearchCap);

}  // namespace daggercat
