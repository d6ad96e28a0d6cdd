#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "daggercat/fincat.hpp"

namespace daggercat {

inline constexpr std::uint64_t kDefaultSearchCap = 10'000'000;

struct DaggerFunctor {
  FinDaggerCategory source;
  FinDaggerCategory target;
  std::vector<int> obj_map;  // per source object index
  std::vector<int> mor_map;  // per source morphism index

  bool same_maps(const DaggerFunctor& o) const {
    return obj_map == o.obj_map && mor_map == o.mor_map;
  }
};

// Checks totality, endpoints, identities, composition and dagger.
DaggerFunctor validate_functor(const FinDaggerCategory& src,
                               const FinDaggerCategory& tgt,
                               const std::map<std::string, std::string>& objects,
                               const std::map<std::string, std::string>& morphisms);
DaggerFunctor validate_functor_indexed(const FinDaggerCategory& src,
                                       const FinDaggerCategory& tgt,
                                       std::vector<int> obj_map,
                                       std::vector<int> mor_map);

DaggerFunctor identity_functor(const FinDaggerCategory& c);
// G after F. Requires F.target == G.source.
DaggerFunctor functor_compose(const DaggerFunctor& G, const DaggerFunctor& F);

struct NatTrans {
  DaggerFunctor F;
  DaggerFunctor G;
  std::vector<int> components;  // per object of F.source, morphism in target

  bool same_components(const NatTrans& o) const {
    return components == o.components && F.same_maps(o.F) && G.same_maps(o.G);
  }
};

NatTrans validate_nat(const DaggerFunctor& F, const DaggerFunctor& G,
                      const std::vector<int>& components);
NatTrans identity_nat(const DaggerFunctor& F);
// b after a (vertical).
NatTrans nat_vcomp(const NatTrans& b, const NatTrans& a);
// Horizontal composition: s lives one level up (between functors B -> C),
// t between functors A -> B; the result runs between the composites.
NatTrans nat_hcomp(const NatTrans& s, const NatTrans& t);
NatTrans nat_dagger(const NatTrans& a);
// H * a and b * K (whiskering).
NatTrans whisker_left(const DaggerFunctor& H, const NatTrans& a);
NatTrans whisker_right(const NatTrans& b, const DaggerFunctor& K);

// All dagger functors A -> B in lexicographic order of (object, generator)
// choices. Enumeration walks a generator/derivation plan for A, so large
// hom-sets stay tractable; visiting more than `cap` candidate nodes throws
// SearchSpaceTooLarge.
std::vector<DaggerFunctor> all_dagger_functors(const FinDaggerCategory& A,
                                               const FinDaggerCategory& B,
                                               std::uint64_t cap = kDefaultSearchCap);
std::vector<NatTrans> all_nats(const DaggerFunctor& F, const DaggerFunctor& G);

// The dagger category of all dagger functors A -> D and all natural
// transformations between them. Object i is functors[i]; morphism j is
// nats[j].
struct HomCategoryResult {
  FinDaggerCategory cat;
  std::vector<DaggerFunctor> functors;
  std::vector<NatTrans> nats;

  int functor_index(const DaggerFunctor& F) const;
  int nat_index(const NatTrans& n) const;
};

HomCategoryResult hom_category(const FinDaggerCategory& A,
                               const FinDaggerCategory& D,
                               std::uint64_t cap = kDefaultSearchCap);

}  // namespace daggercat
