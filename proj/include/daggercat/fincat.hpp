#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "daggercat/errors.hpp"

namespace daggercat {

// Raw, unvalidated tables as they appear in input files.
struct MorphismDecl {
  std::string id;
  std::string src;
  std::string tgt;
};

struct CategoryDescription {
  std::string name;  // optional label, carried through for messages
  std::vector<std::string> objects;
  std::vector<MorphismDecl> morphisms;
  std::map<std::string, std::string> identities;   // object -> morphism
  std::vector<std::array<std::string, 3>> composition;  // {g, f, g.f}
  std::map<std::string, std::string> dagger;       // morphism -> morphism
};

struct MorphismRec {
  std::string id;
  int src = -1;
  int tgt = -1;
  bool operator==(const MorphismRec&) const = default;
};

// A finite dagger category in validated table form. Objects and morphisms
// are stored sorted by id, so indices are canonical and two categories are
// equal exactly when their tables are.
struct FinDaggerCategory {
  std::string name;
  std::vector<std::string> objects;
  std::vector<MorphismRec> morphisms;
  std::vector<int> identity;               // object index -> morphism index
  std::vector<std::vector<int>> compose;   // [g][f] -> g.f, -1 when undefined
  std::vector<int> dagger;                 // morphism index -> morphism index

  int object_index(const std::string& id) const;
  int morphism_index(const std::string& id) const;
  int src(int m) const { return morphisms[m].src; }
  int tgt(int m) const { return morphisms[m].tgt; }
  const std::string& mid(int m) const { return morphisms[m].id; }
  bool composable(int g, int f) const { return src(g) == tgt(f); }
  // g.f for composable pairs; throws NotComposable otherwise.
  int comp(int g, int f) const;
  std::vector<int> hom(int a, int b) const;

  bool operator==(const FinDaggerCategory& o) const {
    return objects == o.objects && morphisms == o.morphisms &&
           identity == o.identity && compose == o.compose && dagger == o.dagger;
  }
};

// Checks every axiom and returns canonical tables. Throws ValidationError
// naming the first offending tuple (morphisms are scanned in id order).
FinDaggerCategory validate_category(const CategoryDescription& desc);

// Same tables with composition reversed. Involutive on the nose.
FinDaggerCategory opposite(const FinDaggerCategory& c);

bool is_unitary(const FinDaggerCategory& c, int m);
// By-id variant; throws UnknownMorphism for unknown ids.
bool is_unitary(const FinDaggerCategory& c, const std::string& id);

CategoryDescription describe(const FinDaggerCategory& c);

}  // namespace daggercat
