#include "daggercat/fixtures.hpp"

#include <array>
#include <string>

namespace daggercat::fixtures {

namespace {

CategoryDescription one_object(const std::string& name,
                               const std::vector<std::string>& mors,
                               const std::string& unit) {
  CategoryDescription d;
  d.name = name;
  d.objects = {"*"};
  for (const auto& m : mors) d.morphisms.push_back({m, "*", "*"});
  d.identities["*"] = unit;
  return d;
}

}  // namespace

FinDaggerCategory one() {
  CategoryDescription d = one_object("ONE", {"1"}, "1");
  d.composition = {{"1", "1", "1"}};
  d.dagger = {{"1", "1"}};
  return validate_category(d);
}

FinDaggerCategory z2() {
  CategoryDescription d = one_object("Z2", {"1", "s"}, "1");
  d.composition = {{"1", "1", "1"}, {"1", "s", "s"}, {"s", "1", "s"}, {"s", "s", "1"}};
  d.dagger = {{"1", "1"}, {"s", "s"}};
  return validate_category(d);
}

FinDaggerCategory p2() {
  CategoryDescription d = one_object("P2", {"1", "p"}, "1");
  d.composition = {{"1", "1", "1"}, {"1", "p", "p"}, {"p", "1", "p"}, {"p", "p", "p"}};
  d.dagger = {{"1", "1"}, {"p", "p"}};
  return validate_category(d);
}

FinDaggerCategory unit_iso() {
  CategoryDescription d;
  d.name = "UNIT_ISO";
  d.objects = {"a", "b"};
  d.morphisms = {{"1a", "a", "a"}, {"1b", "b", "b"}, {"u", "a", "b"}, {"ud", "b", "a"}};
  d.identities = {{"a", "1a"}, {"b", "1b"}};
  d.composition = {{"1a", "1a", "1a"}, {"1b", "1b", "1b"}, {"u", "1a", "u"},
                   {"1b", "u", "u"},   {"ud", "1b", "ud"}, {"1a", "ud", "ud"},
                   {"ud", "u", "1a"},  {"u", "ud", "1b"}};
  d.dagger = {{"1a", "1a"}, {"1b", "1b"}, {"u", "ud"}, {"ud", "u"}};
  return validate_category(d);
}

FinDaggerCategory rel2() {
  // Relations on {0,1} as 2x2 0/1 matrices, row-major in the id.
  auto id_of = [](const std::array<int, 4>& r) {
    std::string s = "r";
    for (int bit : r) s += static_cast<char>('0' + bit);
    return s;
  };
  std::vector<std::array<int, 4>> rels;
  for (int code = 0; code < 16; ++code)
    rels.push_back({(code >> 3) & 1, (code >> 2) & 1, (code >> 1) & 1, code & 1});

  auto compose = [](const std::array<int, 4>& g, const std::array<int, 4>& f) {
    // (g . f)(i,k) = exists j: f(i,j) and g(j,k); entries (i,j) = r[2i+j].
    std::array<int, 4> out{};
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) {
        int v = 0;
        for (int j = 0; j < 2; ++j) v |= f[2 * i + j] & g[2 * j + k];
        out[2 * i + k] = v;
      }
    return out;
  };
  auto converse = [](const std::array<int, 4>& r) {
    return std::array<int, 4>{r[0], r[2], r[1], r[3]};
  };

  CategoryDescription d;
  d.name = "REL2";
  d.objects = {"*"};
  for (const auto& r : rels) d.morphisms.push_back({id_of(r), "*", "*"});
  d.identities["*"] = "r1001";
  for (const auto& g : rels)
    for (const auto& f : rels)
      d.composition.push_back({id_of(g), id_of(f), id_of(compose(g, f))});
  for (const auto& r : rels) d.dagger[id_of(r)] = id_of(converse(r));
  return validate_category(d);
}

FinDaggerCategory discrete(int n) {
  CategoryDescription d;
  d.name = "DISC" + std::to_string(n);
  for (int i = 0; i < n; ++i) {
    const std::string o = "o" + std::to_string(i);
    d.objects.push_back(o);
    d.morphisms.push_back({"1" + o, o, o});
    d.identities[o] = "1" + o;
    d.composition.push_back({"1" + o, "1" + o, "1" + o});
    d.dagger["1" + o] = "1" + o;
  }
  return validate_category(d);
}

}  // namespace daggercat::fixtures
