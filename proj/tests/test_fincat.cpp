#include "daggercat/fincat.hpp"

#include <string>

#include "daggercat/fixtures.hpp"
#include "harness.hpp"

using namespace daggercat;

namespace {

// A throwaway one-object description we can corrupt per test.
CategoryDescription z2_desc() { return describe(fixtures::z2()); }

void fixture_tables() {
  const auto z2 = fixtures::z2();
  const int s = z2.morphism_index("s");
  const int e = z2.morphism_index("1");
  expect(z2.comp(s, s) == e, "z2: s.s = 1");
  expect(z2.dagger[s] == s, "z2: s dagger = s");
  expect(z2.identity[0] == e, "z2: identity is 1");

  const auto p2 = fixtures::p2();
  const int p = p2.morphism_index("p");
  expect(p2.comp(p, p) == p, "p2: p.p = p");

  const auto ui = fixtures::unit_iso();
  const int u = ui.morphism_index("u");
  const int ud = ui.morphism_index("ud");
  expect(ui.comp(ud, u) == ui.morphism_index("1a"), "unit_iso: ud.u = 1a");
  expect(ui.comp(u, ud) == ui.morphism_index("1b"), "unit_iso: u.ud = 1b");
  expect(ui.dagger[u] == ud, "unit_iso: u dagger = ud");

  const auto r = fixtures::rel2();
  expect(static_cast<int>(r.morphisms.size()) == 16, "rel2 has 16 relations");
  expect(r.identity[0] == r.morphism_index("r1001"), "rel2 identity r1001");
  // converse swaps the off-diagonal matrix entries
  expect(r.dagger[r.morphism_index("r0100")] == r.morphism_index("r0010"),
         "rel2: converse of r0100 is r0010");
  expect(r.dagger[r.morphism_index("r0110")] == r.morphism_index("r0110"),
         "rel2: r0110 is self-converse");
  // relational composite: r0100 (only 1->2) after r0010 (only 2->1)
  expect(r.comp(r.morphism_index("r0100"), r.morphism_index("r0010")) ==
             r.morphism_index("r0001"),
         "rel2: r0100 . r0010 = r0001");

  const auto d3 = fixtures::discrete(3);
  expect(d3.objects.size() == 3 && d3.morphisms.size() == 3,
         "discrete(3) is identities only");
  expect(d3.morphism_index("nope") == -1 && d3.object_index("nope") == -1,
         "unknown ids index as -1");
}

void hom_and_composability() {
  const auto ui = fixtures::unit_iso();
  const int a = ui.object_index("a");
  const int b = ui.object_index("b");
  expect(ui.hom(a, b).size() == 1, "unit_iso: hom(a,b) = {u}");
  expect(ui.hom(b, b).size() == 1, "unit_iso: hom(b,b) = {1b}");
  expect_kind([&] { ui.comp(ui.morphism_index("u"), ui.morphism_index("u")); },
              ErrKind::NotComposable, "u.u is not composable");
}

void describe_round_trip() {
  for (const auto& c : {fixtures::one(), fixtures::z2(), fixtures::p2(),
                        fixtures::unit_iso(), fixtures::rel2()}) {
    expect(validate_category(describe(c)) == c,
           c.name + ": describe/validate round trip");
  }
}

void structural_errors() {
  {
    auto d = z2_desc();
    d.morphisms.push_back({"t", "*", "nowhere"});
    expect_kind([&] { validate_category(d); }, ErrKind::DanglingReference,
                "dangling target object");
  }
  {
    auto d = z2_desc();
    d.morphisms.push_back({"s", "*", "*"});
    expect_kind([&] { validate_category(d); }, ErrKind::DuplicateId,
                "duplicate morphism id");
  }
  {
    auto d = z2_desc();
    d.composition.pop_back();
    expect_kind([&] { validate_category(d); }, ErrKind::MissingComposite,
                "composable pair missing from the table");
  }
  {
    auto d = z2_desc();
    d.composition.push_back({"s", "s", "s"});
    expect_kind([&] { validate_category(d); }, ErrKind::DuplicateId,
                "contradictory extra composite row");
  }
  {
    auto d = describe(fixtures::unit_iso());
    d.composition.push_back({"u", "u", "u"});
    expect_kind([&] { validate_category(d); }, ErrKind::SpuriousComposite,
                "composite row for a non-composable pair");
  }
}

void law_errors() {
  {
    // one object, morphisms {1, a, b}; a.a = b, b.a = 1, a.b = a breaks
    // associativity: (a.a).a = 1 but a.(a.a) = a
    CategoryDescription d;
    d.name = "nonassoc";
    d.objects = {"*"};
    for (const char* m : {"1", "a", "b"}) d.morphisms.push_back({m, "*", "*"});
    d.identities = {{"*", "1"}};
    d.composition = {{"1", "1", "1"}, {"1", "a", "a"}, {"1", "b", "b"},
                     {"a", "1", "a"}, {"b", "1", "b"}, {"a", "a", "b"},
                     {"b", "a", "1"}, {"a", "b", "a"}, {"b", "b", "b"}};
    d.dagger = {{"1", "1"}, {"a", "a"}, {"b", "b"}};
    expect_kind([&] { validate_category(d); }, ErrKind::NonAssociative,
                "non-associative composition");
  }
  {
    auto d = z2_desc();
    d.composition = {{"1", "1", "1"}, {"1", "s", "s"}, {"s", "1", "1"},
                     {"s", "s", "1"}};
    expect_kind([&] { validate_category(d); }, ErrKind::BadIdentity,
                "s.1 = 1 breaks the identity law");
  }
  {
    auto d = z2_desc();
    d.dagger = {{"1", "s"}, {"s", "1"}};
    expect_kind([&] { validate_category(d); }, ErrKind::DaggerNotFunctorial,
                "dagger swapping 1 and s");
  }
  {
    auto d = describe(fixtures::unit_iso());
    d.dagger["u"] = "u";
    d.dagger["ud"] = "ud";
    expect_kind([&] { validate_category(d); }, ErrKind::DaggerWrongEndpoints,
                "dagger must reverse endpoints");
  }
  {
    // p2 with dagger p -> 1 is not involutive (1 -> 1 stays)
    auto d = describe(fixtures::p2());
    d.dagger["p"] = "1";
    expect_kind([&] { validate_category(d); }, ErrKind::DaggerNotInvolutive,
                "non-involutive dagger");
  }
}

void opposite_category() {
  const auto r = fixtures::rel2();
  const auto op = opposite(r);
  expect_no_throw([&] { validate_category(describe(op)); },
                  "opposite(rel2) is a valid dagger category");
  expect(opposite(op) == r, "opposite is involutive on rel2");
  const int x = r.morphism_index("r0111");
  const int y = r.morphism_index("r1100");
  expect(op.comp(y, x) == r.comp(x, y), "opposite swaps composition order");
  expect(opposite(opposite(fixtures::unit_iso())) == fixtures::unit_iso(),
         "opposite is involutive on unit_iso");
}

void unitarity() {
  const auto z2 = fixtures::z2();
  expect(is_unitary(z2, "s"), "z2: s is unitary");
  expect(!is_unitary(fixtures::p2(), "p"), "p2: p is not unitary");
  const auto ui = fixtures::unit_iso();
  expect(is_unitary(ui, "u") && is_unitary(ui, "ud"),
         "unit_iso: u and ud are unitary");

  const auto r = fixtures::rel2();
  int unitaries = 0;
  for (int m = 0; m < static_cast<int>(r.morphisms.size()); ++m)
    if (is_unitary(r, m)) ++unitaries;
  expect(unitaries == 2, "rel2 has exactly the two permutation unitaries");
  expect(is_unitary(r, "r1001") && is_unitary(r, "r0110"),
         "rel2: r1001 and r0110 are unitary");
  expect_kind([&] { is_unitary(r, "r2"); }, ErrKind::UnknownMorphism,
              "unitarity query for unknown id");
}

}  // namespace

int main() {
  fixture_tables();
  hom_and_composability();
  describe_round_trip();
  structural_errors();
  law_errors();
  opposite_category();
  unitarity();
  return finish("test_fincat");
}
