#include "daggercat/monad.hpp"

#include <string>
#include <vector>

#include "daggercat/fixtures.hpp"
#include "harness.hpp"

using namespace daggercat;

namespace {

FrobeniusMonad ts_monad() {
  const auto z2 = fixtures::z2();
  const int s = z2.morphism_index("s");
  return validate_monad(z2, identity_functor(z2), {s}, {s});
}

// Exhaustive monad search on a small base, counting validate_monad successes.
struct MonadCount {
  int total = 0;
  int frobenius = 0;
};

MonadCount count_monads(const FinDaggerCategory& c) {
  MonadCount out;
  const auto idc = identity_functor(c);
  for (const auto& T : all_dagger_functors(c, c)) {
    const auto TT = functor_compose(T, T);
    for (const auto& mu : all_nats(TT, T))
      for (const auto& eta : all_nats(idc, T)) {
        try {
          const auto m = validate_monad(c, T, mu.components, eta.components);
          ++out.total;
          if (m.frobenius) ++out.frobenius;
        } catch (const ValidationError&) {
        }
      }
  }
  return out;
}

void monad_validation() {
  const auto z2 = fixtures::z2();
  const int e = z2.morphism_index("1");
  const int s = z2.morphism_index("s");
  const auto idf = identity_functor(z2);

  const auto ts = ts_monad();
  expect(ts.frobenius && check_frobenius(ts), "ts is a Frobenius monad");
  expect(identity_monad(z2).frobenius, "identity monad on z2 is Frobenius");

  expect_kind([&] { validate_monad(z2, idf, {s}, {e}); }, ErrKind::UnitFail,
              "mu = s with eta = 1 has no unit");
  expect_kind([&] { validate_monad(z2, idf, {e}, {s}); }, ErrKind::UnitFail,
              "mu = 1 with eta = s has no unit");
  expect_kind(
      [&] { validate_monad(fixtures::p2(), idf, {e}, {e}); },
      ErrKind::NotDaggerEndofunctor, "endofunctor of the wrong base");
}

void monad_counts() {
  const auto one = count_monads(fixtures::one());
  expect(one.total == 1 && one.frobenius == 1, "one carries a single monad");
  const auto z2 = count_monads(fixtures::z2());
  expect(z2.total == 2 && z2.frobenius == 2, "z2 carries two monads");
  const auto p2 = count_monads(fixtures::p2());
  expect(p2.total == 1 && p2.frobenius == 1, "p2 carries a single monad");
  const auto ui = count_monads(fixtures::unit_iso());
  expect(ui.total == 4 && ui.frobenius == 4, "unit_iso carries four monads");
}

void algebras() {
  const auto ts = ts_monad();
  const auto& z2 = ts.base;
  const int e = z2.morphism_index("1");
  const int s = z2.morphism_index("s");

  const auto ts_algs = algebras_for(ts);
  expect(ts_algs.size() == 1, "ts has one algebra");
  expect(ts_algs[0].structure == s && ts_algs[0].em && ts_algs[0].fem,
         "the ts algebra is (*, s) and Frobenius-compatible");
  expect(!is_em_algebra(ts, 0, e), "(*, 1) is not a ts algebra");

  const auto id_algs = algebras_for(identity_monad(z2));
  expect(id_algs.size() == 1 && id_algs[0].structure == e,
         "identity monad on z2 has the trivial algebra only");

  // delta dagger must be an algebra morphism into the free algebra: for the
  // ts algebra, s . s = 1 = mu . T(s).
  const int delta = ts_algs[0].structure;
  const int delta_dag = z2.dagger[static_cast<std::size_t>(delta)];
  const int lhs = z2.comp(delta_dag, delta);
  const int rhs = z2.comp(ts.mu.components[0],
                          ts.T.mor_map[static_cast<std::size_t>(delta_dag)]);
  expect(lhs == rhs, "delta dagger is a morphism of algebras");
}

void fem_category_of_ts() {
  const auto ts = ts_monad();
  const auto fem = build_fem_category(ts);
  const auto& z2 = ts.base;
  const int s = z2.morphism_index("s");

  expect(fem.fem_cat.objects.size() == 1 && fem.fem_cat.morphisms.size() == 2,
         "fem(ts) has one object and two morphisms");
  expect(fem.fem_cat.objects[0] == "*@s", "fem object is named by its algebra");
  expect_no_throw([&] { validate_category(describe(fem.fem_cat)); },
                  "fem(ts) is a valid dagger category");
  expect(fem.algebra_index(0, s) == 0, "algebra_index finds (*, s)");
  expect(fem.algebra_index(0, z2.morphism_index("1")) == -1,
         "algebra_index rejects non-algebras");
  expect(fem.counit_xi.components[0] == s, "xi component at (*, s) is s");

  // fem(ts) is z2 in disguise: the nonidentity morphism squares to the
  // identity, is self-adjoint and unitary.
  const auto& K = fem.fem_cat;
  const int nid = 1 - K.identity[0];
  expect(K.comp(nid, nid) == K.identity[0] && K.dagger[nid] == nid &&
             is_unitary(K, nid),
         "fem(ts) is isomorphic to z2");

  const auto rt = monad_from_adjunction(fem.adj);
  expect(rt.base == ts.base && rt.T.same_maps(ts.T) &&
             rt.mu.components == ts.mu.components &&
             rt.eta.components == ts.eta.components && rt.frobenius,
         "the fem adjunction recovers ts on the nose");

  const auto N = comparison_functor(fem.adj, fem);
  expect(N.same_maps(identity_functor(fem.fem_cat)),
         "comparison of the fem adjunction is the identity");
  expect(is_monadic(fem.adj, fem), "the fem adjunction is monadic");
}

void fem_category_of_const_a() {
  // The constant endofunctor of unit_iso at a carries a monad whose algebra
  // category contains both (a, 1a) and (b, u).
  const auto ui = fixtures::unit_iso();
  const auto consts = all_dagger_functors(fixtures::one(), ui);
  DaggerFunctor emb = consts[0];
  if (ui.objects[static_cast<std::size_t>(emb.obj_map[0])] != "a")
    emb = consts[1];
  const auto collapse = all_dagger_functors(ui, fixtures::one())[0];
  const auto T = functor_compose(emb, collapse);

  const int oa = ui.object_index("a");
  const int ob = ui.object_index("b");
  const auto m = validate_monad(
      ui, T,
      {ui.identity[static_cast<std::size_t>(oa)],
       ui.identity[static_cast<std::size_t>(oa)]},
      {ui.identity[static_cast<std::size_t>(oa)], ui.morphism_index("ud")});
  expect(m.frobenius, "the constant monad at a is Frobenius");

  const auto algs = algebras_for(m);
  expect(algs.size() == 2, "the constant monad has two algebras");
  const auto fem = build_fem_category(m);
  expect(fem.algebra_index(oa, ui.morphism_index("1a")) >= 0 &&
             fem.algebra_index(ob, ui.morphism_index("u")) >= 0,
         "algebras are (a, 1a) and (b, u)");
  expect(fem.fem_cat.morphisms.size() == 4,
         "fem of the constant monad is unit_iso in disguise");
}

void monadic_positive() {
  // unit_iso over one: the collapse is right adjoint to the embedding at a,
  // the induced monad is the constant monad, and the comparison from one into
  // its two-object algebra category is still a dagger equivalence because
  // both algebras are unitarily isomorphic.
  const auto ui = fixtures::unit_iso();
  const auto one = fixtures::one();
  const auto consts = all_dagger_functors(one, ui);
  DaggerFunctor U = consts[0];
  if (ui.objects[static_cast<std::size_t>(U.obj_map[0])] != "a") U = consts[1];
  const auto F = all_dagger_functors(ui, one)[0];

  const int oa = ui.object_index("a");
  const auto adj = validate_adjunction(
      F, U,
      {ui.identity[static_cast<std::size_t>(oa)], ui.morphism_index("ud")},
      {one.identity[0]});
  const auto m = monad_from_adjunction(adj);
  expect(m.frobenius, "the collapse adjunction induces a Frobenius monad");

  const auto fem = build_fem_category(m);
  expect(is_monadic(adj, fem), "unit_iso over one is monadic");
}

// The split idempotent category: objects *, e with p = i . r and r . i = 1e.
FinDaggerCategory split_p2() {
  CategoryDescription d;
  d.name = "splitp2";
  d.objects = {"*", "e"};
  d.morphisms = {{"1", "*", "*"}, {"p", "*", "*"}, {"r", "*", "e"},
                 {"i", "e", "*"}, {"1e", "e", "e"}};
  d.identities = {{"*", "1"}, {"e", "1e"}};
  d.composition = {{"1", "1", "1"},   {"1", "p", "p"},  {"1", "i", "i"},
                   {"p", "1", "p"},   {"p", "p", "p"},  {"p", "i", "i"},
                   {"r", "1", "r"},   {"r", "p", "r"},  {"r", "i", "1e"},
                   {"i", "r", "p"},   {"i", "1e", "i"}, {"1e", "r", "r"},
                   {"1e", "1e", "1e"}};
  d.dagger = {{"1", "1"}, {"p", "p"}, {"r", "i"}, {"i", "r"}, {"1e", "1e"}};
  return validate_category(d);
}

void monadic_negative() {
  // one into the split idempotent category: F picks e, U collapses. The
  // induced monad on one is the identity, so its algebra category is one,
  // but the comparison from split_p2 cannot be faithful.
  const auto sp = split_p2();
  const auto one = fixtures::one();

  DaggerFunctor F;
  bool found = false;
  for (const auto& cand : all_dagger_functors(one, sp))
    if (sp.objects[static_cast<std::size_t>(cand.obj_map[0])] == "e") {
      F = cand;
      found = true;
    }
  expect(found, "one embeds at the retract e");
  const auto U = all_dagger_functors(sp, one)[0];

  const auto adj = validate_adjunction(
      F, U, {one.identity[0]},
      {sp.morphism_index("i"), sp.morphism_index("1e")});
  const auto m = monad_from_adjunction(adj);
  const auto fem = build_fem_category(m);
  expect_no_throw([&] { comparison_functor(adj, fem); },
                  "the comparison to the identity monad algebras exists");
  expect(!is_monadic(adj, fem), "the split idempotent adjunction is not monadic");
}

void no_adjunction_to_endofunctors() {
  // There is no dagger adjunction in either direction between z2 and its
  // endofunctor category (two disconnected copies of z2): every candidate
  // unit or counit dies on naturality or a triangle identity.
  const auto z2 = fixtures::z2();
  const auto H = hom_category(z2, z2).cat;

  int adjunctions = 0;
  auto try_all = [&adjunctions](const FinDaggerCategory& A,
                                const FinDaggerCategory& D) {
    const auto idA = identity_functor(A);
    const auto idD = identity_functor(D);
    for (const auto& F : all_dagger_functors(A, D))
      for (const auto& U : all_dagger_functors(D, A)) {
        const auto UF = functor_compose(U, F);
        const auto FU = functor_compose(F, U);
        for (const auto& unit : all_nats(idA, UF))
          for (const auto& counit : all_nats(FU, idD)) {
            try {
              validate_adjunction(F, U, unit.components, counit.components);
              ++adjunctions;
            } catch (const ValidationError&) {
            }
          }
      }
  };
  try_all(z2, H);
  try_all(H, z2);
  expect(adjunctions == 0,
         "no dagger adjunction between z2 and its endofunctor category");
}

}  // namespace

int main() {
  monad_validation();
  monad_counts();
  algebras();
  fem_category_of_ts();
  fem_category_of_const_a();
  monadic_positive();
  monadic_negative();
  no_adjunction_to_endofunctors();
  return finish("test_monad");
}
