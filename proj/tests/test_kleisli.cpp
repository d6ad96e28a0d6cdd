#include "daggercat/kleisli.hpp"

#include <string>

#include "daggercat/fixtures.hpp"
#include "harness.hpp"

using namespace daggercat;

namespace {

FrobeniusMonad ts_monad() {
  const auto z2 = fixtures::z2();
  const int s = z2.morphism_index("s");
  return validate_monad(z2, identity_functor(z2), {s}, {s});
}

void kleisli_of_ts() {
  const auto ts = ts_monad();
  const auto kl = build_kleisli(ts);
  const auto& K = kl.kl_cat;
  const auto& z2 = ts.base;
  const int e = z2.morphism_index("1");
  const int s = z2.morphism_index("s");

  expect(K.objects == z2.objects, "kleisli keeps the base objects");
  expect(K.morphisms.size() == 2, "kleisli of ts has two morphisms");
  expect_no_throw([&] { validate_category(describe(K)); },
                  "kleisli of ts is a valid dagger category");

  // Kleisli composition twists by mu: the wrapped identity composes with
  // itself to mu . T(1) . 1 = s, so the wrapped 1 is NOT the kl identity.
  const int k1 = kl.kl_index(e, 0, 0);
  const int ks = kl.kl_index(s, 0, 0);
  expect(k1 >= 0 && ks >= 0, "kl_index finds both wrapped morphisms");
  expect(K.comp(k1, k1) == ks, "wrapped 1 . wrapped 1 = wrapped s");
  expect(K.comp(ks, ks) == ks, "wrapped s . wrapped s = wrapped s");
  expect(K.identity[0] == ks, "the kl identity is eta = s");
  expect(K.dagger[k1] == k1 && K.dagger[ks] == ks,
         "the canonical dagger fixes both wrapped morphisms");

  // kl(ts) is z2 in disguise: the non-identity morphism squares to the
  // identity and is unitary.
  const int nid = 1 - K.identity[0];
  expect(K.comp(nid, nid) == K.identity[0] && is_unitary(K, nid),
         "kl(ts) is isomorphic to z2");

  // Free/forgetful shape: U_T wraps the endofunctor, F_T is bijective on
  // objects, and the adjunction recovers ts on the nose.
  expect(kl.F_T.source == z2 && kl.U_T.target == z2, "functor endpoints");
  const auto rt = monad_from_adjunction(kl.adj);
  expect(rt.base == ts.base && rt.T.same_maps(ts.T) &&
             rt.mu.components == ts.mu.components &&
             rt.eta.components == ts.eta.components && rt.frobenius,
         "the kleisli adjunction recovers ts on the nose");
}

void kleisli_of_identity() {
  // For the identity monad the twist is trivial: wrapping is a dagger
  // isomorphism onto the base tables.
  const auto z2 = fixtures::z2();
  const auto kl = build_kleisli(identity_monad(z2));
  const auto& K = kl.kl_cat;
  expect(K.morphisms.size() == 2, "identity kleisli keeps both morphisms");

  const int n = static_cast<int>(z2.morphisms.size());
  auto wrap = [&](int f) { return kl.kl_index(f, z2.src(f), z2.tgt(f)); };
  expect(K.identity[0] == wrap(z2.identity[0]),
         "identity kleisli keeps the identity");
  bool same = true;
  for (int g = 0; g < n; ++g) {
    if (K.dagger[static_cast<std::size_t>(wrap(g))] != wrap(z2.dagger[static_cast<std::size_t>(g)]))
      same = false;
    for (int f = 0; f < n; ++f)
      if (K.comp(wrap(g), wrap(f)) != wrap(z2.comp(g, f))) same = false;
  }
  expect(same, "identity kleisli tables match the base under wrapping");
}

void kleisli_across_fixtures() {
  // Every monad on the corpus yields a valid Kleisli dagger category whose
  // adjunction gives back the monad.
  for (const auto& c : {fixtures::one(), fixtures::z2(), fixtures::p2(),
                        fixtures::unit_iso()}) {
    const auto idc = identity_functor(c);
    for (const auto& T : all_dagger_functors(c, c)) {
      const auto TT = functor_compose(T, T);
      for (const auto& mu : all_nats(TT, T))
        for (const auto& eta : all_nats(idc, T)) {
          FrobeniusMonad m;
          try {
            m = validate_monad(c, T, mu.components, eta.components);
          } catch (const ValidationError&) {
            continue;
          }
          const auto kl = build_kleisli(m);
          expect_no_throw([&] { validate_category(describe(kl.kl_cat)); },
                          c.name + ": kleisli category is valid");
          const auto rt = monad_from_adjunction(kl.adj);
          expect(rt.T.same_maps(m.T) &&
                     rt.mu.components == m.mu.components &&
                     rt.eta.components == m.eta.components,
                 c.name + ": kleisli adjunction round trip");
        }
    }
  }
}

void comparison_and_monadicity() {
  const auto ts = ts_monad();
  const auto kl = build_kleisli(ts);
  const auto fem = build_fem_category(ts);

  const auto N = comparison_functor(kl.adj, fem);
  expect(N.source == kl.kl_cat && N.target == fem.fem_cat,
         "comparison runs from kleisli to the algebras");
  expect(is_monadic(kl.adj, fem), "the kleisli adjunction of ts is monadic");

  // Mismatched monads are rejected.
  const auto id_fem = build_fem_category(identity_monad(ts.base));
  expect_kind([&] { comparison_functor(kl.adj, id_fem); },
              ErrKind::MonadMismatch, "comparison against the wrong algebras");
}

void universality() {
  const auto ts = ts_monad();
  const auto id_z2 = identity_monad(fixtures::z2());
  const auto id_one = identity_monad(fixtures::one());

  const auto a = check_fk_universal(ts, fixtures::z2());
  expect(a.ok, "fk universal: ts against z2 (" + a.witness + ")");
  const auto b = check_fk_universal(id_z2, fixtures::z2());
  expect(b.ok, "fk universal: identity monad against z2 (" + b.witness + ")");
  const auto c = check_fk_universal(id_one, fixtures::one());
  expect(c.ok, "fk universal: identity monad against one (" + c.witness + ")");

  const auto d = check_fem_representability(fixtures::one(), ts);
  expect(d.ok, "fem representability: one against ts (" + d.witness + ")");
  const auto e = check_fem_representability(fixtures::z2(), ts);
  expect(e.ok, "fem representability: z2 against ts (" + e.witness + ")");
  const auto f = check_fem_representability(fixtures::z2(), id_z2);
  expect(f.ok,
         "fem representability: z2 against the identity monad (" + f.witness +
             ")");
}

}  // namespace

int main() {
  kleisli_of_ts();
  kleisli_of_identity();
  kleisli_across_fixtures();
  comparison_and_monadicity();
  universality();
  return finish("test_kleisli");
}
