#include "daggercat/lax.hpp"

#include <string>
#include <vector>

#include "daggercat/fixtures.hpp"
#include "harness.hpp"

using namespace daggercat;

namespace {

constexpr int k1 = 0;  // 2-cell "1" in the suspension of z2
constexpr int ks = 1;  // 2-cell "s"

// Strict identity lax functor on the suspension of z2.
DaggerLaxFunctor identity_lax(const FinDagger2Category& S) {
  DaggerLaxFunctor F;
  F.source = &S;
  F.target = &S;
  F.map0 = {0};
  F.map1 = {{0}};
  F.map2 = {{k1, ks}};
  F.gamma = {{k1}};
  F.delta = {k1};
  return F;
}

void trivial_source() {
  const auto T = trivial_2category();
  expect_no_throw([&] { validate_2category(T); }, "trivial 2-category validates");
  expect(T.n0() == 1 && T.hom(0, 0).objects.size() == 1 &&
             T.hom(0, 0).morphisms.size() == 1,
         "trivial 2-category has one 1-cell and one 2-cell");
}

void monads_as_lax_functors() {
  const auto T = trivial_2category();
  const auto S = suspension(fixtures::z2(), "sz2");

  const Monad2 ts{0, 0, ks, ks};
  const auto F = monad_to_lax(T, S, ts);
  expect_no_throw([&] { validate_lax_functor(T, S, F); },
                  "ts as a lax functor validates");
  expect(lax_to_monad(F) == ts, "lax_to_monad round trip for ts");

  // Round trip and validity for every monad on every 0-cell of a 2-category
  // with genuine whiskers; validity must coincide with the Frobenius law.
  const auto W = two_cat_of({fixtures::one(), fixtures::z2()});
  int seen = 0;
  for (const auto* K : {&S, &W})
    for (int a = 0; a < K->n0(); ++a)
      for (const auto& m : enumerate_monads2(*K, a, false)) {
        const auto G = monad_to_lax(T, *K, m);
        bool ok = true;
        try {
          validate_lax_functor(T, *K, G);
        } catch (const ValidationError&) {
          ok = false;
        }
        expect(ok == check_frobenius2(*K, m).ok,
               "lax validity tracks the Frobenius law");
        if (ok) {
          expect(lax_to_monad(G) == m, "lax_to_monad round trip");
          ++seen;
        }
      }
  expect(seen >= 5, "the sweep saw the whole monad corpus");

  // A non-monad datum must be rejected.
  const auto bad = monad_to_lax(T, S, Monad2{0, 0, ks, k1});
  expect_kind([&] { validate_lax_functor(T, S, bad); }, ErrKind::LaxCoherenceFail,
              "mu = s, eta = 1 is not lax coherent");

  // lax_to_monad refuses sources with more than one 1-cell.
  const auto idS = identity_lax(S);
  expect_no_throw([&] { validate_lax_functor(S, S, idS); },
                  "the strict identity is a dagger lax functor");
  expect_kind([&] { lax_to_monad(idS); }, ErrKind::SourceNotTerminal,
              "lax_to_monad needs the trivial source");
}

void composition() {
  const auto T = trivial_2category();
  const auto S = suspension(fixtures::z2(), "sz2");
  const Monad2 ts{0, 0, ks, ks};
  const auto F = monad_to_lax(T, S, ts);
  const auto idS = identity_lax(S);

  const auto C = compose_lax(idS, F);
  expect_no_throw([&] { validate_lax_functor(T, S, C); },
                  "identity . ts validates");
  expect(C.map0 == F.map0 && C.map1 == F.map1 && C.map2 == F.map2 &&
             C.gamma == F.gamma && C.delta == F.delta,
         "composing with the strict identity changes nothing");
  expect(lax_to_monad(C) == ts, "the composite still presents ts");
}

void lax_naturals() {
  const auto T = trivial_2category();
  const auto S = suspension(fixtures::z2(), "sz2");
  const Monad2 ts{0, 0, ks, ks};
  const auto F = monad_to_lax(T, S, ts);
  const auto D = delta_const(T, S, 0);
  expect_no_throw([&] { validate_lax_functor(T, S, D); },
                  "the constant weight validates");

  // Cones over ts from the constant weight: tau must be s; tau = 1 breaks
  // the composition coherence.
  DaggerLaxNat good{{0}, {{ks}}};
  expect_no_throw([&] { validate_lax_nat(T, S, D, F, good); },
                  "alpha = t0, tau = s is a dagger lax natural");
  DaggerLaxNat bad{{0}, {{k1}}};
  expect_kind([&] { validate_lax_nat(T, S, D, F, bad); },
              ErrKind::LaxCoherenceFail, "tau = 1 is not a dagger lax natural");

  const auto idn = identity_lax_nat(T, S, F);
  expect_no_throw([&] { validate_lax_nat(T, S, F, F, idn); },
                  "the identity lax natural validates");
  const auto v = vcomp_lax_nat(T, S, F, F, F, idn, idn);
  expect(v.alpha == idn.alpha && v.tau == idn.tau,
         "vertical composition of identities is the identity");
}

void modifications_and_hom() {
  const auto T = trivial_2category();
  const auto S = suspension(fixtures::z2(), "sz2");
  const Monad2 ts{0, 0, ks, ks};
  const auto F = monad_to_lax(T, S, ts);
  const auto D = delta_const(T, S, 0);
  const DaggerLaxNat cone{{0}, {{ks}}};

  DaggerModification m1{{k1}};
  DaggerModification m1s{{ks}};
  expect_no_throw([&] { validate_modification(T, S, D, F, cone, cone, m1); },
                  "xi = 1 is a modification");
  expect_no_throw([&] { validate_modification(T, S, D, F, cone, cone, m1s); },
                  "xi = s is a modification");
  const auto md = modification_dagger(T, S, D, F, m1s);
  expect(md.xi == m1s.xi, "s is self-adjoint as a modification");

  const auto H = daglax_hom(T, S, F, 0);
  expect(H.nats.size() == 1, "a single cone from the point");
  expect(H.mods.size() == 2, "two modifications of the cone");
  expect(H.cat.objects.size() == 1 && H.cat.morphisms.size() == 2,
         "daglax_hom category shape");
  expect_no_throw([&] { validate_category(describe(H.cat)); },
                  "daglax_hom is a valid dagger category");
  const int nid = 1 - H.cat.identity[0];
  expect(H.cat.comp(nid, nid) == H.cat.identity[0] && is_unitary(H.cat, nid),
         "daglax_hom of ts is z2 in disguise");
  expect(H.mod_endpoints[0] == std::make_pair(0, 0) &&
             H.mod_endpoints[1] == std::make_pair(0, 0),
         "both modifications are endomorphisms of the cone");
}

void lax_limits() {
  const auto T = trivial_2category();
  const auto S = suspension(fixtures::z2(), "sz2");
  const Monad2 ts{0, 0, ks, ks};
  const auto F = monad_to_lax(T, S, ts);

  const DaggerLaxNat pi{{0}, {{ks}}};
  const auto good = check_dagger_lax_limit(T, S, F, 0, pi);
  expect(good.ok, "(*, s) presents the lax limit of ts (" + good.witness + ")");

  const DaggerLaxNat badpi{{0}, {{k1}}};
  const auto bad = check_dagger_lax_limit(T, S, F, 0, badpi);
  expect(!bad.ok && bad.witness.find("not a lax natural") != std::string::npos,
         "tau = 1 is rejected as a limit cone");

  // Trivial instance: the identity monad on a locally discrete point.
  const auto LD = locally_discrete(fixtures::one());
  const auto G = monad_to_lax(T, LD, identity_monad2(LD, 0));
  const DaggerLaxNat tpi{{0}, {{0}}};
  const auto triv = check_dagger_lax_limit(T, LD, G, 0, tpi);
  expect(triv.ok, "the identity monad limit is the point (" + triv.witness + ")");
}

}  // namespace

int main() {
  trivial_source();
  monads_as_lax_functors();
  composition();
  lax_naturals();
  modifications_and_hom();
  lax_limits();
  return finish("test_lax");
}
