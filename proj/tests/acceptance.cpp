// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Time limits are pinned here, next to the checks they bound.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "daggercat/errors.hpp"
#include "daggercat/exec.hpp"
#include "daggercat/fincat.hpp"
#include "daggercat/fixtures.hpp"
#include "daggercat/functor.hpp"
#include "daggercat/json_io.hpp"
#include "daggercat/kleisli.hpp"
#include "daggercat/lax.hpp"
#include "daggercat/monad.hpp"
#include "daggercat/oracle.hpp"
#include "daggercat/two_cat.hpp"

using namespace daggercat;

namespace {

int g_failed = 0;

template <typename Fn>
void criterion(int n, const std::string& label, double limit_s, Fn&& body) {
  std::string detail;
  bool ok = false;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const ValidationError& e) {
    detail = "unexpected " + std::string(to_string(e.kind())) + ": " + e.witness();
  } catch (const std::exception& e) {
    detail = std::string("unexpected exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = limit_s <= 0.0 || secs < limit_s;
  const bool pass = ok && in_time;
  if (!pass) ++g_failed;
  std::ostringstream line;
  line << (pass ? "[PASS]" : "[FAIL]") << " criterion " << std::setw(2) << n << ": "
       << label << " (" << std::fixed << std::setprecision(2) << secs << "s";
  if (limit_s > 0.0) line << ", limit " << std::setprecision(0) << limit_s << "s";
  line << ")";
  std::puts(line.str().c_str());
  if (!in_time) std::puts("        exceeded the time limit");
  if (!pass && !detail.empty()) std::printf("        %s\n", detail.c_str());
}

std::vector<FinDaggerCategory> corpus() {
  return {fixtures::one(), fixtures::z2(), fixtures::p2(), fixtures::unit_iso(),
          fixtures::rel2()};
}

FrobeniusMonad lift_monad(const FinDaggerCategory& base, const oracle::OracleMonad& om) {
  const auto T = validate_functor_indexed(base, base, om.T.obj_map, om.T.mor_map);
  return validate_monad(base, T, om.mu, om.eta);
}

FrobeniusMonad ts_monad() {
  const auto z2 = fixtures::z2();
  const int s = z2.morphism_index("s");
  return validate_monad(z2, identity_functor(z2), {s}, {s});
}

std::vector<int> identity_components(const FinDaggerCategory& c) {
  return c.identity;
}

// --- criterion 1 -------------------------------------------------------------
// Random raw tables, three flavours plus untouched fixtures; the validator's
// accept/reject verdict must agree with the independent reference checker on
// every one of the 1000 samples.

int draw(std::mt19937& rng, int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); }

bool chance(std::mt19937& rng, unsigned percent) { return rng() % 100u < percent; }

CategoryDescription random_description(std::mt19937& rng) {
  CategoryDescription d;
  d.name = "random";
  const int n_obj = 1 + draw(rng, 3);
  for (int i = 0; i < n_obj; ++i) d.objects.push_back("a" + std::to_string(i));
  const int n_mor = n_obj + draw(rng, 9 - n_obj);
  for (int i = 0; i < n_mor; ++i) {
    MorphismDecl m;
    m.id = "m" + std::to_string(i);
    if (i < n_obj) {
      m.src = m.tgt = d.objects[static_cast<std::size_t>(i)];
    } else if (chance(rng, 50)) {
      m.src = m.tgt = d.objects[static_cast<std::size_t>(draw(rng, n_obj))];
    } else {
      m.src = d.objects[static_cast<std::size_t>(draw(rng, n_obj))];
      m.tgt = d.objects[static_cast<std::size_t>(draw(rng, n_obj))];
    }
    d.morphisms.push_back(std::move(m));
  }
  for (int a = 0; a < n_obj; ++a) {
    std::string pick = d.morphisms[static_cast<std::size_t>(a)].id;
    if (chance(rng, 15)) pick = d.morphisms[static_cast<std::size_t>(draw(rng, n_mor))].id;
    d.identities[d.objects[static_cast<std::size_t>(a)]] = pick;
  }
  for (int g = 0; g < n_mor; ++g)
    for (int f = 0; f < n_mor; ++f) {
      const auto& mg = d.morphisms[static_cast<std::size_t>(g)];
      const auto& mf = d.morphisms[static_cast<std::size_t>(f)];
      if (mf.tgt != mg.src) continue;
      if (chance(rng, 6)) continue;  // leave a gap
      std::vector<int> fits;
      for (int h = 0; h < n_mor; ++h) {
        const auto& mh = d.morphisms[static_cast<std::size_t>(h)];
        if (mh.src == mf.src && mh.tgt == mg.tgt) fits.push_back(h);
      }
      int pick = draw(rng, n_mor);
      if (!fits.empty() && !chance(rng, 10)) pick = fits[static_cast<std::size_t>(draw(rng, static_cast<int>(fits.size())))];
      d.composition.push_back({mg.id, mf.id, d.morphisms[static_cast<std::size_t>(pick)].id});
    }
  if (chance(rng, 20)) {
    const auto& a = d.morphisms[static_cast<std::size_t>(draw(rng, n_mor))];
    const auto& b = d.morphisms[static_cast<std::size_t>(draw(rng, n_mor))];
    const auto& c = d.morphisms[static_cast<std::size_t>(draw(rng, n_mor))];
    d.composition.push_back({a.id, b.id, c.id});  // possibly spurious or contradictory
  }
  for (int i = 0; i < n_mor; ++i) {
    const auto& mi = d.morphisms[static_cast<std::size_t>(i)];
    std::vector<int> flips;
    for (int j = 0; j < n_mor; ++j) {
      const auto& mj = d.morphisms[static_cast<std::size_t>(j)];
      if (mj.src == mi.tgt && mj.tgt == mi.src) flips.push_back(j);
    }
    int pick = draw(rng, n_mor);
    if (!flips.empty() && !chance(rng, 10)) pick = flips[static_cast<std::size_t>(draw(rng, static_cast<int>(flips.size())))];
    d.dagger[mi.id] = d.morphisms[static_cast<std::size_t>(pick)].id;
  }
  return d;
}

CategoryDescription perturbed_fixture(std::mt19937& rng,
                                      const std::vector<FinDaggerCategory>& pool) {
  CategoryDescription d = describe(pool[static_cast<std::size_t>(draw(rng, static_cast<int>(pool.size())))]);
  const auto mor_id = [&] {
    return d.morphisms[static_cast<std::size_t>(draw(rng, static_cast<int>(d.morphisms.size())))].id;
  };
  switch (rng() % 6u) {
    case 0:
      if (!d.composition.empty())
        d.composition[static_cast<std::size_t>(draw(rng, static_cast<int>(d.composition.size())))][2] = mor_id();
      break;
    case 1: {
      auto it = std::next(d.dagger.begin(), draw(rng, static_cast<int>(d.dagger.size())));
      it->second = mor_id();
      break;
    }
    case 2: {
      auto it = std::next(d.identities.begin(), draw(rng, static_cast<int>(d.identities.size())));
      it->second = mor_id();
      break;
    }
    case 3:
      if (!d.composition.empty())
        d.composition.erase(d.composition.begin() + draw(rng, static_cast<int>(d.composition.size())));
      break;
    case 4:
      if (!d.composition.empty()) {
        auto row = d.composition[static_cast<std::size_t>(draw(rng, static_cast<int>(d.composition.size())))];
        row[2] = mor_id();
        d.composition.push_back(row);  // may contradict the original row
      }
      break;
    default:
      d.morphisms[static_cast<std::size_t>(draw(rng, static_cast<int>(d.morphisms.size())))].tgt = "zz";
      break;
  }
  return d;
}

CategoryDescription random_monoid(std::mt19937& rng) {
  CategoryDescription d;
  d.name = "monoid";
  d.objects = {"x"};
  const int k = 1 + draw(rng, 4);
  for (int i = 0; i < k; ++i)
    d.morphisms.push_back({"e" + std::to_string(i), "x", "x"});
  d.identities["x"] = d.morphisms[static_cast<std::size_t>(draw(rng, k))].id;
  for (int g = 0; g < k; ++g)
    for (int f = 0; f < k; ++f)
      d.composition.push_back({d.morphisms[static_cast<std::size_t>(g)].id,
                               d.morphisms[static_cast<std::size_t>(f)].id,
                               d.morphisms[static_cast<std::size_t>(draw(rng, k))].id});
  for (int i = 0; i < k; ++i) {
    const int j = chance(rng, 60) ? i : draw(rng, k);
    d.dagger[d.morphisms[static_cast<std::size_t>(i)].id] =
        d.morphisms[static_cast<std::size_t>(j)].id;
  }
  return d;
}

bool ac1(std::string& detail) {
  std::mt19937 rng(20260813u);
  const std::vector<FinDaggerCategory> pool = {fixtures::one(), fixtures::z2(),
                                               fixtures::p2(), fixtures::unit_iso(),
                                               fixtures::discrete(2)};
  int accepted_seen = 0;
  int rejected_seen = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    CategoryDescription d;
    switch (iter % 4) {
      case 0: d = random_description(rng); break;
      case 1: d = describe(pool[static_cast<std::size_t>(draw(rng, static_cast<int>(pool.size())))]); break;
      case 2: d = perturbed_fixture(rng, pool); break;
      default: d = random_monoid(rng); break;
    }
    bool accepted = true;
    try {
      (void)validate_category(d);
    } catch (const ValidationError&) {
      accepted = false;
    }
    const bool reference = oracle::naive_check_category(d);
    if (accepted != reference) {
      detail = "table " + std::to_string(iter) + " (" + d.name + "): validator says " +
               (accepted ? "accept" : "reject") + ", reference says " +
               (reference ? "accept" : "reject");
      return false;
    }
    ++(accepted ? accepted_seen : rejected_seen);
  }
  if (accepted_seen == 0 || rejected_seen == 0) {
    detail = "degenerate sample: " + std::to_string(accepted_seen) + " accepted, " +
             std::to_string(rejected_seen) + " rejected";
    return false;
  }
  return true;
}

// --- criterion 2 -------------------------------------------------------------

bool ac2(std::string& detail) {
  int monads = 0;
  for (const auto& base : corpus()) {
    for (const auto& om : oracle::enumerate_monads(base)) {
      const auto m = lift_monad(base, om);
      const bool flag = check_frobenius(m);
      const bool naive = oracle::naive_frobenius(base, om.T, om.mu);
      if (flag != om.frobenius || flag != naive || flag != m.frobenius) {
        detail = base.name + ": frobenius verdicts disagree on monad " +
                 std::to_string(monads);
        return false;
      }
      ++monads;
    }
  }
  if (monads != 10) {
    detail = "expected 10 monads across the fixtures, saw " + std::to_string(monads);
    return false;
  }
  return true;
}

// --- criterion 3 -------------------------------------------------------------
// The compatibility flag of an algebra (D, delta) must coincide with delta's
// dagger being a homomorphism (D, delta) -> (T D, mu_D), read off the raw
// tables here rather than through the library's law evaluator.

bool ac3(std::string& detail) {
  int algebras = 0;
  for (const auto& base : corpus()) {
    for (const auto& om : oracle::enumerate_monads(base)) {
      if (!om.frobenius) continue;
      const auto m = lift_monad(base, om);
      for (const auto& alg : oracle::enumerate_algebras(base, om)) {
        const int delta = alg.delta;
        const int ddag = base.dagger[static_cast<std::size_t>(delta)];
        const int lhs = base.comp(om.mu[static_cast<std::size_t>(alg.carrier)],
                                  om.T.mor_map[static_cast<std::size_t>(ddag)]);
        const int rhs = base.comp(ddag, delta);
        const bool hom_into_free = lhs == rhs;
        const bool fem = is_fem_algebra(m, alg.carrier, alg.delta);
        if (!is_em_algebra(m, alg.carrier, alg.delta)) {
          detail = base.name + ": enumerated algebra " + base.mid(delta) +
                   " fails the algebra laws";
          return false;
        }
        if (fem != hom_into_free || fem != alg.fem) {
          detail = base.name + ": algebra " + base.mid(delta) + " on " +
                   base.objects[static_cast<std::size_t>(alg.carrier)] +
                   ": compatibility flag and dagger homomorphism condition split";
          return false;
        }
        ++algebras;
      }
    }
  }
  if (algebras == 0) {
    detail = "no algebras enumerated";
    return false;
  }
  return true;
}

// --- criterion 4 -------------------------------------------------------------

bool ac4(std::string& detail) {
  const auto one = fixtures::one();
  const auto z2 = fixtures::z2();
  const std::vector<std::pair<std::string, FinDaggerCategory>> sources = {
      {"ONE", one}, {"Z2", z2}};
  const std::vector<std::pair<std::string, FrobeniusMonad>> monads = {
      {"identity monad on Z2", identity_monad(z2)},
      {"twist monad on Z2", ts_monad()}};
  for (const auto& [sname, A] : sources)
    for (const auto& [mname, m] : monads) {
      const auto out = check_fem_representability(A, m);
      if (!out.ok) {
        detail = sname + " against the " + mname + ": " + out.witness;
        return false;
      }
    }
  return true;
}

// --- criterion 5 -------------------------------------------------------------

bool ac5(std::string& detail) {
  int built = 0;
  for (const auto& base : corpus())
    for (const auto& om : oracle::enumerate_monads(base)) {
      if (!om.frobenius) continue;
      const auto kl = build_kleisli(lift_monad(base, om));
      try {
        (void)validate_category(describe(kl.kl_cat));
      } catch (const ValidationError& e) {
        detail = base.name + ": kleisli category rejected: " + e.witness();
        return false;
      }
      ++built;
    }
  if (built != 10) {
    detail = "expected 10 kleisli categories, built " + std::to_string(built);
    return false;
  }
  const auto one = fixtures::one();
  const auto z2 = fixtures::z2();
  const std::vector<std::pair<std::string, std::pair<FrobeniusMonad, FinDaggerCategory>>>
      cases = {{"twist monad against Z2", {ts_monad(), z2}},
               {"identity monad against Z2", {identity_monad(z2), z2}},
               {"identity monad against ONE", {identity_monad(one), one}}};
  for (const auto& [label, c] : cases) {
    const auto out = check_fk_universal(c.first, c.second);
    if (!out.ok) {
      detail = label + ": " + out.witness;
      return false;
    }
  }
  return true;
}

// --- criterion 6 -------------------------------------------------------------

bool ac6(std::string& detail) {
  const auto z2 = fixtures::z2();
  const auto same_tables = [](const FrobeniusMonad& a, const FrobeniusMonad& b) {
    return a.T.same_maps(b.T) && a.mu.components == b.mu.components &&
           a.eta.components == b.eta.components;
  };
  const auto idf = identity_functor(z2);
  const auto idc = identity_components(z2);
  const auto m0 = monad_from_adjunction(validate_adjunction(idf, idf, idc, idc));
  if (!check_frobenius(m0) || !same_tables(m0, identity_monad(z2))) {
    detail = "identity adjunction does not reproduce the identity monad";
    return false;
  }
  for (const auto& om : oracle::enumerate_monads(z2)) {
    if (!om.frobenius) continue;
    const auto m = lift_monad(z2, om);
    const auto fem = build_fem_category(m);
    const auto mf = monad_from_adjunction(fem.adj);
    if (!check_frobenius(mf) || !same_tables(mf, m)) {
      detail = "algebra adjunction round trip differs for mu = " + z2.mid(om.mu[0]);
      return false;
    }
    const auto kl = build_kleisli(m);
    const auto mk = monad_from_adjunction(kl.adj);
    if (!check_frobenius(mk) || !same_tables(mk, m)) {
      detail = "kleisli adjunction round trip differs for mu = " + z2.mid(om.mu[0]);
      return false;
    }
  }
  return true;
}

// --- criterion 7 -------------------------------------------------------------
// Both canonical adjunctions of the twist monad, embedded in a 2-category of
// dagger categories, must admit exactly one mediating 1-cell into the algebra
// witness, and it must be the comparison functor.

bool ac7(std::string& detail) {
  const auto one = fixtures::one();
  const auto z2 = fixtures::z2();
  const auto ts = ts_monad();
  const auto fem = build_fem_category(ts);
  const auto kl = build_kleisli(ts);

  for (int which = 0; which < 2; ++which) {
    std::vector<FinDaggerCategory> cells = {one, z2};
    if (which == 1) cells.push_back(kl.kl_cat);
    cells.push_back(fem.fem_cat);
    const auto W = two_cat_of(cells);
    const int iz = W.cell0_index(z2.name);
    const int ie = W.cell0_index(fem.fem_cat.name);
    if (iz < 0 || ie < 0) {
      detail = "0-cells missing from the ambient 2-category";
      return false;
    }

    const auto H_zz = hom_category(z2, z2);
    const auto H_ez = hom_category(fem.fem_cat, z2);
    const auto H_ze = hom_category(z2, fem.fem_cat);
    const auto H_ee = hom_category(fem.fem_cat, fem.fem_cat);
    if (!(W.hom(iz, iz) == H_zz.cat) || !(W.hom(ie, iz) == H_ez.cat) ||
        !(W.hom(iz, ie) == H_ze.cat) || !(W.hom(ie, ie) == H_ee.cat)) {
      detail = "ambient hom tables differ from the standalone hom categories";
      return false;
    }

    const Monad2 t2{iz, H_zz.functor_index(ts.T), H_zz.nat_index(ts.mu),
                    H_zz.nat_index(ts.eta)};
    const FEMObjectWitness w{ie, H_ez.functor_index(fem.U),
                             H_ez.nat_index(fem.counit_xi),
                             H_ze.functor_index(fem.F), H_ee.nat_index(fem.adj.counit)};
    if (t2.t < 0 || t2.mu < 0 || t2.eta < 0 || w.u < 0 || w.xi < 0 || w.f_t < 0 ||
        w.eps_t < 0) {
      detail = "monad or witness cells not found in their hom categories";
      return false;
    }

    Adjunction2 adj;
    int expected = -1;
    if (which == 0) {
      adj = Adjunction2{iz, ie, H_ze.functor_index(fem.F), H_ez.functor_index(fem.U),
                        H_zz.nat_index(fem.adj.unit), H_ee.nat_index(fem.adj.counit)};
      expected = H_ee.functor_index(comparison_functor(fem.adj, fem));
      if (expected != W.id1(ie)) {
        detail = "comparison of the algebra adjunction is not the identity 1-cell";
        return false;
      }
    } else {
      const int ik = W.cell0_index(kl.kl_cat.name);
      const auto H_zk = hom_category(z2, kl.kl_cat);
      const auto H_kz = hom_category(kl.kl_cat, z2);
      const auto H_kk = hom_category(kl.kl_cat, kl.kl_cat);
      const auto H_ke = hom_category(kl.kl_cat, fem.fem_cat);
      if (ik < 0 || !(W.hom(iz, ik) == H_zk.cat) || !(W.hom(ik, iz) == H_kz.cat) ||
          !(W.hom(ik, ik) == H_kk.cat) || !(W.hom(ik, ie) == H_ke.cat)) {
        detail = "kleisli hom tables differ from the standalone hom categories";
        return false;
      }
      adj = Adjunction2{iz, ik, H_zk.functor_index(kl.F_T), H_kz.functor_index(kl.U_T),
                        H_zz.nat_index(kl.adj.unit), H_kk.nat_index(kl.adj.counit)};
      expected = H_ke.functor_index(comparison_functor(kl.adj, fem));
    }
    if (adj.f < 0 || adj.u < 0 || adj.eta < 0 || adj.eps < 0 || expected < 0) {
      detail = "adjunction cells not found in their hom categories";
      return false;
    }

    const auto tri = check_adjunction2(W, adj);
    if (!tri.ok) {
      detail = "triangle identities failed: " + tri.witness;
      return false;
    }
    if (!(monad_from_adjunction2(W, adj) == t2)) {
      detail = "adjunction induces a different monad than the witnessed one";
      return false;
    }
    int n = -1;
    try {
      n = universal2_check(W, adj, w);
    } catch (const ValidationError& e) {
      detail = "universal2_check: " + std::string(to_string(e.kind())) + ": " +
               e.witness();
      return false;
    }
    if (n != expected) {
      detail = std::string(which == 0 ? "algebra" : "kleisli") +
               " adjunction: mediating 1-cell " + std::to_string(n) +
               " differs from the comparison functor " + std::to_string(expected);
      return false;
    }
  }
  return true;
}

// --- criterion 8 -------------------------------------------------------------

bool ac8(std::string& detail) {
  const std::vector<std::pair<std::string, FinDagger2Category>> bases = {
      {"discrete ONE", locally_discrete(fixtures::one())},
      {"suspension of Z2", suspension(fixtures::z2(), "SZ2")}};
  for (const auto& [label, K] : bases) {
    const auto D = build_dfmnd(K);
    const auto FK = build_fk_completion(K);
    const auto FEMC = build_fem_completion(K);
    for (const auto* cat : {&D.cat, &FK.cat, &FEMC.cat}) {
      try {
        validate_2category(*cat);
      } catch (const ValidationError& e) {
        detail = label + " / " + cat->name + ": " + std::string(to_string(e.kind())) +
                 ": " + e.witness();
        return false;
      }
    }

    const int n = D.cat.n0();
    for (int a = 0; a < K.n0(); ++a)
      for (int b = 0; b < K.n0(); ++b) {
        const int ia = D.monad_index(dfmnd_inclusion0(K, a));
        const int ib = D.monad_index(dfmnd_inclusion0(K, b));
        if (ia < 0 || ib < 0) {
          detail = label + ": included identity monad missing";
          return false;
        }
        const auto& H = K.hom(a, b);
        const auto& c1 = D.cells1[static_cast<std::size_t>(ia * n + ib)];
        if (c1.size() != H.objects.size()) {
          detail = label + ": inclusion not bijective on 1-cells";
          return false;
        }
        std::set<int> seen;
        for (const auto& mm : c1) {
          if (mm.sigma != H.identity[static_cast<std::size_t>(mm.f)]) {
            detail = label + ": included 1-cell carries a non-identity square";
            return false;
          }
          seen.insert(mm.f);
        }
        if (seen.size() != H.objects.size()) {
          detail = label + ": inclusion not surjective on 1-cells";
          return false;
        }
        const auto& HD = D.cat.hom(ia, ib);
        if (HD.morphisms.size() != H.morphisms.size()) {
          detail = label + ": inclusion not full on 2-cells";
          return false;
        }
        if (!oracle::iso_search_dagger(H, HD)) {
          detail = label + ": included hom category not isomorphic to the base hom";
          return false;
        }
      }

    for (const auto& H : FK.cat.homs)
      for (std::size_t x = 0; x < H.morphisms.size(); ++x)
        if (H.dagger[static_cast<std::size_t>(H.dagger[x])] != static_cast<int>(x)) {
          detail = label + ": completion 2-cell dagger is not involutive";
          return false;
        }

    const auto ref = op2(build_fk_completion(op2(K)).cat);
    const auto& F = FEMC.cat;
    const bool hcomp_same =
        F.hcomp_tab.has_value() == ref.hcomp_tab.has_value() &&
        (!F.hcomp_tab.has_value() || *F.hcomp_tab == *ref.hcomp_tab);
    if (F.cells0 != ref.cells0 || !(F.homs == ref.homs) || F.id1_tab != ref.id1_tab ||
        F.comp1_tab != ref.comp1_tab || F.lwhisk_tab != ref.lwhisk_tab ||
        F.rwhisk_tab != ref.rwhisk_tab || !hcomp_same) {
      detail = label + ": algebra completion differs from the transposed construction";
      return false;
    }
  }
  return true;
}

// --- criterion 9 -------------------------------------------------------------

bool ac9(std::string& detail) {
  const auto one = fixtures::one();
  const auto z2 = fixtures::z2();
  const auto ts = ts_monad();
  const auto fem = build_fem_category(ts);
  const auto W = two_cat_of({one, z2, fem.fem_cat});
  const int io = W.cell0_index(one.name);
  const int iz = W.cell0_index(z2.name);
  const int ie = W.cell0_index(fem.fem_cat.name);

  const auto H_zz = hom_category(z2, z2);
  const auto H_ez = hom_category(fem.fem_cat, z2);
  const auto H_ze = hom_category(z2, fem.fem_cat);
  const auto H_ee = hom_category(fem.fem_cat, fem.fem_cat);
  const Monad2 t2{iz, H_zz.functor_index(ts.T), H_zz.nat_index(ts.mu),
                  H_zz.nat_index(ts.eta)};
  const FEMObjectWitness w{ie, H_ez.functor_index(fem.U), H_ez.nat_index(fem.counit_xi),
                           H_ze.functor_index(fem.F), H_ee.nat_index(fem.adj.counit)};
  if (io < 0 || t2.t < 0 || t2.mu < 0 || t2.eta < 0 || w.u < 0 || w.xi < 0 ||
      w.f_t < 0 || w.eps_t < 0) {
    detail = "monad or witness cells not found in their hom categories";
    return false;
  }

  const auto algebra = fem_object_check(W, t2, w);
  if (!algebra.ok) {
    detail = "algebra object check rejected the canonical witness: " + algebra.witness;
    return false;
  }

  const auto TRIV = trivial_2category();
  const auto F = monad_to_lax(TRIV, W, t2);
  DaggerLaxNat pi;
  pi.alpha = {w.u};
  pi.tau = {{w.xi}};
  const auto pos = check_dagger_lax_limit(TRIV, W, F, ie, pi);
  if (!pos.ok) {
    detail = "limit check rejected the algebra object: " + pos.witness;
    return false;
  }

  // The sharpest wrong candidate at ONE: the unique 1-cell into Z2 with the
  // only coherent cone 2-cell over it.
  const auto H_oz = hom_category(one, z2);
  if (H_oz.functors.size() != 1) {
    detail = "unexpected hom(ONE, Z2) shape";
    return false;
  }
  const int s = z2.morphism_index("s");
  const int tau = H_oz.nat_index(validate_nat(H_oz.functors[0], H_oz.functors[0], {s}));
  const auto H_zo = hom_category(z2, one);
  const auto H_oo = hom_category(one, one);
  if (tau < 0 || H_zo.functors.size() != 1 || H_oo.nats.size() != 1) {
    detail = "unexpected hom shapes around ONE";
    return false;
  }
  DaggerLaxNat bad_pi;
  bad_pi.alpha = {0};
  bad_pi.tau = {{tau}};
  const auto neg = check_dagger_lax_limit(TRIV, W, F, io, bad_pi);
  if (neg.ok) {
    detail = "ONE was accepted as the limit";
    return false;
  }
  if (neg.witness.find(" vs ") == std::string::npos) {
    detail = "expected a cardinality witness, got: " + neg.witness;
    return false;
  }
  const FEMObjectWitness bad_w{io, 0, tau, 0, 0};
  if (fem_object_check(W, t2, bad_w).ok) {
    detail = "algebra object check accepted ONE";
    return false;
  }
  return true;
}

// --- criterion 10 ------------------------------------------------------------

bool ac10(std::string& detail) {
  const auto rel2 = fixtures::rel2();
  const auto z2 = fixtures::z2();
  const auto monads = oracle::enumerate_monads(z2);
  const auto bundle = [&] {
    std::string out;
    out += oracle::monads_report(rel2).dump();
    out += oracle::functors_report(z2, z2).dump();
    for (const auto& om : monads) out += oracle::algebras_report(z2, om).dump();
    return out;
  };
  set_parallelism(1);
  const std::string serial = bundle();
  const std::string serial_again = bundle();
  set_parallelism(4);
  const std::string parallel = bundle();
  set_parallelism(1);
  if (serial != serial_again) {
    detail = "oracle reports differ between two serial runs";
    return false;
  }
  if (serial != parallel) {
    detail = "oracle reports differ between serial and parallel runs";
    return false;
  }

  const std::string path = std::string(DCAT_TEST_DATA_DIR) + "/z2.json";
  const auto run_cli = [](const std::vector<std::string>& args) {
    std::string out;
    std::string err;
    const int rc = cli::run(args, out, err);
    return std::pair<int, std::string>(rc, out);
  };
  const auto a = run_cli({"--no-timing", "enumerate", "monads", path});
  const auto b = run_cli({"--no-timing", "enumerate", "monads", path});
  const auto c = run_cli({"--no-timing", "--parallel", "4", "enumerate", "monads", path});
  if (a.first != 0 || b.first != 0 || c.first != 0) {
    detail = "cli enumeration did not exit cleanly";
    return false;
  }
  if (a.second != b.second || a.second != c.second) {
    detail = "cli reports are not byte-identical across runs";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  std::puts("acceptance suite");
  criterion(1, "random tables agree with the reference checker", 10.0, ac1);
  criterion(2, "frobenius verdicts match the oracle on every fixture monad", 120.0, ac2);
  criterion(3, "algebra compatibility equals the dagger homomorphism condition", 0.0, ac3);
  criterion(4, "hom-level algebra representability holds for ONE and Z2", 60.0, ac4);
  criterion(5, "kleisli categories validate and satisfy their universal property", 60.0, ac5);
  criterion(6, "adjunction round trips reproduce their monads exactly", 0.0, ac6);
  criterion(7, "mediating 1-cells are unique and match the comparison functor", 0.0, ac7);
  criterion(8, "completions validate, include faithfully and transpose correctly", 0.0, ac8);
  criterion(9, "the algebra witness is the dagger lax limit and ONE is not", 0.0, ac9);
  criterion(10, "enumerations are byte-identical across runs and parallelism", 0.0, ac10);
  if (g_failed == 0) {
    std::puts("acceptance: all 10 criteria passed");
    return 0;
  }
  std::printf("acceptance: %d of 10 criteria failed\n", g_failed);
  return 1;
}
