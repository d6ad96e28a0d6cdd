#include "daggercat/kleisli.hpp"

#include <map>
#include <string>

#include "daggercat/errors.hpp"

namespace daggercat {

namespace {

std::string kl_name(const FinDaggerCategory& base, int f, int a, int b) {
  return base.mid(f) + "@" + base.objects[static_cast<std::size_t>(a)] + ">" +
         base.objects[static_cast<std::size_t>(b)];
}

}  // namespace

int KleisliResult::kl_index(int base_mor, int src_obj, int tgt_obj) const {
  for (std::size_t k = 0; k < underlying.size(); ++k)
    if (underlying[k] == base_mor && kl_cat.src(static_cast<int>(k)) == src_obj &&
        kl_tgt[k] == tgt_obj)
      return static_cast<int>(k);
  return -1;
}

KleisliResult build_kleisli(const FrobeniusMonad& m) {
  const FinDaggerCategory& B = m.base;
  const int n_obj = static_cast<int>(B.objects.size());
  const int n_mor = static_cast<int>(B.morphisms.size());

  KleisliResult res;
  res.monad = m;

  CategoryDescription d;
  d.name = "Kl(" + B.name + ")";
  d.objects = B.objects;
  std::map<std::string, std::pair<int, int>> lookup;  // id -> (base mor, tgt)
  for (int a = 0; a < n_obj; ++a)
    for (int b = 0; b < n_obj; ++b) {
      const int Tb = m.T.obj_map[static_cast<std::size_t>(b)];
      for (int f = 0; f < n_mor; ++f) {
        if (B.src(f) != a || B.tgt(f) != Tb) continue;
        const std::string id = kl_name(B, f, a, b);
        d.morphisms.push_back({id, B.objects[static_cast<std::size_t>(a)],
                               B.objects[static_cast<std::size_t>(b)]});
        lookup[id] = {f, b};
      }
    }
  for (int a = 0; a < n_obj; ++a)
    d.identities[B.objects[static_cast<std::size_t>(a)]] =
        kl_name(B, m.eta.components[static_cast<std::size_t>(a)], a, a);

  auto kcomp = [&](int g, int c, int f) {
    // g: b -> T c, f: a -> T b; result mu_c . T(g) . f : a -> T c.
    return B.comp(m.mu.components[static_cast<std::size_t>(c)],
                  B.comp(m.T.mor_map[static_cast<std::size_t>(g)], f));
  };
  auto kdagger = [&](int f, int b) {
    // f: a -> T b; result T(f dagger) . mu_b dagger . eta_b : b -> T a.
    const int fd = B.dagger[static_cast<std::size_t>(f)];
    const int mu_b_d = B.dagger[static_cast<std::size_t>(
        m.mu.components[static_cast<std::size_t>(b)])];
    return B.comp(m.T.mor_map[static_cast<std::size_t>(fd)],
                  B.comp(mu_b_d, m.eta.components[static_cast<std::size_t>(b)]));
  };

  for (const auto& [gid, gpair] : lookup) {
    const auto [g, c] = gpair;
    const int b_src = B.src(g);
    d.dagger[gid] = kl_name(B, kdagger(g, c), c, b_src);
    for (const auto& [fid, fpair] : lookup) {
      const auto [f, b] = fpair;
      if (b != b_src) continue;  // composable in Kleisli: tgt(f) = src(g)
      d.composition.push_back({gid, fid, kl_name(B, kcomp(g, c, f), B.src(f), c)});
    }
  }
  res.kl_cat = validate_category(d);

  res.underlying.resize(res.kl_cat.morphisms.size());
  res.kl_tgt.resize(res.kl_cat.morphisms.size());
  for (std::size_t k = 0; k < res.kl_cat.morphisms.size(); ++k) {
    const auto& [f, b] = lookup[res.kl_cat.morphisms[k].id];
    res.underlying[k] = f;
    res.kl_tgt[k] = b;
  }

  // Object ids coincide with the base ids, so indices line up.
  {
    std::vector<int> om(static_cast<std::size_t>(n_obj));
    std::vector<int> mm(static_cast<std::size_t>(n_mor));
    for (int a = 0; a < n_obj; ++a) om[static_cast<std::size_t>(a)] = a;
    for (int f = 0; f < n_mor; ++f) {
      const int b = B.tgt(f);
      const int img = B.comp(m.eta.components[static_cast<std::size_t>(b)], f);
      mm[static_cast<std::size_t>(f)] = res.kl_index(img, B.src(f), b);
    }
    res.F_T = validate_functor_indexed(B, res.kl_cat, om, mm);
  }
  {
    std::vector<int> om(static_cast<std::size_t>(n_obj));
    std::vector<int> mm(res.kl_cat.morphisms.size());
    for (int a = 0; a < n_obj; ++a)
      om[static_cast<std::size_t>(a)] = m.T.obj_map[static_cast<std::size_t>(a)];
    for (std::size_t k = 0; k < mm.size(); ++k) {
      const int b = res.kl_tgt[k];
      mm[k] = B.comp(m.mu.components[static_cast<std::size_t>(b)],
                     m.T.mor_map[static_cast<std::size_t>(res.underlying[k])]);
    }
    res.U_T = validate_functor_indexed(res.kl_cat, B, om, mm);
  }
  {
    std::vector<int> counit(static_cast<std::size_t>(n_obj));
    for (int b = 0; b < n_obj; ++b) {
      const int Tb = m.T.obj_map[static_cast<std::size_t>(b)];
      counit[static_cast<std::size_t>(b)] =
          res.kl_index(B.identity[static_cast<std::size_t>(Tb)], Tb, b);
    }
    res.adj = validate_adjunction(res.F_T, res.U_T, m.eta.components, counit);
  }
  return res;
}

namespace {

// Locates a natural transformation inside an enumerated hom-category.
int find_nat(const HomCategoryResult& homc, const DaggerFunctor& F,
             const DaggerFunctor& G, const std::vector<int>& comps) {
  NatTrans probe;
  probe.F = F;
  probe.G = G;
  probe.components = comps;
  const int k = homc.nat_index(probe);
  if (k < 0)
    throw ValidationError(ErrKind::InternalClosureFailure,
                          "transformation escapes " + homc.cat.name);
  return k;
}

int find_functor(const HomCategoryResult& homc, const DaggerFunctor& F) {
  const int i = homc.functor_index(F);
  if (i < 0)
    throw ValidationError(ErrKind::InternalClosureFailure,
                          "functor escapes " + homc.cat.name);
  return i;
}

bool is_permutation(const std::vector<int>& v, std::size_t n) {
  if (v.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (int x : v) {
    if (x < 0 || x >= static_cast<int>(n) || seen[static_cast<std::size_t>(x)])
      return false;
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

}  // namespace

CheckOutcome check_fk_universal(const FrobeniusMonad& m,
                                const FinDaggerCategory& X,
                                std::uint64_t cap) {
  const FinDaggerCategory& B = m.base;
  const KleisliResult kl = build_kleisli(m);
  const HomCategoryResult hom_kl = hom_category(kl.kl_cat, X, cap);
  const HomCategoryResult hom_b = hom_category(B, X, cap);

  // Monad induced on hom(B, X) by precomposition with T.
  const int nf = static_cast<int>(hom_b.functors.size());
  std::vector<int> S_obj(static_cast<std::size_t>(nf));
  for (int i = 0; i < nf; ++i)
    S_obj[static_cast<std::size_t>(i)] =
        find_functor(hom_b, functor_compose(hom_b.functors[static_cast<std::size_t>(i)], m.T));
  std::vector<int> S_mor(hom_b.nats.size());
  for (std::size_t k = 0; k < hom_b.nats.size(); ++k) {
    const NatTrans w = whisker_right(hom_b.nats[k], m.T);
    S_mor[k] = find_nat(hom_b, w.F, w.G, w.components);
  }

  const DaggerFunctor S =
      validate_functor_indexed(hom_b.cat, hom_b.cat, S_obj, S_mor);
  std::vector<int> S_mu(static_cast<std::size_t>(nf));
  std::vector<int> S_eta(static_cast<std::size_t>(nf));
  for (int i = 0; i < nf; ++i) {
    const DaggerFunctor& H = hom_b.functors[static_cast<std::size_t>(i)];
    const NatTrans muH = whisker_left(H, m.mu);
    const NatTrans etaH = whisker_left(H, m.eta);
    S_mu[static_cast<std::size_t>(i)] = find_nat(hom_b, muH.F, muH.G, muH.components);
    S_eta[static_cast<std::size_t>(i)] = find_nat(hom_b, etaH.F, etaH.G, etaH.components);
  }
  const FrobeniusMonad SM = validate_monad(hom_b.cat, S, S_mu, S_eta);
  if (!SM.frobenius)
    return CheckOutcome::fail("induced monad on " + hom_b.cat.name +
                              " is not Frobenius");
  const FEMCategoryResult fem = build_fem_category(SM);

  if (fem.algebras.size() != hom_kl.functors.size())
    return CheckOutcome::fail(
        "object counts differ: " + std::to_string(hom_kl.functors.size()) +
        " functors vs " + std::to_string(fem.algebras.size()) + " algebras");

  // Forward direction: G |-> (G . F_T, G * counit).
  std::vector<int> L_obj(hom_kl.functors.size());
  for (std::size_t i = 0; i < hom_kl.functors.size(); ++i) {
    const DaggerFunctor& G = hom_kl.functors[i];
    const DaggerFunctor carrier = functor_compose(G, kl.F_T);
    const int ci = find_functor(hom_b, carrier);
    std::vector<int> delta(B.objects.size());
    for (std::size_t a = 0; a < B.objects.size(); ++a)
      delta[a] = G.mor_map[static_cast<std::size_t>(
          kl.adj.counit.components[a])];
    const int di = find_nat(hom_b, functor_compose(carrier, m.T), carrier, delta);
    const int alg = fem.algebra_index(ci, di);
    if (alg < 0)
      return CheckOutcome::fail("image of " + hom_kl.cat.objects[i] +
                                " is not a compatible algebra");
    L_obj[i] = alg;
  }
  std::vector<int> L_mor(hom_kl.nats.size());
  for (std::size_t k = 0; k < hom_kl.nats.size(); ++k) {
    const NatTrans w = whisker_right(hom_kl.nats[k], kl.F_T);
    const int j = find_nat(hom_b, w.F, w.G, w.components);
    int hit = -1;
    for (std::size_t f = 0; f < fem.underlying.size(); ++f) {
      if (fem.underlying[f] != j) continue;
      if (fem.fem_cat.src(static_cast<int>(f)) !=
              L_obj[static_cast<std::size_t>(hom_kl.cat.src(static_cast<int>(k)))] ||
          fem.fem_cat.tgt(static_cast<int>(f)) !=
              L_obj[static_cast<std::size_t>(hom_kl.cat.tgt(static_cast<int>(k)))])
        continue;
      hit = static_cast<int>(f);
      break;
    }
    if (hit < 0)
      return CheckOutcome::fail("image of " + hom_kl.cat.mid(static_cast<int>(k)) +
                                " is not an algebra morphism");
    L_mor[k] = hit;
  }
  DaggerFunctor L;
  try {
    L = validate_functor_indexed(hom_kl.cat, fem.fem_cat, L_obj, L_mor);
  } catch (const ValidationError& e) {
    return CheckOutcome::fail(std::string("forward direction: ") + e.what());
  }

  // Backward direction: (H, delta) |-> G with G(f) = delta . H(f).
  std::vector<int> P_obj(fem.algebras.size());
  for (std::size_t i = 0; i < fem.algebras.size(); ++i) {
    const DaggerFunctor& H =
        hom_b.functors[static_cast<std::size_t>(fem.algebras[i].carrier)];
    const NatTrans& delta =
        hom_b.nats[static_cast<std::size_t>(fem.algebras[i].structure)];
    std::vector<int> om(kl.kl_cat.objects.size());
    std::vector<int> mm(kl.kl_cat.morphisms.size());
    for (std::size_t a = 0; a < om.size(); ++a) om[a] = H.obj_map[a];
    for (std::size_t k = 0; k < mm.size(); ++k)
      mm[k] = X.comp(delta.components[static_cast<std::size_t>(kl.kl_tgt[k])],
                     H.mor_map[static_cast<std::size_t>(kl.underlying[k])]);
    DaggerFunctor G;
    try {
      G = validate_functor_indexed(kl.kl_cat, X, om, mm);
    } catch (const ValidationError& e) {
      return CheckOutcome::fail(std::string("backward direction at ") +
                                fem.fem_cat.objects[i] + ": " + e.what());
    }
    P_obj[i] = find_functor(hom_kl, G);
  }
  std::vector<int> P_mor(fem.fem_cat.morphisms.size());
  for (std::size_t f = 0; f < P_mor.size(); ++f) {
    const NatTrans& g = hom_b.nats[static_cast<std::size_t>(fem.underlying[f])];
    const int si = P_obj[static_cast<std::size_t>(fem.fem_cat.src(static_cast<int>(f)))];
    const int ti = P_obj[static_cast<std::size_t>(fem.fem_cat.tgt(static_cast<int>(f)))];
    P_mor[f] = find_nat(hom_kl, hom_kl.functors[static_cast<std::size_t>(si)],
                        hom_kl.functors[static_cast<std::size_t>(ti)], g.components);
  }
  DaggerFunctor P;
  try {
    P = validate_functor_indexed(fem.fem_cat, hom_kl.cat, P_obj, P_mor);
  } catch (const ValidationError& e) {
    return CheckOutcome::fail(std::string("backward direction: ") + e.what());
  }

  if (!is_permutation(L_obj, fem.algebras.size()) ||
      !is_permutation(L_mor, fem.fem_cat.morphisms.size()))
    return CheckOutcome::fail("forward direction is not bijective");
  const DaggerFunctor PL = functor_compose(P, L);
  const DaggerFunctor LP = functor_compose(L, P);
  if (!PL.same_maps(identity_functor(hom_kl.cat)))
    return CheckOutcome::fail("round trip on " + hom_kl.cat.name +
                              " is not the identity");
  if (!LP.same_maps(identity_functor(fem.fem_cat)))
    return CheckOutcome::fail("round trip on " + fem.fem_cat.name +
                              " is not the identity");
  return CheckOutcome::pass();
}

CheckOutcome check_fem_representability(const FinDaggerCategory& A,
                                        const FrobeniusMonad& m,
                                        std::uint64_t cap) {
  const FinDaggerCategory& B = m.base;
  const FEMCategoryResult fem_base = build_fem_category(m);
  const HomCategoryResult hom_fem = hom_category(A, fem_base.fem_cat, cap);
  const HomCategoryResult hom_b = hom_category(A, B, cap);

  // Monad induced on hom(A, B) by postcomposition with T.
  const int nf = static_cast<int>(hom_b.functors.size());
  std::vector<int> S_obj(static_cast<std::size_t>(nf));
  for (int i = 0; i < nf; ++i)
    S_obj[static_cast<std::size_t>(i)] =
        find_functor(hom_b, functor_compose(m.T, hom_b.functors[static_cast<std::size_t>(i)]));
  std::vector<int> S_mor(hom_b.nats.size());
  for (std::size_t k = 0; k < hom_b.nats.size(); ++k) {
    const NatTrans w = whisker_left(m.T, hom_b.nats[k]);
    S_mor[k] = find_nat(hom_b, w.F, w.G, w.components);
  }
  const DaggerFunctor S =
      validate_functor_indexed(hom_b.cat, hom_b.cat, S_obj, S_mor);
  std::vector<int> S_mu(static_cast<std::size_t>(nf));
  std::vector<int> S_eta(static_cast<std::size_t>(nf));
  for (int i = 0; i < nf; ++i) {
    const DaggerFunctor& H = hom_b.functors[static_cast<std::size_t>(i)];
    const NatTrans muH = whisker_right(m.mu, H);
    const NatTrans etaH = whisker_right(m.eta, H);
    S_mu[static_cast<std::size_t>(i)] = find_nat(hom_b, muH.F, muH.G, muH.components);
    S_eta[static_cast<std::size_t>(i)] = find_nat(hom_b, etaH.F, etaH.G, etaH.components);
  }
  const FrobeniusMonad SM = validate_monad(hom_b.cat, S, S_mu, S_eta);
  if (!SM.frobenius)
    return CheckOutcome::fail("induced monad on " + hom_b.cat.name +
                              " is not Frobenius");
  const FEMCategoryResult fem = build_fem_category(SM);

  if (fem.algebras.size() != hom_fem.functors.size())
    return CheckOutcome::fail(
        "object counts differ: " + std::to_string(hom_fem.functors.size()) +
        " functors vs " + std::to_string(fem.algebras.size()) + " algebras");

  // Forward: G |-> (U . G, xi * G).
  std::vector<int> L_obj(hom_fem.functors.size());
  for (std::size_t i = 0; i < hom_fem.functors.size(); ++i) {
    const DaggerFunctor& G = hom_fem.functors[i];
    const DaggerFunctor carrier = functor_compose(fem_base.U, G);
    const int ci = find_functor(hom_b, carrier);
    const NatTrans xiG = whisker_right(fem_base.counit_xi, G);
    const int di = find_nat(hom_b, xiG.F, xiG.G, xiG.components);
    const int alg = fem.algebra_index(ci, di);
    if (alg < 0)
      return CheckOutcome::fail("image of " + hom_fem.cat.objects[i] +
                                " is not a compatible algebra");
    L_obj[i] = alg;
  }
  std::vector<int> L_mor(hom_fem.nats.size());
  for (std::size_t k = 0; k < hom_fem.nats.size(); ++k) {
    const NatTrans w = whisker_left(fem_base.U, hom_fem.nats[k]);
    const int j = find_nat(hom_b, w.F, w.G, w.components);
    int hit = -1;
    for (std::size_t f = 0; f < fem.underlying.size(); ++f) {
      if (fem.underlying[f] != j) continue;
      if (fem.fem_cat.src(static_cast<int>(f)) !=
              L_obj[static_cast<std::size_t>(hom_fem.cat.src(static_cast<int>(k)))] ||
          fem.fem_cat.tgt(static_cast<int>(f)) !=
              L_obj[static_cast<std::size_t>(hom_fem.cat.tgt(static_cast<int>(k)))])
        continue;
      hit = static_cast<int>(f);
      break;
    }
    if (hit < 0)
      return CheckOutcome::fail("image of " + hom_fem.cat.mid(static_cast<int>(k)) +
                                " is not an algebra morphism");
    L_mor[k] = hit;
  }
  DaggerFunctor L;
  try {
    L = validate_functor_indexed(hom_fem.cat, fem.fem_cat, L_obj, L_mor);
  } catch (const ValidationError& e) {
    return CheckOutcome::fail(std::string("forward direction: ") + e.what());
  }

  // Backward: (H, delta) |-> pointwise algebras.
  std::vector<int> P_obj(fem.algebras.size());
  for (std::size_t i = 0; i < fem.algebras.size(); ++i) {
    const DaggerFunctor& H =
        hom_b.functors[static_cast<std::size_t>(fem.algebras[i].carrier)];
    const NatTrans& delta =
        hom_b.nats[static_cast<std::size_t>(fem.algebras[i].structure)];
    std::vector<int> om(A.objects.size());
    std::vector<int> mm(A.morphisms.size());
    for (std::size_t a = 0; a < om.size(); ++a) {
      const int alg = fem_base.algebra_index(H.obj_map[a], delta.components[a]);
      if (alg < 0)
        return CheckOutcome::fail("pointwise algebra at " + A.objects[a] +
                                  " is not compatible");
      om[a] = alg;
    }
    for (std::size_t f = 0; f < mm.size(); ++f) {
      int hit = -1;
      for (std::size_t g = 0; g < fem_base.underlying.size(); ++g) {
        if (fem_base.underlying[g] != H.mor_map[f]) continue;
        if (fem_base.fem_cat.src(static_cast<int>(g)) !=
                om[static_cast<std::size_t>(A.src(static_cast<int>(f)))] ||
            fem_base.fem_cat.tgt(static_cast<int>(g)) !=
                om[static_cast<std::size_t>(A.tgt(static_cast<int>(f)))])
          continue;
        hit = static_cast<int>(g);
        break;
      }
      if (hit < 0)
        return CheckOutcome::fail("image of " + A.mid(static_cast<int>(f)) +
                                  " is not an algebra morphism");
      mm[f] = hit;
    }
    DaggerFunctor G;
    try {
      G = validate_functor_indexed(A, fem_base.fem_cat, om, mm);
    } catch (const ValidationError& e) {
      return CheckOutcome::fail(std::string("backward direction at ") +
                                fem.fem_cat.objects[i] + ": " + e.what());
    }
    P_obj[i] = find_functor(hom_fem, G);
  }
  std::vector<int> P_mor(fem.fem_cat.morphisms.size());
  for (std::size_t f = 0; f < P_mor.size(); ++f) {
    const NatTrans& g = hom_b.nats[static_cast<std::size_t>(fem.underlying[f])];
    const int si = P_obj[static_cast<std::size_t>(fem.fem_cat.src(static_cast<int>(f)))];
    const int ti = P_obj[static_cast<std::size_t>(fem.fem_cat.tgt(static_cast<int>(f)))];
    std::vector<int> comps(A.objects.size());
    for (std::size_t a = 0; a < comps.size(); ++a) {
      const int want = g.components[a];
      int hit = -1;
      for (std::size_t h = 0; h < fem_base.underlying.size(); ++h) {
        if (fem_base.underlying[h] != want) continue;
        if (fem_base.fem_cat.src(static_cast<int>(h)) !=
                hom_fem.functors[static_cast<std::size_t>(si)].obj_map[a] ||
            fem_base.fem_cat.tgt(static_cast<int>(h)) !=
                hom_fem.functors[static_cast<std::size_t>(ti)].obj_map[a])
          continue;
        hit = static_cast<int>(h);
        break;
      }
      if (hit < 0)
        return CheckOutcome::fail("component at " + A.objects[a] +
                                  " is not an algebra morphism");
      comps[a] = hit;
    }
    P_mor[f] = find_nat(hom_fem, hom_fem.functors[static_cast<std::size_t>(si)],
                        hom_fem.functors[static_cast<std::size_t>(ti)], comps);
  }
  DaggerFunctor P;
  try {
    P = validate_functor_indexed(fem.fem_cat, hom_fem.cat, P_obj, P_mor);
  } catch (const ValidationError& e) {
    return CheckOutcome::fail(std::string("backward direction: ") + e.what());
  }

  if (!is_permutation(L_obj, fem.algebras.size()) ||
      !is_permutation(L_mor, fem.fem_cat.morphisms.size()))
    return CheckOutcome::fail("forward direction is not bijective");
  if (!functor_compose(P, L).same_maps(identity_functor(hom_fem.cat)))
    return CheckOutcome::fail("round trip on " + hom_fem.cat.name +
                              " is not the identity");
  if (!functor_compose(L, P).same_maps(identity_functor(fem.fem_cat)))
    return CheckOutcome::fail("round trip on " + fem.fem_cat.name +
                              " is not the identity");
  return CheckOutcome::pass();
}

}  // namespace daggercat
