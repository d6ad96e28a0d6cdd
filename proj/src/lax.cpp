#include "daggercat/lax.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "daggercat/errors.hpp"

namespace daggercat {

namespace {

std::string pad_id(int i, std::size_t total) {
  std::string s = std::to_string(i);
  const std::size_t width = std::to_string(total == 0 ? 0 : total - 1).size();
  while (s.size() < width) s.insert(s.begin(), '0');
  return s;
}

}  // namespace

int DaggerLaxFunctor::gamma_at(const FinDagger2Category& K, int a, int b,
                               int c, int g, int f) const {
  const int n_f = static_cast<int>(K.hom(a, b).objects.size());
  return gamma[static_cast<std::size_t>(K.tidx(a, b, c))]
              [static_cast<std::size_t>(g * n_f + f)];
}

void validate_lax_functor(const FinDagger2Category& K,
                          const FinDagger2Category& L,
                          const DaggerLaxFunctor& F) {
  const int n = K.n0();
  if (static_cast<int>(F.map0.size()) != n)
    throw ValidationError(ErrKind::DanglingReference, "0-cell map size");
  for (int a : F.map0)
    if (a < 0 || a >= L.n0())
      throw ValidationError(ErrKind::DanglingReference, "0-cell image");

  auto f0 = [&](int a) { return F.map0[static_cast<std::size_t>(a)]; };
  auto f1 = [&](int a, int b, int f) {
    return F.map1[static_cast<std::size_t>(a * n + b)][static_cast<std::size_t>(f)];
  };
  auto f2 = [&](int a, int b, int x) {
    return F.map2[static_cast<std::size_t>(a * n + b)][static_cast<std::size_t>(x)];
  };

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const std::size_t ab = static_cast<std::size_t>(a * n + b);
      try {
        validate_functor_indexed(K.hom(a, b), L.hom(f0(a), f0(b)), F.map1[ab],
                                 F.map2[ab]);
      } catch (const ValidationError& e) {
        throw ValidationError(ErrKind::HomMapNotDagger,
                              "hom(" + K.cells0[static_cast<std::size_t>(a)] +
                                  ", " + K.cells0[static_cast<std::size_t>(b)] +
                                  "): " + e.witness());
      }
    }

  // Endpoints of the comparison cells.
  for (int a = 0; a < n; ++a) {
    const FinDaggerCategory& haa = L.hom(f0(a), f0(a));
    const int d = F.delta[static_cast<std::size_t>(a)];
    if (haa.src(d) != L.id1(f0(a)) || haa.tgt(d) != f1(a, a, K.id1(a)))
      throw ValidationError(ErrKind::LaxCoherenceFail,
                            "delta endpoints at " +
                                K.cells0[static_cast<std::size_t>(a)]);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const FinDaggerCategory& hac = L.hom(f0(a), f0(c));
        for (int g = 0; g < static_cast<int>(K.hom(b, c).objects.size()); ++g)
          for (int f = 0; f < static_cast<int>(K.hom(a, b).objects.size()); ++f) {
            const int gm = F.gamma_at(K, a, b, c, g, f);
            if (hac.src(gm) !=
                    L.comp1(f0(a), f0(b), f0(c), f1(b, c, g), f1(a, b, f)) ||
                hac.tgt(gm) != f1(a, c, K.comp1(a, b, c, g, f)))
              throw ValidationError(
                  ErrKind::LaxCoherenceFail,
                  "gamma endpoints at (" + K.hom(b, c).objects[static_cast<std::size_t>(g)] +
                      ", " + K.hom(a, b).objects[static_cast<std::size_t>(f)] + ")");
          }
      }

  // Naturality of gamma in each slot.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const FinDaggerCategory& hab = K.hom(a, b);
        const FinDaggerCategory& hbc = K.hom(b, c);
        const FinDaggerCategory& hac = L.hom(f0(a), f0(c));
        for (int g = 0; g < static_cast<int>(hbc.objects.size()); ++g)
          for (int x = 0; x < static_cast<int>(hab.morphisms.size()); ++x) {
            const int lhs = hac.comp(
                F.gamma_at(K, a, b, c, g, hab.tgt(x)),
                L.lwhisk(f0(a), f0(b), f0(c), f1(b, c, g), f2(a, b, x)));
            const int rhs = hac.comp(f2(a, c, K.lwhisk(a, b, c, g, x)),
                                     F.gamma_at(K, a, b, c, g, hab.src(x)));
            if (lhs != rhs)
              throw ValidationError(ErrKind::LaxCoherenceFail,
                                    "gamma naturality (left) at " + hab.mid(x));
          }
        for (int y = 0; y < static_cast<int>(hbc.morphisms.size()); ++y)
          for (int f = 0; f < static_cast<int>(hab.objects.size()); ++f) {
            const int lhs = hac.comp(
                F.gamma_at(K, a, b, c, hbc.tgt(y), f),
                L.rwhisk(f0(a), f0(b), f0(c), f2(b, c, y), f1(a, b, f)));
            const int rhs = hac.comp(f2(a, c, K.rwhisk(a, b, c, y, f)),
                                     F.gamma_at(K, a, b, c, hbc.src(y), f));
            if (lhs != rhs)
              throw ValidationError(ErrKind::LaxCoherenceFail,
                                    "gamma naturality (right) at " + hbc.mid(y));
          }
      }

  // Associativity and unit coherence.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const FinDaggerCategory& had = L.hom(f0(a), f0(d));
          for (int h = 0; h < static_cast<int>(K.hom(c, d).objects.size()); ++h)
            for (int g = 0; g < static_cast<int>(K.hom(b, c).objects.size()); ++g)
              for (int f = 0; f < static_cast<int>(K.hom(a, b).objects.size()); ++f) {
                const int lhs = had.comp(
                    F.gamma_at(K, a, c, d, h, K.comp1(a, b, c, g, f)),
                    L.lwhisk(f0(a), f0(c), f0(d), f1(c, d, h),
                             F.gamma_at(K, a, b, c, g, f)));
                const int rhs = had.comp(
                    F.gamma_at(K, a, b, d, K.comp1(b, c, d, h, g), f),
                    L.rwhisk(f0(a), f0(b), f0(d), F.gamma_at(K, b, c, d, h, g),
                             f1(a, b, f)));
                if (lhs != rhs)
                  throw ValidationError(ErrKind::LaxCoherenceFail,
                                        "gamma associativity");
              }
        }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const FinDaggerCategory& hab = L.hom(f0(a), f0(b));
      for (int f = 0; f < static_cast<int>(K.hom(a, b).objects.size()); ++f) {
        const int idf = hab.identity[static_cast<std::size_t>(f1(a, b, f))];
        const int left = hab.comp(
            F.gamma_at(K, a, b, b, K.id1(b), f),
            L.rwhisk(f0(a), f0(b), f0(b), F.delta[static_cast<std::size_t>(b)],
                     f1(a, b, f)));
        if (left != idf)
          throw ValidationError(ErrKind::LaxCoherenceFail,
                                "unit (left) at " +
                                    K.hom(a, b).objects[static_cast<std::size_t>(f)]);
        const int right = hab.comp(
            F.gamma_at(K, a, a, b, f, K.id1(a)),
            L.lwhisk(f0(a), f0(a), f0(b), f1(a, b, f),
                     F.delta[static_cast<std::size_t>(a)]));
        if (right != idf)
          throw ValidationError(ErrKind::LaxCoherenceFail,
                                "unit (right) at " +
                                    K.hom(a, b).objects[static_cast<std::size_t>(f)]);
      }
    }

  // Frobenius axiom: (gamma_{h,g} * Ff) . (Fh * gamma^_{g,f})
  //                == gamma^_{hg,f} . gamma_{h,gf}.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const FinDaggerCategory& had = L.hom(f0(a), f0(d));
          for (int h = 0; h < static_cast<int>(K.hom(c, d).objects.size()); ++h)
            for (int g = 0; g < static_cast<int>(K.hom(b, c).objects.size()); ++g)
              for (int f = 0; f < static_cast<int>(K.hom(a, b).objects.size()); ++f) {
                const int gam_gf = F.gamma_at(K, a, b, c, g, f);
                const FinDaggerCategory& hac = L.hom(f0(a), f0(c));
                const int lhs = had.comp(
                    L.rwhisk(f0(a), f0(b), f0(d), F.gamma_at(K, b, c, d, h, g),
                             f1(a, b, f)),
                    L.lwhisk(f0(a), f0(c), f0(d), f1(c, d, h),
                             hac.dagger[static_cast<std::size_t>(gam_gf)]));
                const int gam_h_gf =
                    F.gamma_at(K, a, c, d, h, K.comp1(a, b, c, g, f));
                const int gam_hg_f =
                    F.gamma_at(K, a, b, d, K.comp1(b, c, d, h, g), f);
                const int rhs = had.comp(
                    had.dagger[static_cast<std::size_t>(gam_hg_f)], gam_h_gf);
                if (lhs != rhs)
                  throw ValidationError(
                      ErrKind::FrobeniusAxiomFail,
                      "(" + K.hom(c, d).objects[static_cast<std::size_t>(h)] + ", " +
                          K.hom(b, c).objects[static_cast<std::size_t>(g)] + ", " +
                          K.hom(a, b).objects[static_cast<std::size_t>(f)] + ")");
              }
        }
}

FinDagger2Category trivial_2category() {
  FinDagger2Category K;
  K.name = "triv";
  K.cells0 = {"*"};
  CategoryDescription d;
  d.name = "hom(*, *)";
  d.objects = {"i"};
  d.morphisms = {{"1", "i", "i"}};
  d.identities["i"] = "1";
  d.composition = {{"1", "1", "1"}};
  d.dagger["1"] = "1";
  K.homs = {validate_category(d)};
  K.id1_tab = {0};
  K.comp1_tab = {{0}};
  K.lwhisk_tab = {{0}};
  K.rwhisk_tab = {{0}};
  return K;
}

DaggerLaxFunctor monad_to_lax(const FinDagger2Category& trivial,
                              const FinDagger2Category& L, const Monad2& m) {
  DaggerLaxFunctor F;
  F.source = &trivial;
  F.target = &L;
  F.map0 = {m.cell0};
  F.map1 = {{m.t}};
  F.map2 = {
      {L.hom(m.cell0, m.cell0).identity[static_cast<std::size_t>(m.t)]}};
  F.gamma = {{m.mu}};
  F.delta = {m.eta};
  return F;
}

Monad2 lax_to_monad(const DaggerLaxFunctor& F) {
  const FinDagger2Category& K = *F.source;
  if (K.n0() != 1 || K.hom(0, 0).objects.size() != 1 ||
      K.hom(0, 0).morphisms.size() != 1)
    throw ValidationError(ErrKind::SourceNotTerminal,
                          "source must have a single identity cell");
  Monad2 m;
  m.cell0 = F.map0[0];
  m.t = F.map1[0][0];
  m.mu = F.gamma[0][0];
  m.eta = F.delta[0];
  return m;
}

DaggerLaxFunctor compose_lax(const DaggerLaxFunctor& G,
                             const DaggerLaxFunctor& F) {
  const FinDagger2Category& K = *F.source;
  const FinDagger2Category& L = *F.target;
  const FinDagger2Category& M = *G.target;
  const int n = K.n0();
  const int nl = L.n0();

  DaggerLaxFunctor R;
  R.source = F.source;
  R.target = G.target;
  R.map0.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    R.map0[static_cast<std::size_t>(a)] =
        G.map0[static_cast<std::size_t>(F.map0[static_cast<std::size_t>(a)])];

  auto g1 = [&](int la, int lb, int f) {
    return G.map1[static_cast<std::size_t>(la * nl + lb)]
                 [static_cast<std::size_t>(f)];
  };
  auto g2 = [&](int la, int lb, int x) {
    return G.map2[static_cast<std::size_t>(la * nl + lb)]
                 [static_cast<std::size_t>(x)];
  };

  R.map1.resize(static_cast<std::size_t>(n * n));
  R.map2.resize(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const std::size_t ab = static_cast<std::size_t>(a * n + b);
      const int la = F.map0[static_cast<std::size_t>(a)];
      const int lb = F.map0[static_cast<std::size_t>(b)];
      R.map1[ab].resize(F.map1[ab].size());
      for (std::size_t f = 0; f < F.map1[ab].size(); ++f)
        R.map1[ab][f] = g1(la, lb, F.map1[ab][f]);
      R.map2[ab].resize(F.map2[ab].size());
      for (std::size_t x = 0; x < F.map2[ab].size(); ++x)
        R.map2[ab][x] = g2(la, lb, F.map2[ab][x]);
    }

  R.delta.resize(static_cast<std::size_t>(n));
  R.gamma.assign(static_cast<std::size_t>(n * n * n), {});
  for (int a = 0; a < n; ++a) {
    const int la = F.map0[static_cast<std::size_t>(a)];
    const int ma = R.map0[static_cast<std::size_t>(a)];
    // delta^{GF} = G(delta^F) . delta^G at the image 0-cell
    R.delta[static_cast<std::size_t>(a)] = M.hom(ma, ma).comp(
        g2(la, la, F.delta[static_cast<std::size_t>(a)]),
        G.delta[static_cast<std::size_t>(la)]);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const std::size_t t = static_cast<std::size_t>(K.tidx(a, b, c));
        const int la = F.map0[static_cast<std::size_t>(a)];
        const int lb = F.map0[static_cast<std::size_t>(b)];
        const int lc = F.map0[static_cast<std::size_t>(c)];
        const int ma = R.map0[static_cast<std::size_t>(a)];
        const int mc = R.map0[static_cast<std::size_t>(c)];
        const std::size_t n_f = K.hom(a, b).objects.size();
        const std::size_t n_g = K.hom(b, c).objects.size();
        R.gamma[t].assign(n_f * n_g, -1);
        for (std::size_t g = 0; g < n_g; ++g)
          for (std::size_t f = 0; f < n_f; ++f) {
            const int Ff = F.map1[static_cast<std::size_t>(a * n + b)][f];
            const int Fg = F.map1[static_cast<std::size_t>(b * n + c)][g];
            const int gamma_F = F.gamma_at(K, a, b, c, static_cast<int>(g),
                                           static_cast<int>(f));
            const int gamma_G = G.gamma_at(L, la, lb, lc, Fg, Ff);
            R.gamma[t][g * n_f + f] =
                M.hom(ma, mc).comp(g2(la, lc, gamma_F), gamma_G);
          }
      }
  return R;
}

void validate_lax_nat(const FinDagger2Category& K, const FinDagger2Category& L,
                      const DaggerLaxFunctor& F, const DaggerLaxFunctor& G,
                      const DaggerLaxNat& nat) {
  const int n = K.n0();
  auto f0 = [&](int a) { return F.map0[static_cast<std::size_t>(a)]; };
  auto g0 = [&](int a) { return G.map0[static_cast<std::size_t>(a)]; };
  auto f1 = [&](int a, int b, int f) {
    return F.map1[static_cast<std::size_t>(a * n + b)][static_cast<std::size_t>(f)];
  };
  auto g1 = [&](int a, int b, int f) {
    return G.map1[static_cast<std::size_t>(a * n + b)][static_cast<std::size_t>(f)];
  };
  auto f2 = [&](int a, int b, int x) {
    return F.map2[static_cast<std::size_t>(a * n + b)][static_cast<std::size_t>(x)];
  };
  auto g2 = [&](int a, int b, int x) {
    return G.map2[static_cast<std::size_t>(a * n + b)][static_cast<std::size_t>(x)];
  };
  auto al = [&](int a) { return nat.alpha[static_cast<std::size_t>(a)]; };
  auto tau = [&](int a, int b, int f) {
    return nat.tau[static_cast<std::size_t>(a * n + b)][static_cast<std::size_t>(f)];
  };

  if (static_cast<int>(nat.alpha.size()) != n ||
      static_cast<int>(nat.tau.size()) != n * n)
    throw ValidationError(ErrKind::DanglingReference, "component table size");

  for (int a = 0; a < n; ++a)
    if (al(a) < 0 ||
        al(a) >= static_cast<int>(L.hom(f0(a), g0(a)).objects.size()))
      throw ValidationError(ErrKind::DanglingReference, "alpha component");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const FinDaggerCategory& hom = L.hom(f0(a), g0(b));
      for (int f = 0; f < static_cast<int>(K.hom(a, b).objects.size()); ++f) {
        const int t = tau(a, b, f);
        if (hom.src(t) != L.comp1(f0(a), g0(a), g0(b), g1(a, b, f), al(a)) ||
            hom.tgt(t) != L.comp1(f0(a), f0(b), g0(b), al(b), f1(a, b, f)))
          throw ValidationError(ErrKind::LaxCoherenceFail,
                                "tau endpoints at " +
                                    K.hom(a, b).objects[static_cast<std::size_t>(f)]);
      }
    }

  // Naturality in the 1-cell.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const FinDaggerCategory& hom = L.hom(f0(a), g0(b));
      for (int x = 0; x < static_cast<int>(K.hom(a, b).morphisms.size()); ++x) {
        const int from = K.hom(a, b).src(x);
        const int to = K.hom(a, b).tgt(x);
        const int lhs = hom.comp(
            tau(a, b, to),
            L.rwhisk(f0(a), g0(a), g0(b), g2(a, b, x), al(a)));
        const int rhs = hom.comp(
            L.lwhisk(f0(a), f0(b), g0(b), al(b), f2(a, b, x)),
            tau(a, b, from));
        if (lhs != rhs)
          throw ValidationError(ErrKind::LaxCoherenceFail,
                                "tau naturality at " + K.hom(a, b).mid(x));
      }
    }

  // Coherence with gamma and delta.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const FinDaggerCategory& hom = L.hom(f0(a), g0(c));
        for (int g = 0; g < static_cast<int>(K.hom(b, c).objects.size()); ++g)
          for (int f = 0; f < static_cast<int>(K.hom(a, b).objects.size()); ++f) {
            const int lhs = hom.comp(
                tau(a, c, K.comp1(a, b, c, g, f)),
                L.rwhisk(f0(a), g0(a), g0(c), G.gamma_at(K, a, b, c, g, f),
                         al(a)));
            const int step1 =
                L.lwhisk(f0(a), g0(b), g0(c), g1(b, c, g), tau(a, b, f));
            const int step2 =
                L.rwhisk(f0(a), f0(b), g0(c), tau(b, c, g), f1(a, b, f));
            const int step3 = L.lwhisk(f0(a), f0(c), g0(c), al(c),
                                       F.gamma_at(K, a, b, c, g, f));
            const int rhs = hom.comp(step3, hom.comp(step2, step1));
            if (lhs != rhs)
              throw ValidationError(
                  ErrKind::LaxCoherenceFail,
                  "tau composition at (" +
                      K.hom(b, c).objects[static_cast<std::size_t>(g)] + ", " +
                      K.hom(a, b).objects[static_cast<std::size_t>(f)] + ")");
          }
      }
  for (int a = 0; a < n; ++a) {
    const FinDaggerCategory& hom = L.hom(f0(a), g0(a));
    const int lhs = hom.comp(
        tau(a, a, K.id1(a)),
        L.rwhisk(f0(a), g0(a), g0(a), G.delta[static_cast<std::size_t>(a)],
                 al(a)));
    const int rhs = L.lwhisk(f0(a), f0(a), g0(a), al(a),
                             F.delta[static_cast<std::size_t>(a)]);
    if (lhs != rhs)
      throw ValidationError(ErrKind::LaxCoherenceFail,
                            "tau unit at " + K.cells0[static_cast<std::size_t>(a)]);
  }

  // Dagger pentagon.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        for (int g = 0; g < static_cast<int>(K.hom(b, c).objects.size()); ++g)
          for (int f = 0; f < static_cast<int>(K.hom(a, b).objects.size()); ++f) {
            const FinDaggerCategory& hab = L.hom(f0(a), g0(b));
            const FinDaggerCategory& hac = L.hom(f0(a), g0(c));
            const int tf_dag = hab.dagger[static_cast<std::size_t>(tau(a, b, f))];
            const int tgf_dag =
                hac.dagger[static_cast<std::size_t>(tau(a, c, K.comp1(a, b, c, g, f)))];
            const int lhs = hac.comp(
                L.rwhisk(f0(a), g0(a), g0(c), G.gamma_at(K, a, b, c, g, f),
                         al(a)),
                L.lwhisk(f0(a), g0(b), g0(c), g1(b, c, g), tf_dag));
            const int rhs = hac.comp(
                tgf_dag,
                hac.comp(L.lwhisk(f0(a), f0(c), g0(c), al(c),
                                  F.gamma_at(K, a, b, c, g, f)),
                         L.rwhisk(f0(a), f0(b), g0(c), tau(b, c, g),
                                  f1(a, b, f))));
            if (lhs != rhs)
              throw ValidationError(
                  ErrKind::LaxCoherenceFail,
                  "dagger pentagon at (" +
                      K.hom(b, c).objects[static_cast<std::size_t>(g)] + ", " +
                      K.hom(a, b).objects[static_cast<std::size_t>(f)] + ")");
          }
      }
}

DaggerLaxNat identity_lax_nat(const FinDagger2Category& K,
                              const FinDagger2Category& L,
                              const DaggerLaxFunctor& F) {
  const int n = K.n0();
  DaggerLaxNat nat;
  nat.alpha.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    nat.alpha[static_cast<std::size_t>(a)] =
        L.id1(F.map0[static_cast<std::size_t>(a)]);
  nat.tau.resize(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const std::size_t ab = static_cast<std::size_t>(a * n + b);
      nat.tau[ab].resize(K.hom(a, b).objects.size());
      for (std::size_t f = 0; f < K.hom(a, b).objects.size(); ++f) {
        const int Ff = F.map1[ab][f];
        nat.tau[ab][f] =
            L.hom(F.map0[static_cast<std::size_t>(a)],
                  F.map0[static_cast<std::size_t>(b)])
                .identity[static_cast<std::size_t>(Ff)];
      }
    }
  return nat;
}

DaggerLaxNat vcomp_lax_nat(const FinDagger2Category& K,
                           const FinDagger2Category& L,
                           const DaggerLaxFunctor& F, const DaggerLaxFunctor& G,
                           const DaggerLaxFunctor& H, const DaggerLaxNat& beta,
                           const DaggerLaxNat& alpha) {
  const int n = K.n0();
  DaggerLaxNat out;
  out.alpha.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    out.alpha[static_cast<std::size_t>(a)] = L.comp1(
        F.map0[static_cast<std::size_t>(a)], G.map0[static_cast<std::size_t>(a)],
        H.map0[static_cast<std::size_t>(a)],
        beta.alpha[static_cast<std::size_t>(a)],
        alpha.alpha[static_cast<std::size_t>(a)]);
  out.tau.resize(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const std::size_t ab = static_cast<std::size_t>(a * n + b);
      const int fa = F.map0[static_cast<std::size_t>(a)];
      const int ga = G.map0[static_cast<std::size_t>(a)];
      const int gb = G.map0[static_cast<std::size_t>(b)];
      const int hb = H.map0[static_cast<std::size_t>(b)];
      out.tau[ab].resize(K.hom(a, b).objects.size());
      for (std::size_t f = 0; f < K.hom(a, b).objects.size(); ++f) {
        const int step1 = L.rwhisk(fa, ga, hb, beta.tau[ab][f],
                                   alpha.alpha[static_cast<std::size_t>(a)]);
        const int step2 = L.lwhisk(fa, gb, hb,
                                   beta.alpha[static_cast<std::size_t>(b)],
                                   alpha.tau[ab][f]);
        out.tau[ab][f] = L.hom(fa, hb).comp(step2, step1);
      }
    }
  return out;
}

void validate_modification(const FinDagger2Category& K,
                           const FinDagger2Category& L,
                           const DaggerLaxFunctor& F, const DaggerLaxFunctor& G,
                           const DaggerLaxNat& a, const DaggerLaxNat& b,
                           const DaggerModification& m) {
  const int n = K.n0();
  if (static_cast<int>(m.xi.size()) != n)
    throw ValidationError(ErrKind::DanglingReference, "xi table size");
  for (int c = 0; c < n; ++c) {
    const FinDaggerCategory& hom =
        L.hom(F.map0[static_cast<std::size_t>(c)],
              G.map0[static_cast<std::size_t>(c)]);
    const int x = m.xi[static_cast<std::size_t>(c)];
    if (hom.src(x) != a.alpha[static_cast<std::size_t>(c)] ||
        hom.tgt(x) != b.alpha[static_cast<std::size_t>(c)])
      throw ValidationError(ErrKind::LaxCoherenceFail,
                            "xi endpoints at " +
                                K.cells0[static_cast<std::size_t>(c)]);
  }
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d) {
      const std::size_t cd = static_cast<std::size_t>(c * n + d);
      const int fc = F.map0[static_cast<std::size_t>(c)];
      const int fd = F.map0[static_cast<std::size_t>(d)];
      const int gc = G.map0[static_cast<std::size_t>(c)];
      const int gd = G.map0[static_cast<std::size_t>(d)];
      const FinDaggerCategory& hom = L.hom(fc, gd);
      for (std::size_t f = 0; f < K.hom(c, d).objects.size(); ++f) {
        const int Ff = F.map1[cd][f];
        const int Gf = G.map1[cd][f];
        const int lhs = hom.comp(
            L.rwhisk(fc, fd, gd, m.xi[static_cast<std::size_t>(d)], Ff),
            a.tau[cd][f]);
        const int rhs = hom.comp(
            b.tau[cd][f],
            L.lwhisk(fc, gc, gd, Gf, m.xi[static_cast<std::size_t>(c)]));
        if (lhs != rhs)
          throw ValidationError(
              ErrKind::LaxCoherenceFail,
              "modification axiom at " +
                  K.hom(c, d).objects[f]);
        // dagger counterpart: xi^ must satisfy the axiom from b to a
        const int xi_c_dag =
            L.hom(fc, gc).dagger[static_cast<std::size_t>(
                m.xi[static_cast<std::size_t>(c)])];
        const int xi_d_dag =
            L.hom(fd, gd).dagger[static_cast<std::size_t>(
                m.xi[static_cast<std::size_t>(d)])];
        const int lhs2 = hom.comp(
            L.rwhisk(fc, fd, gd, xi_d_dag, Ff), b.tau[cd][f]);
        const int rhs2 = hom.comp(
            a.tau[cd][f], L.lwhisk(fc, gc, gd, Gf, xi_c_dag));
        if (lhs2 != rhs2)
          throw ValidationError(
              ErrKind::LaxCoherenceFail,
              "modification dagger axiom at " + K.hom(c, d).objects[f]);
      }
    }
}

DaggerModification modification_dagger(const FinDagger2Category& K,
                                       const FinDagger2Category& L,
                                       const DaggerLaxFunctor& F,
                                       const DaggerLaxFunctor& G,
                                       const DaggerModification& m) {
  DaggerModification out;
  out.xi.resize(m.xi.size());
  for (int c = 0; c < K.n0(); ++c)
    out.xi[static_cast<std::size_t>(c)] =
        L.hom(F.map0[static_cast<std::size_t>(c)],
              G.map0[static_cast<std::size_t>(c)])
            .dagger[static_cast<std::size_t>(m.xi[static_cast<std::size_t>(c)])];
  return out;
}

DaggerLaxFunctor delta_const(const FinDagger2Category& K,
                             const FinDagger2Category& L, int c0) {
  const int n = K.n0();
  DaggerLaxFunctor F;
  F.source = &K;
  F.target = &L;
  F.map0.assign(static_cast<std::size_t>(n), c0);
  const int id = L.id1(c0);
  const int id2 = L.hom(c0, c0).identity[static_cast<std::size_t>(id)];
  F.map1.resize(static_cast<std::size_t>(n * n));
  F.map2.resize(static_cast<std::size_t>(n * n));
  F.gamma.resize(static_cast<std::size_t>(n * n * n));
  F.delta.assign(static_cast<std::size_t>(n), id2);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const std::size_t ab = static_cast<std::size_t>(a * n + b);
      F.map1[ab].assign(K.hom(a, b).objects.size(), id);
      F.map2[ab].assign(K.hom(a, b).morphisms.size(), id2);
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const std::size_t t = static_cast<std::size_t>(K.tidx(a, b, c));
        F.gamma[t].assign(
            K.hom(a, b).objects.size() * K.hom(b, c).objects.size(), id2);
      }
  return F;
}

namespace {

bool lax_nat_valid(const FinDagger2Category& K, const FinDagger2Category& L,
                   const DaggerLaxFunctor& F, const DaggerLaxFunctor& G,
                   const DaggerLaxNat& n) {
  try {
    validate_lax_nat(K, L, F, G, n);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

bool modification_valid(const FinDagger2Category& K,
                        const FinDagger2Category& L, const DaggerLaxFunctor& F,
                        const DaggerLaxFunctor& G, const DaggerLaxNat& a,
                        const DaggerLaxNat& b, const DaggerModification& m) {
  try {
    validate_modification(K, L, F, G, a, b, m);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

}  // namespace

DagLaxHomResult daglax_hom(const FinDagger2Category& K,
                           const FinDagger2Category& L,
                           const DaggerLaxFunctor& F, int c0) {
  const int n = K.n0();
  const DaggerLaxFunctor D = delta_const(K, L, c0);

  DagLaxHomResult R;

  // Enumerate lax naturals D => F by an odometer over the alpha components,
  // then over the tau slots (candidates filtered by frame).
  std::vector<int> alpha_sizes(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    alpha_sizes[static_cast<std::size_t>(a)] = static_cast<int>(
        L.hom(c0, F.map0[static_cast<std::size_t>(a)]).objects.size());

  std::vector<int> alpha(static_cast<std::size_t>(n), 0);
  std::function<void(int)> walk_alpha = [&](int pos) {
    if (pos == n) {
      // collect tau candidates per (a,b,f)
      struct Slot {
        int a, b, f;
        std::vector<int> cands;
      };
      std::vector<Slot> slots;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int f = 0; f < static_cast<int>(K.hom(a, b).objects.size()); ++f) {
            Slot s{a, b, f, {}};
            const int fb = F.map0[static_cast<std::size_t>(b)];
            const FinDaggerCategory& hom = L.hom(c0, fb);
            const int ff = F.map1[static_cast<std::size_t>(a * n + b)]
                                 [static_cast<std::size_t>(f)];
            const int want_src =
                L.comp1(c0, F.map0[static_cast<std::size_t>(a)], fb, ff,
                        alpha[static_cast<std::size_t>(a)]);
            const int want_tgt =
                L.comp1(c0, c0, fb, alpha[static_cast<std::size_t>(b)],
                        L.id1(c0));
            for (int x = 0; x < static_cast<int>(hom.morphisms.size()); ++x)
              if (hom.src(x) == want_src && hom.tgt(x) == want_tgt)
                s.cands.push_back(x);
            if (s.cands.empty()) return;
            slots.push_back(std::move(s));
          }
      std::vector<std::size_t> pick(slots.size(), 0);
      while (true) {
        DaggerLaxNat cand;
        cand.alpha = alpha;
        cand.tau.resize(static_cast<std::size_t>(n * n));
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            cand.tau[static_cast<std::size_t>(a * n + b)].assign(
                K.hom(a, b).objects.size(), -1);
        for (std::size_t s = 0; s < slots.size(); ++s)
          cand.tau[static_cast<std::size_t>(slots[s].a * n + slots[s].b)]
                  [static_cast<std::size_t>(slots[s].f)] =
              slots[s].cands[pick[s]];
        if (lax_nat_valid(K, L, D, F, cand)) R.nats.push_back(cand);
        // bump the odometer
        std::size_t s = 0;
        for (; s < slots.size(); ++s) {
          if (++pick[s] < slots[s].cands.size()) break;
          pick[s] = 0;
        }
        if (s == slots.size()) break;
        if (slots.empty()) break;
      }
      return;
    }
    for (alpha[static_cast<std::size_t>(pos)] = 0;
         alpha[static_cast<std::size_t>(pos)] < alpha_sizes[static_cast<std::size_t>(pos)];
         ++alpha[static_cast<std::size_t>(pos)])
      walk_alpha(pos + 1);
  };
  walk_alpha(0);

  // Modifications between every ordered pair of naturals.
  for (std::size_t i = 0; i < R.nats.size(); ++i)
    for (std::size_t j = 0; j < R.nats.size(); ++j) {
      // xi components per 0-cell, odometer again
      std::vector<std::vector<int>> cands(static_cast<std::size_t>(n));
      bool feasible = true;
      for (int c = 0; c < n; ++c) {
        const FinDaggerCategory& hom =
            L.hom(c0, F.map0[static_cast<std::size_t>(c)]);
        for (int x = 0; x < static_cast<int>(hom.morphisms.size()); ++x)
          if (hom.src(x) == R.nats[i].alpha[static_cast<std::size_t>(c)] &&
              hom.tgt(x) == R.nats[j].alpha[static_cast<std::size_t>(c)])
            cands[static_cast<std::size_t>(c)].push_back(x);
        if (cands[static_cast<std::size_t>(c)].empty()) feasible = false;
      }
      if (!feasible) continue;
      std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
      while (true) {
        DaggerModification m;
        m.xi.resize(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c)
          m.xi[static_cast<std::size_t>(c)] =
              cands[static_cast<std::size_t>(c)][pick[static_cast<std::size_t>(c)]];
        if (modification_valid(K, L, D, F, R.nats[i], R.nats[j], m)) {
          R.mods.push_back(m);
          R.mod_endpoints.push_back({static_cast<int>(i), static_cast<int>(j)});
        }
        std::size_t c = 0;
        for (; c < static_cast<std::size_t>(n); ++c) {
          if (++pick[c] < cands[c].size()) break;
          pick[c] = 0;
        }
        if (c == static_cast<std::size_t>(n)) break;
      }
    }

  // Assemble the dagger category.
  CategoryDescription d;
  d.name = "daglaxhom";
  for (std::size_t i = 0; i < R.nats.size(); ++i)
    d.objects.push_back("L" + pad_id(static_cast<int>(i), R.nats.size()));
  for (std::size_t k = 0; k < R.mods.size(); ++k)
    d.morphisms.push_back(
        {"m" + pad_id(static_cast<int>(k), R.mods.size()),
         d.objects[static_cast<std::size_t>(R.mod_endpoints[k].first)],
         d.objects[static_cast<std::size_t>(R.mod_endpoints[k].second)]});

  auto find_mod = [&](int from, int to, const DaggerModification& m) {
    for (std::size_t k = 0; k < R.mods.size(); ++k)
      if (R.mod_endpoints[k].first == from && R.mod_endpoints[k].second == to &&
          R.mods[k].xi == m.xi)
        return static_cast<int>(k);
    throw ValidationError(ErrKind::InternalClosureFailure,
                          "modification escapes enumeration");
  };

  for (std::size_t i = 0; i < R.nats.size(); ++i) {
    DaggerModification idm;
    idm.xi.resize(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c)
      idm.xi[static_cast<std::size_t>(c)] =
          L.hom(c0, F.map0[static_cast<std::size_t>(c)])
              .identity[static_cast<std::size_t>(
                  R.nats[i].alpha[static_cast<std::size_t>(c)])];
    d.identities[d.objects[i]] =
        d.morphisms[static_cast<std::size_t>(
                        find_mod(static_cast<int>(i), static_cast<int>(i), idm))]
            .id;
  }
  for (std::size_t k2 = 0; k2 < R.mods.size(); ++k2)
    for (std::size_t k1 = 0; k1 < R.mods.size(); ++k1) {
      if (R.mod_endpoints[k1].second != R.mod_endpoints[k2].first) continue;
      DaggerModification cm;
      cm.xi.resize(static_cast<std::size_t>(n));
      for (int c = 0; c < n; ++c)
        cm.xi[static_cast<std::size_t>(c)] =
            L.hom(c0, F.map0[static_cast<std::size_t>(c)])
                .comp(R.mods[k2].xi[static_cast<std::size_t>(c)],
                      R.mods[k1].xi[static_cast<std::size_t>(c)]);
      d.composition.push_back(
          {d.morphisms[k2].id, d.morphisms[k1].id,
           d.morphisms[static_cast<std::size_t>(
                           find_mod(R.mod_endpoints[k1].first,
                                    R.mod_endpoints[k2].second, cm))]
               .id});
    }
  for (std::size_t k = 0; k < R.mods.size(); ++k) {
    const DaggerModification dm =
        modification_dagger(K, L, D, F, R.mods[k]);
    d.dagger[d.morphisms[k].id] =
        d.morphisms[static_cast<std::size_t>(
                        find_mod(R.mod_endpoints[k].second,
                                 R.mod_endpoints[k].first, dm))]
            .id;
  }
  R.cat = validate_category(d);
  return R;
}

CheckOutcome check_dagger_lax_limit(const FinDagger2Category& K,
                                    const FinDagger2Category& L,
                                    const DaggerLaxFunctor& F, int E,
                                    const DaggerLaxNat& pi) {
  const int n = K.n0();
  {
    const DaggerLaxFunctor DE = delta_const(K, L, E);
    try {
      validate_lax_nat(K, L, DE, F, pi);
    } catch (const ValidationError& e) {
      return CheckOutcome::fail(std::string("pi is not a lax natural: ") +
                                e.witness());
    }
  }
  for (int C = 0; C < L.n0(); ++C) {
    const DagLaxHomResult H = daglax_hom(K, L, F, C);
    const FinDaggerCategory& hce = L.hom(C, E);

    auto image_nat = [&](int g) {
      DaggerLaxNat img;
      img.alpha.resize(static_cast<std::size_t>(n));
      img.tau.resize(static_cast<std::size_t>(n * n));
      for (int a = 0; a < n; ++a)
        img.alpha[static_cast<std::size_t>(a)] =
            L.comp1(C, E, F.map0[static_cast<std::size_t>(a)],
                    pi.alpha[static_cast<std::size_t>(a)], g);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const std::size_t ab = static_cast<std::size_t>(a * n + b);
          img.tau[ab].resize(K.hom(a, b).objects.size());
          for (std::size_t f = 0; f < K.hom(a, b).objects.size(); ++f)
            img.tau[ab][f] = L.rwhisk(C, E, F.map0[static_cast<std::size_t>(b)],
                                      pi.tau[ab][f], g);
        }
      return img;
    };
    auto nat_index = [&](const DaggerLaxNat& nt) -> int {
      for (std::size_t i = 0; i < H.nats.size(); ++i)
        if (H.nats[i].alpha == nt.alpha && H.nats[i].tau == nt.tau)
          return static_cast<int>(i);
      return -1;
    };

    std::vector<int> obj_map(hce.objects.size(), -1);
    for (int g = 0; g < static_cast<int>(hce.objects.size()); ++g) {
      const int i = nat_index(image_nat(g));
      if (i < 0)
        return CheckOutcome::fail(
            "0-cell " + L.cells0[static_cast<std::size_t>(C)] +
            ": composite of pi with a 1-cell is not a cone");
      obj_map[static_cast<std::size_t>(g)] = i;
    }
    std::vector<int> sorted = obj_map;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return CheckOutcome::fail(
          "0-cell " + L.cells0[static_cast<std::size_t>(C)] +
          ": composition with pi is not injective on 1-cells");
    if (obj_map.size() != H.nats.size())
      return CheckOutcome::fail(
          "0-cell " + L.cells0[static_cast<std::size_t>(C)] + ": " +
          std::to_string(obj_map.size()) + " 1-cells vs " +
          std::to_string(H.nats.size()) + " cones");

    // morphisms: x: g => g' maps to the modification pi * x
    std::vector<int> mor_map(hce.morphisms.size(), -1);
    for (int x = 0; x < static_cast<int>(hce.morphisms.size()); ++x) {
      DaggerModification m;
      m.xi.resize(static_cast<std::size_t>(n));
      for (int c = 0; c < n; ++c)
        m.xi[static_cast<std::size_t>(c)] =
            L.lwhisk(C, E, F.map0[static_cast<std::size_t>(c)],
                     pi.alpha[static_cast<std::size_t>(c)], x);
      int found = -1;
      for (std::size_t k = 0; k < H.mods.size(); ++k)
        if (H.mod_endpoints[k].first == obj_map[static_cast<std::size_t>(hce.src(x))] &&
            H.mod_endpoints[k].second == obj_map[static_cast<std::size_t>(hce.tgt(x))] &&
            H.mods[k].xi == m.xi)
          found = static_cast<int>(k);
      if (found < 0)
        return CheckOutcome::fail(
            "0-cell " + L.cells0[static_cast<std::size_t>(C)] +
            ": whiskered 2-cell is not a modification between cones");
      mor_map[static_cast<std::size_t>(x)] = found;
    }
    std::vector<int> msorted = mor_map;
    std::sort(msorted.begin(), msorted.end());
    if (std::adjacent_find(msorted.begin(), msorted.end()) != msorted.end())
      return CheckOutcome::fail(
          "0-cell " + L.cells0[static_cast<std::size_t>(C)] +
          ": composition with pi is not injective on 2-cells");
    if (mor_map.size() != H.mods.size())
      return CheckOutcome::fail(
          "0-cell " + L.cells0[static_cast<std::size_t>(C)] + ": " +
          std::to_string(mor_map.size()) + " 2-cells vs " +
          std::to_string(H.mods.size()) + " modifications");

    // strictness: identities, composition and dagger must carry over
    for (int g = 0; g < static_cast<int>(hce.objects.size()); ++g)
      if (mor_map[static_cast<std::size_t>(
              hce.identity[static_cast<std::size_t>(g)])] !=
          H.cat.identity[static_cast<std::size_t>(
              obj_map[static_cast<std::size_t>(g)])])
        return CheckOutcome::fail(
            "0-cell " + L.cells0[static_cast<std::size_t>(C)] +
            ": identities are not preserved");
    for (int y = 0; y < static_cast<int>(hce.morphisms.size()); ++y)
      for (int x = 0; x < static_cast<int>(hce.morphisms.size()); ++x) {
        if (!hce.composable(y, x)) continue;
        if (mor_map[static_cast<std::size_t>(hce.comp(y, x))] !=
            H.cat.comp(mor_map[static_cast<std::size_t>(y)],
                       mor_map[static_cast<std::size_t>(x)]))
          return CheckOutcome::fail(
              "0-cell " + L.cells0[static_cast<std::size_t>(C)] +
              ": composition is not preserved");
      }
    for (int x = 0; x < static_cast<int>(hce.morphisms.size()); ++x)
      if (mor_map[static_cast<std::size_t>(
              hce.dagger[static_cast<std::size_t>(x)])] !=
          H.cat.dagger[static_cast<std::size_t>(
              mor_map[static_cast<std::size_t>(x)])])
        return CheckOutcome::fail(
            "0-cell " + L.cells0[static_cast<std::size_t>(C)] +
            ": dagger is not preserved");
  }
  return CheckOutcome::pass();
}

}  // namespace daggercat
