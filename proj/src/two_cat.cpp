#include "daggercat/two_cat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

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

int FinDagger2Category::cell0_index(const std::string& id) const {
  for (std::size_t i = 0; i < cells0.size(); ++i)
    if (cells0[i] == id) return static_cast<int>(i);
  return -1;
}

int FinDagger2Category::comp1(int a, int b, int c, int g, int f) const {
  const int n_f = static_cast<int>(hom(a, b).objects.size());
  return comp1_tab[static_cast<std::size_t>(tidx(a, b, c))]
                  [static_cast<std::size_t>(g * n_f + f)];
}

int FinDagger2Category::lwhisk(int a, int b, int c, int h, int alpha) const {
  const int n_m = static_cast<int>(hom(a, b).morphisms.size());
  return lwhisk_tab[static_cast<std::size_t>(tidx(a, b, c))]
                   [static_cast<std::size_t>(h * n_m + alpha)];
}

int FinDagger2Category::rwhisk(int a, int b, int c, int beta, int f) const {
  const int n_f = static_cast<int>(hom(a, b).objects.size());
  return rwhisk_tab[static_cast<std::size_t>(tidx(a, b, c))]
                   [static_cast<std::size_t>(beta * n_f + f)];
}

int FinDagger2Category::hcomp_derived(int a, int b, int c, int beta,
                                      int alpha) const {
  const FinDaggerCategory& ab = hom(a, b);
  const FinDaggerCategory& bc = hom(b, c);
  const FinDaggerCategory& ac = hom(a, c);
  const int fprime = ab.tgt(alpha);
  const int g = bc.src(beta);
  return ac.comp(rwhisk(a, b, c, beta, fprime), lwhisk(a, b, c, g, alpha));
}

int FinDagger2Category::hcomp(int a, int b, int c, int beta, int alpha) const {
  if (hcomp_tab) {
    const int n_m = static_cast<int>(hom(a, b).morphisms.size());
    return (*hcomp_tab)[static_cast<std::size_t>(tidx(a, b, c))]
                       [static_cast<std::size_t>(beta * n_m + alpha)];
  }
  return hcomp_derived(a, b, c, beta, alpha);
}

FinDagger2Category build_2category(const TwoCategoryDescription& desc) {
  FinDagger2Category K;
  K.name = desc.name;
  K.cells0 = desc.cells0;
  std::sort(K.cells0.begin(), K.cells0.end());
  for (std::size_t i = 1; i < K.cells0.size(); ++i)
    if (K.cells0[i] == K.cells0[i - 1])
      throw ValidationError(ErrKind::DuplicateId, "0-cell " + K.cells0[i]);
  const int n = K.n0();

  K.homs.resize(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = desc.homs.find({K.cells0[static_cast<std::size_t>(a)],
                                K.cells0[static_cast<std::size_t>(b)]});
      if (it == desc.homs.end())
        throw ValidationError(ErrKind::DanglingReference,
                              "hom(" + K.cells0[static_cast<std::size_t>(a)] + ", " +
                                  K.cells0[static_cast<std::size_t>(b)] + ")");
      K.hom(a, b) = validate_category(it->second);
    }

  K.id1_tab.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    auto it = desc.id1.find(K.cells0[static_cast<std::size_t>(a)]);
    if (it == desc.id1.end())
      throw ValidationError(ErrKind::DanglingReference,
                            "id1 of " + K.cells0[static_cast<std::size_t>(a)]);
    const int o = K.hom(a, a).object_index(it->second);
    if (o < 0)
      throw ValidationError(ErrKind::DanglingReference,
                            "id1 morphism " + it->second);
    K.id1_tab[static_cast<std::size_t>(a)] = o;
  }

  auto resolve0 = [&](const std::string& id) {
    const int a = K.cell0_index(id);
    if (a < 0)
      throw ValidationError(ErrKind::DanglingReference, "0-cell " + id);
    return a;
  };

  K.comp1_tab.assign(static_cast<std::size_t>(n * n * n), {});
  K.lwhisk_tab.assign(static_cast<std::size_t>(n * n * n), {});
  K.rwhisk_tab.assign(static_cast<std::size_t>(n * n * n), {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const std::size_t t = static_cast<std::size_t>(K.tidx(a, b, c));
        const std::size_t n_f = K.hom(a, b).objects.size();
        const std::size_t n_g = K.hom(b, c).objects.size();
        const std::size_t m_f = K.hom(a, b).morphisms.size();
        const std::size_t m_g = K.hom(b, c).morphisms.size();
        K.comp1_tab[t].assign(n_f * n_g, -1);
        K.lwhisk_tab[t].assign(n_g * m_f, -1);
        K.rwhisk_tab[t].assign(m_g * n_f, -1);
      }

  for (const auto& row : desc.comp1) {
    const int a = resolve0(row[0]), b = resolve0(row[1]), c = resolve0(row[2]);
    const int g = K.hom(b, c).object_index(row[3]);
    const int f = K.hom(a, b).object_index(row[4]);
    const int gf = K.hom(a, c).object_index(row[5]);
    if (g < 0 || f < 0 || gf < 0)
      throw ValidationError(ErrKind::DanglingReference,
                            "comp1 row (" + row[3] + ", " + row[4] + ")");
    auto& cell = K.comp1_tab[static_cast<std::size_t>(K.tidx(a, b, c))]
                            [static_cast<std::size_t>(
                                g * static_cast<int>(K.hom(a, b).objects.size()) + f)];
    if (cell >= 0 && cell != gf)
      throw ValidationError(ErrKind::DuplicateId,
                            "comp1 row (" + row[3] + ", " + row[4] + ")");
    cell = gf;
  }
  auto fill_whisker = [&](const std::vector<std::array<std::string, 6>>& rows,
                          bool left) {
    for (const auto& row : rows) {
      const int a = resolve0(row[0]), b = resolve0(row[1]), c = resolve0(row[2]);
      const int x = left ? K.hom(b, c).object_index(row[3])
                         : K.hom(b, c).morphism_index(row[3]);
      const int y = left ? K.hom(a, b).morphism_index(row[4])
                         : K.hom(a, b).object_index(row[4]);
      const int r = K.hom(a, c).morphism_index(row[5]);
      if (x < 0 || y < 0 || r < 0)
        throw ValidationError(ErrKind::DanglingReference,
                              "whisker row (" + row[3] + ", " + row[4] + ")");
      const int cols = left ? static_cast<int>(K.hom(a, b).morphisms.size())
                            : static_cast<int>(K.hom(a, b).objects.size());
      auto& tab = left ? K.lwhisk_tab : K.rwhisk_tab;
      auto& cell = tab[static_cast<std::size_t>(K.tidx(a, b, c))]
                      [static_cast<std::size_t>(x * cols + y)];
      if (cell >= 0 && cell != r)
        throw ValidationError(ErrKind::DuplicateId,
                              "whisker row (" + row[3] + ", " + row[4] + ")");
      cell = r;
    }
  };
  fill_whisker(desc.lwhisker, true);
  fill_whisker(desc.rwhisker, false);

  if (desc.hcomp) {
    K.hcomp_tab.emplace();
    K.hcomp_tab->assign(static_cast<std::size_t>(n * n * n), {});
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          (*K.hcomp_tab)[static_cast<std::size_t>(K.tidx(a, b, c))].assign(
              K.hom(a, b).morphisms.size() * K.hom(b, c).morphisms.size(), -1);
    for (const auto& row : *desc.hcomp) {
      const int a = resolve0(row[0]), b = resolve0(row[1]), c = resolve0(row[2]);
      const int beta = K.hom(b, c).morphism_index(row[3]);
      const int alpha = K.hom(a, b).morphism_index(row[4]);
      const int r = K.hom(a, c).morphism_index(row[5]);
      if (beta < 0 || alpha < 0 || r < 0)
        throw ValidationError(ErrKind::DanglingReference,
                              "hcomp row (" + row[3] + ", " + row[4] + ")");
      (*K.hcomp_tab)[static_cast<std::size_t>(K.tidx(a, b, c))]
                    [static_cast<std::size_t>(
                        beta * static_cast<int>(K.hom(a, b).morphisms.size()) +
                        alpha)] = r;
    }
  }

  // Totality.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const std::size_t t = static_cast<std::size_t>(K.tidx(a, b, c));
        for (int v : K.comp1_tab[t])
          if (v < 0)
            throw ValidationError(ErrKind::MissingComposite, "comp1 table");
        for (int v : K.lwhisk_tab[t])
          if (v < 0)
            throw ValidationError(ErrKind::MissingComposite, "lwhisker table");
        for (int v : K.rwhisk_tab[t])
          if (v < 0)
            throw ValidationError(ErrKind::MissingComposite, "rwhisker table");
        if (K.hcomp_tab)
          for (int v : (*K.hcomp_tab)[t])
            if (v < 0)
              throw ValidationError(ErrKind::MissingComposite, "hcomp table");
      }
  return K;
}

void validate_2category(const FinDagger2Category& K) {
  const int n = K.n0();

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      validate_category(describe(K.hom(a, b)));

  auto oid = [&](int a, int b, int f) { return K.hom(a, b).objects[static_cast<std::size_t>(f)]; };
  auto mid = [&](int a, int b, int x) { return K.hom(a, b).mid(x); };
  auto at = [&](int a, int b, int c) {
    return K.cells0[static_cast<std::size_t>(a)] + "|" +
           K.cells0[static_cast<std::size_t>(b)] + "|" +
           K.cells0[static_cast<std::size_t>(c)];
  };

  // Unit and associativity of 1-cell composition.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int f = 0; f < static_cast<int>(K.hom(a, b).objects.size()); ++f) {
        if (K.comp1(a, b, b, K.id1(b), f) != f ||
            K.comp1(a, a, b, f, K.id1(a)) != f)
          throw ValidationError(ErrKind::Unit1Fail, oid(a, b, f));
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int h = 0; h < static_cast<int>(K.hom(c, d).objects.size()); ++h)
            for (int g = 0; g < static_cast<int>(K.hom(b, c).objects.size()); ++g)
              for (int f = 0; f < static_cast<int>(K.hom(a, b).objects.size()); ++f)
                if (K.comp1(a, b, d, K.comp1(b, c, d, h, g), f) !=
                    K.comp1(a, c, d, h, K.comp1(a, b, c, g, f)))
                  throw ValidationError(
                      ErrKind::Assoc1Fail,
                      at(a, b, c) + "|" + K.cells0[static_cast<std::size_t>(d)] +
                          ": (" + oid(c, d, h) + ", " + oid(b, c, g) + ", " +
                          oid(a, b, f) + ")");

  // Whisker endpoints and functoriality.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const FinDaggerCategory& ab = K.hom(a, b);
        const FinDaggerCategory& bc = K.hom(b, c);
        const FinDaggerCategory& ac = K.hom(a, c);
        for (int h = 0; h < static_cast<int>(bc.objects.size()); ++h) {
          for (int x = 0; x < static_cast<int>(ab.morphisms.size()); ++x) {
            const int r = K.lwhisk(a, b, c, h, x);
            if (ac.src(r) != K.comp1(a, b, c, h, ab.src(x)) ||
                ac.tgt(r) != K.comp1(a, b, c, h, ab.tgt(x)))
              throw ValidationError(ErrKind::WhiskerFail,
                                    at(a, b, c) + ": " + oid(b, c, h) + " * " +
                                        mid(a, b, x));
          }
          for (int f = 0; f < static_cast<int>(ab.objects.size()); ++f)
            if (K.lwhisk(a, b, c, h, ab.identity[static_cast<std::size_t>(f)]) !=
                ac.identity[static_cast<std::size_t>(K.comp1(a, b, c, h, f))])
              throw ValidationError(ErrKind::WhiskerFail,
                                    at(a, b, c) + ": " + oid(b, c, h) +
                                        " * id(" + oid(a, b, f) + ")");
          for (int y = 0; y < static_cast<int>(ab.morphisms.size()); ++y)
            for (int x = 0; x < static_cast<int>(ab.morphisms.size()); ++x) {
              if (!ab.composable(y, x)) continue;
              if (K.lwhisk(a, b, c, h, ab.comp(y, x)) !=
                  ac.comp(K.lwhisk(a, b, c, h, y), K.lwhisk(a, b, c, h, x)))
                throw ValidationError(ErrKind::WhiskerFail,
                                      at(a, b, c) + ": " + oid(b, c, h) + " * (" +
                                          mid(a, b, y) + " . " + mid(a, b, x) + ")");
            }
        }
        for (int x = 0; x < static_cast<int>(bc.morphisms.size()); ++x) {
          for (int f = 0; f < static_cast<int>(ab.objects.size()); ++f) {
            const int r = K.rwhisk(a, b, c, x, f);
            if (ac.src(r) != K.comp1(a, b, c, bc.src(x), f) ||
                ac.tgt(r) != K.comp1(a, b, c, bc.tgt(x), f))
              throw ValidationError(ErrKind::WhiskerFail,
                                    at(a, b, c) + ": " + mid(b, c, x) + " * " +
                                        oid(a, b, f));
          }
        }
        for (int g = 0; g < static_cast<int>(bc.objects.size()); ++g)
          for (int f = 0; f < static_cast<int>(ab.objects.size()); ++f)
            if (K.rwhisk(a, b, c, bc.identity[static_cast<std::size_t>(g)], f) !=
                ac.identity[static_cast<std::size_t>(K.comp1(a, b, c, g, f))])
              throw ValidationError(ErrKind::WhiskerFail,
                                    at(a, b, c) + ": id(" + oid(b, c, g) +
                                        ") * " + oid(a, b, f));
        for (int y = 0; y < static_cast<int>(bc.morphisms.size()); ++y)
          for (int x = 0; x < static_cast<int>(bc.morphisms.size()); ++x) {
            if (!bc.composable(y, x)) continue;
            for (int f = 0; f < static_cast<int>(ab.objects.size()); ++f)
              if (K.rwhisk(a, b, c, bc.comp(y, x), f) !=
                  ac.comp(K.rwhisk(a, b, c, y, f), K.rwhisk(a, b, c, x, f)))
                throw ValidationError(ErrKind::WhiskerFail,
                                      at(a, b, c) + ": (" + mid(b, c, y) + " . " +
                                          mid(b, c, x) + ") * " + oid(a, b, f));
          }
      }

  // Whiskering by identity 1-cells and along composites.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int x = 0; x < static_cast<int>(K.hom(a, b).morphisms.size()); ++x) {
        if (K.lwhisk(a, b, b, K.id1(b), x) != x)
          throw ValidationError(ErrKind::WhiskerFail,
                                "id1 * " + mid(a, b, x));
        if (K.rwhisk(a, a, b, x, K.id1(a)) != x)
          throw ValidationError(ErrKind::WhiskerFail,
                                mid(a, b, x) + " * id1");
      }
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const FinDaggerCategory& ab = K.hom(a, b);
          const FinDaggerCategory& bc = K.hom(b, c);
          const FinDaggerCategory& cd = K.hom(c, d);
          // (h' . h) * x == h' * (h * x)
          for (int h2 = 0; h2 < static_cast<int>(cd.objects.size()); ++h2)
            for (int h1 = 0; h1 < static_cast<int>(bc.objects.size()); ++h1)
              for (int x = 0; x < static_cast<int>(ab.morphisms.size()); ++x)
                if (K.lwhisk(a, b, d, K.comp1(b, c, d, h2, h1), x) !=
                    K.lwhisk(a, c, d, h2, K.lwhisk(a, b, c, h1, x)))
                  throw ValidationError(ErrKind::WhiskerFail,
                                        at(a, b, c) + ": nested left whisker");
          // x * (f . f') == (x * f) * f'   with f': a -> b, f: b -> c
          for (int x = 0; x < static_cast<int>(cd.morphisms.size()); ++x)
            for (int f1 = 0; f1 < static_cast<int>(bc.objects.size()); ++f1)
              for (int f2 = 0; f2 < static_cast<int>(ab.objects.size()); ++f2)
                if (K.rwhisk(a, b, d, K.rwhisk(b, c, d, x, f1), f2) !=
                    K.rwhisk(a, c, d, x, K.comp1(a, b, c, f1, f2)))
                  throw ValidationError(ErrKind::WhiskerFail,
                                        at(a, b, c) + ": nested right whisker");
          // h * (x * f) == (h * x) * f
          for (int h = 0; h < static_cast<int>(cd.objects.size()); ++h)
            for (int x = 0; x < static_cast<int>(bc.morphisms.size()); ++x)
              for (int f = 0; f < static_cast<int>(ab.objects.size()); ++f)
                if (K.lwhisk(a, c, d, h, K.rwhisk(a, b, c, x, f)) !=
                    K.rwhisk(a, b, d, K.lwhisk(b, c, d, h, x), f))
                  throw ValidationError(ErrKind::WhiskerFail,
                                        at(a, b, c) + ": mixed whisker");
        }

  // Interchange.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const FinDaggerCategory& ab = K.hom(a, b);
        const FinDaggerCategory& bc = K.hom(b, c);
        const FinDaggerCategory& ac = K.hom(a, c);
        for (int beta = 0; beta < static_cast<int>(bc.morphisms.size()); ++beta)
          for (int alpha = 0; alpha < static_cast<int>(ab.morphisms.size()); ++alpha) {
            const int lhs = ac.comp(K.rwhisk(a, b, c, beta, ab.tgt(alpha)),
                                    K.lwhisk(a, b, c, bc.src(beta), alpha));
            const int rhs = ac.comp(K.lwhisk(a, b, c, bc.tgt(beta), alpha),
                                    K.rwhisk(a, b, c, beta, ab.src(alpha)));
            if (lhs != rhs)
              throw ValidationError(ErrKind::InterchangeFail,
                                    at(a, b, c) + ": (" + mid(b, c, beta) + ", " +
                                        mid(a, b, alpha) + ")");
            if (K.hcomp(a, b, c, beta, alpha) != lhs)
              throw ValidationError(ErrKind::InterchangeFail,
                                    at(a, b, c) + ": explicit (" + mid(b, c, beta) +
                                        " * " + mid(a, b, alpha) + ")");
          }
        // quadruple form on the effective horizontal composition
        for (int b2 = 0; b2 < static_cast<int>(bc.morphisms.size()); ++b2)
          for (int b1 = 0; b1 < static_cast<int>(bc.morphisms.size()); ++b1) {
            if (!bc.composable(b2, b1)) continue;
            for (int a2 = 0; a2 < static_cast<int>(ab.morphisms.size()); ++a2)
              for (int a1 = 0; a1 < static_cast<int>(ab.morphisms.size()); ++a1) {
                if (!ab.composable(a2, a1)) continue;
                if (K.hcomp(a, b, c, bc.comp(b2, b1), ab.comp(a2, a1)) !=
                    ac.comp(K.hcomp(a, b, c, b2, a2), K.hcomp(a, b, c, b1, a1)))
                  throw ValidationError(
                      ErrKind::InterchangeFail,
                      at(a, b, c) + ": ((" + mid(b, c, b2) + " . " + mid(b, c, b1) +
                          ") * (" + mid(a, b, a2) + " . " + mid(a, b, a1) + "))");
              }
          }
      }

  // Dagger against horizontal composition.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const FinDaggerCategory& ab = K.hom(a, b);
        const FinDaggerCategory& bc = K.hom(b, c);
        const FinDaggerCategory& ac = K.hom(a, c);
        for (int beta = 0; beta < static_cast<int>(bc.morphisms.size()); ++beta)
          for (int alpha = 0; alpha < static_cast<int>(ab.morphisms.size()); ++alpha)
            if (ac.dagger[static_cast<std::size_t>(K.hcomp(a, b, c, beta, alpha))] !=
                K.hcomp(a, b, c, bc.dagger[static_cast<std::size_t>(beta)],
                        ab.dagger[static_cast<std::size_t>(alpha)]))
              throw ValidationError(ErrKind::DaggerHorizontalFail,
                                    at(a, b, c) + ": (" + mid(b, c, beta) + ", " +
                                        mid(a, b, alpha) + ")");
      }
}

FinDagger2Category locally_discrete(const FinDaggerCategory& C) {
  FinDagger2Category K;
  K.name = "disc2(" + C.name + ")";
  K.cells0 = C.objects;
  const int n = K.n0();
  K.homs.resize(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      CategoryDescription d;
      d.name = "hom(" + C.objects[static_cast<std::size_t>(a)] + ", " +
               C.objects[static_cast<std::size_t>(b)] + ")";
      for (int f : C.hom(a, b)) {
        const std::string id = C.mid(f);
        d.objects.push_back(id);
        d.morphisms.push_back({"1@" + id, id, id});
        d.identities[id] = "1@" + id;
        d.composition.push_back({"1@" + id, "1@" + id, "1@" + id});
        d.dagger["1@" + id] = "1@" + id;
      }
      K.hom(a, b) = validate_category(d);
    }
  K.id1_tab.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    K.id1_tab[static_cast<std::size_t>(a)] = K.hom(a, a).object_index(
        C.mid(C.identity[static_cast<std::size_t>(a)]));

  K.comp1_tab.assign(static_cast<std::size_t>(n * n * n), {});
  K.lwhisk_tab.assign(static_cast<std::size_t>(n * n * n), {});
  K.rwhisk_tab.assign(static_cast<std::size_t>(n * n * n), {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const std::size_t t = static_cast<std::size_t>(K.tidx(a, b, c));
        const FinDaggerCategory& ab = K.hom(a, b);
        const FinDaggerCategory& bc = K.hom(b, c);
        const FinDaggerCategory& ac = K.hom(a, c);
        K.comp1_tab[t].assign(ab.objects.size() * bc.objects.size(), -1);
        K.lwhisk_tab[t].assign(ab.morphisms.size() * bc.objects.size(), -1);
        K.rwhisk_tab[t].assign(ab.objects.size() * bc.morphisms.size(), -1);
        for (std::size_t g = 0; g < bc.objects.size(); ++g)
          for (std::size_t f = 0; f < ab.objects.size(); ++f) {
            const int gm = C.morphism_index(bc.objects[g]);
            const int fm = C.morphism_index(ab.objects[f]);
            const int gf = ac.object_index(C.mid(C.comp(gm, fm)));
            K.comp1_tab[t][g * ab.objects.size() + f] = gf;
            K.lwhisk_tab[t][g * ab.morphisms.size() + f] =
                ac.identity[static_cast<std::size_t>(gf)];
            K.rwhisk_tab[t][g * ab.objects.size() + f] =
                ac.identity[static_cast<std::size_t>(gf)];
          }
      }
  return K;
}

FinDagger2Category suspension(const FinDaggerCategory& M,
                              const std::string& name) {
  if (M.objects.size() != 1)
    throw ValidationError(ErrKind::WrongEndpoints,
                          "suspension needs a one-object category");
  FinDagger2Category K;
  K.name = name;
  K.cells0 = {"*"};
  CategoryDescription d;
  d.name = "hom(*, *)";
  d.objects = {"t0"};
  for (const auto& m : M.morphisms) d.morphisms.push_back({m.id, "t0", "t0"});
  d.identities["t0"] = M.mid(M.identity[0]);
  for (int g = 0; g < static_cast<int>(M.morphisms.size()); ++g)
    for (int f = 0; f < static_cast<int>(M.morphisms.size()); ++f)
      d.composition.push_back({M.mid(g), M.mid(f), M.mid(M.comp(g, f))});
  for (int m = 0; m < static_cast<int>(M.morphisms.size()); ++m)
    d.dagger[M.mid(m)] = M.mid(M.dagger[static_cast<std::size_t>(m)]);
  K.homs = {validate_category(d)};
  K.id1_tab = {0};
  const std::size_t nm = K.homs[0].morphisms.size();
  K.comp1_tab = {{0}};
  K.lwhisk_tab.assign(1, std::vector<int>(nm));
  K.rwhisk_tab.assign(1, std::vector<int>(nm));
  for (std::size_t x = 0; x < nm; ++x) {
    K.lwhisk_tab[0][x] = static_cast<int>(x);
    K.rwhisk_tab[0][x] = static_cast<int>(x);
  }
  return K;
}

FinDagger2Category two_cat_of(const std::vector<FinDaggerCategory>& cats,
                              std::uint64_t cap) {
  FinDagger2Category K;
  K.name = "2cat";
  const int n = static_cast<int>(cats.size());
  for (const auto& c : cats) K.cells0.push_back(c.name);
  std::vector<HomCategoryResult> res(static_cast<std::size_t>(n * n));
  K.homs.resize(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      res[static_cast<std::size_t>(a * n + b)] =
          hom_category(cats[static_cast<std::size_t>(a)],
                       cats[static_cast<std::size_t>(b)], cap);
      K.hom(a, b) = res[static_cast<std::size_t>(a * n + b)].cat;
    }
  K.id1_tab.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    const int i = res[static_cast<std::size_t>(a * n + a)].functor_index(
        identity_functor(cats[static_cast<std::size_t>(a)]));
    if (i < 0)
      throw ValidationError(ErrKind::InternalClosureFailure, "identity functor");
    K.id1_tab[static_cast<std::size_t>(a)] = i;
  }
  K.comp1_tab.assign(static_cast<std::size_t>(n * n * n), {});
  K.lwhisk_tab.assign(static_cast<std::size_t>(n * n * n), {});
  K.rwhisk_tab.assign(static_cast<std::size_t>(n * n * n), {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const auto& ab = res[static_cast<std::size_t>(a * n + b)];
        const auto& bc = res[static_cast<std::size_t>(b * n + c)];
        const auto& ac = res[static_cast<std::size_t>(a * n + c)];
        const std::size_t t = static_cast<std::size_t>(K.tidx(a, b, c));
        K.comp1_tab[t].assign(ab.functors.size() * bc.functors.size(), -1);
        K.lwhisk_tab[t].assign(ab.nats.size() * bc.functors.size(), -1);
        K.rwhisk_tab[t].assign(ab.functors.size() * bc.nats.size(), -1);
        for (std::size_t g = 0; g < bc.functors.size(); ++g) {
          for (std::size_t f = 0; f < ab.functors.size(); ++f) {
            const int i = ac.functor_index(
                functor_compose(bc.functors[g], ab.functors[f]));
            if (i < 0)
              throw ValidationError(ErrKind::InternalClosureFailure,
                                    "composite functor");
            K.comp1_tab[t][g * ab.functors.size() + f] = i;
          }
          for (std::size_t x = 0; x < ab.nats.size(); ++x) {
            const int i =
                ac.nat_index(whisker_left(bc.functors[g], ab.nats[x]));
            if (i < 0)
              throw ValidationError(ErrKind::InternalClosureFailure,
                                    "left whisker");
            K.lwhisk_tab[t][g * ab.nats.size() + x] = i;
          }
        }
        for (std::size_t x = 0; x < bc.nats.size(); ++x)
          for (std::size_t f = 0; f < ab.functors.size(); ++f) {
            const int i =
                ac.nat_index(whisker_right(bc.nats[x], ab.functors[f]));
            if (i < 0)
              throw ValidationError(ErrKind::InternalClosureFailure,
                                    "right whisker");
            K.rwhisk_tab[t][x * ab.functors.size() + f] = i;
          }
      }
  return K;
}

FinDagger2Category op2(const FinDagger2Category& K) {
  FinDagger2Category O;
  O.name = K.name + "_op2";
  O.cells0 = K.cells0;
  const int n = K.n0();
  O.homs.resize(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) O.hom(a, b) = K.hom(b, a);
  O.id1_tab = K.id1_tab;
  O.comp1_tab.assign(static_cast<std::size_t>(n * n * n), {});
  O.lwhisk_tab.assign(static_cast<std::size_t>(n * n * n), {});
  O.rwhisk_tab.assign(static_cast<std::size_t>(n * n * n), {});
  if (K.hcomp_tab) {
    O.hcomp_tab.emplace();
    O.hcomp_tab->assign(static_cast<std::size_t>(n * n * n), {});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const std::size_t t = static_cast<std::size_t>(O.tidx(a, b, c));
        const FinDaggerCategory& ab = O.hom(a, b);  // = K.hom(b, a)
        const FinDaggerCategory& bc = O.hom(b, c);  // = K.hom(c, b)
        O.comp1_tab[t].assign(ab.objects.size() * bc.objects.size(), -1);
        O.lwhisk_tab[t].assign(ab.morphisms.size() * bc.objects.size(), -1);
        O.rwhisk_tab[t].assign(ab.objects.size() * bc.morphisms.size(), -1);
        for (std::size_t g = 0; g < bc.objects.size(); ++g)
          for (std::size_t f = 0; f < ab.objects.size(); ++f)
            O.comp1_tab[t][g * ab.objects.size() + f] =
                K.comp1(c, b, a, static_cast<int>(f), static_cast<int>(g));
        for (std::size_t g = 0; g < bc.objects.size(); ++g)
          for (std::size_t x = 0; x < ab.morphisms.size(); ++x)
            O.lwhisk_tab[t][g * ab.morphisms.size() + x] =
                K.rwhisk(c, b, a, static_cast<int>(x), static_cast<int>(g));
        for (std::size_t x = 0; x < bc.morphisms.size(); ++x)
          for (std::size_t f = 0; f < ab.objects.size(); ++f)
            O.rwhisk_tab[t][x * ab.objects.size() + f] =
                K.lwhisk(c, b, a, static_cast<int>(f), static_cast<int>(x));
        if (K.hcomp_tab) {
          (*O.hcomp_tab)[t].assign(ab.morphisms.size() * bc.morphisms.size(), -1);
          for (std::size_t y = 0; y < bc.morphisms.size(); ++y)
            for (std::size_t x = 0; x < ab.morphisms.size(); ++x)
              (*O.hcomp_tab)[t][y * ab.morphisms.size() + x] =
                  K.hcomp(c, b, a, static_cast<int>(x), static_cast<int>(y));
        }
      }
  return O;
}

// Monads -----------------------------------------------------------------

CheckOutcome check_monad2(const FinDagger2Category& K, const Monad2& m) {
  const FinDaggerCategory& H = K.hom(m.cell0, m.cell0);
  const int a = m.cell0;
  if (m.t < 0 || m.t >= static_cast<int>(H.objects.size()))
    return CheckOutcome::fail("unknown 1-cell");
  const int tt = K.comp1(a, a, a, m.t, m.t);
  if (H.src(m.mu) != tt || H.tgt(m.mu) != m.t)
    return CheckOutcome::fail("mu endpoints");
  if (H.src(m.eta) != K.id1(a) || H.tgt(m.eta) != m.t)
    return CheckOutcome::fail("eta endpoints");
  const int t_mu = K.lwhisk(a, a, a, m.t, m.mu);
  const int mu_t = K.rwhisk(a, a, a, m.mu, m.t);
  if (H.comp(m.mu, t_mu) != H.comp(m.mu, mu_t))
    return CheckOutcome::fail("associativity");
  const int t_eta = K.lwhisk(a, a, a, m.t, m.eta);
  const int eta_t = K.rwhisk(a, a, a, m.eta, m.t);
  if (H.comp(m.mu, t_eta) != H.identity[static_cast<std::size_t>(m.t)])
    return CheckOutcome::fail("left unit");
  if (H.comp(m.mu, eta_t) != H.identity[static_cast<std::size_t>(m.t)])
    return CheckOutcome::fail("right unit");
  return CheckOutcome::pass();
}

CheckOutcome check_frobenius2(const FinDagger2Category& K, const Monad2& m) {
  const FinDaggerCategory& H = K.hom(m.cell0, m.cell0);
  const int a = m.cell0;
  const int mu_dag = H.dagger[static_cast<std::size_t>(m.mu)];
  const int lhs = H.comp(K.rwhisk(a, a, a, m.mu, m.t),
                         K.lwhisk(a, a, a, m.t, mu_dag));
  const int rhs = H.comp(K.lwhisk(a, a, a, m.t, m.mu),
                         K.rwhisk(a, a, a, mu_dag, m.t));
  if (lhs != rhs)
    return CheckOutcome::fail("Frobenius law at " + H.mid(m.mu));
  return CheckOutcome::pass();
}

Monad2 identity_monad2(const FinDagger2Category& K, int cell0) {
  Monad2 m;
  m.cell0 = cell0;
  m.t = K.id1(cell0);
  m.mu = K.hom(cell0, cell0).identity[static_cast<std::size_t>(m.t)];
  m.eta = m.mu;
  return m;
}

std::vector<Monad2> enumerate_monads2(const FinDagger2Category& K, int cell0,
                                      bool frobenius_only) {
  std::vector<Monad2> out;
  const FinDaggerCategory& H = K.hom(cell0, cell0);
  for (int t = 0; t < static_cast<int>(H.objects.size()); ++t) {
    const int tt = K.comp1(cell0, cell0, cell0, t, t);
    for (int mu = 0; mu < static_cast<int>(H.morphisms.size()); ++mu) {
      if (H.src(mu) != tt || H.tgt(mu) != t) continue;
      for (int eta = 0; eta < static_cast<int>(H.morphisms.size()); ++eta) {
        if (H.src(eta) != K.id1(cell0) || H.tgt(eta) != t) continue;
        Monad2 m{cell0, t, mu, eta};
        if (!check_monad2(K, m)) continue;
        if (frobenius_only && !check_frobenius2(K, m)) continue;
        out.push_back(m);
      }
    }
  }
  return out;
}

CheckOutcome check_monad_morphism2(const FinDagger2Category& K,
                                   const Monad2& s, const Monad2& t,
                                   const MonadMorphism2& m) {
  const int A = s.cell0;
  const int D = t.cell0;
  const FinDaggerCategory& H = K.hom(A, D);
  if (m.f < 0 || m.f >= static_cast<int>(H.objects.size()))
    return CheckOutcome::fail("unknown 1-cell");
  const int tf = K.comp1(A, D, D, t.t, m.f);
  const int fs = K.comp1(A, A, D, m.f, s.t);
  if (H.src(m.sigma) != tf || H.tgt(m.sigma) != fs)
    return CheckOutcome::fail("sigma endpoints");
  const int f_mu_s = K.lwhisk(A, A, D, m.f, s.mu);
  const int sigma_s = K.rwhisk(A, A, D, m.sigma, s.t);
  const int t_sigma = K.lwhisk(A, D, D, t.t, m.sigma);
  const int mu_t_f = K.rwhisk(A, D, D, t.mu, m.f);
  if (H.comp(f_mu_s, H.comp(sigma_s, t_sigma)) != H.comp(m.sigma, mu_t_f))
    return CheckOutcome::fail("multiplication square");
  const int sigma_dag = H.dagger[static_cast<std::size_t>(m.sigma)];
  const int t_sigma_dag = K.lwhisk(A, D, D, t.t, sigma_dag);
  if (H.comp(sigma_dag, H.comp(f_mu_s, sigma_s)) !=
      H.comp(mu_t_f, t_sigma_dag))
    return CheckOutcome::fail("dagger multiplication square");
  const int eta_t_f = K.rwhisk(A, D, D, t.eta, m.f);
  const int f_eta_s = K.lwhisk(A, A, D, m.f, s.eta);
  if (H.comp(m.sigma, eta_t_f) != f_eta_s)
    return CheckOutcome::fail("unit triangle");
  return CheckOutcome::pass();
}

CheckOutcome check_monad_cell2(const FinDagger2Category& K, const Monad2& s,
                               const Monad2& t, const MonadMorphism2& from,
                               const MonadMorphism2& to, int alpha) {
  const int A = s.cell0;
  const int D = t.cell0;
  const FinDaggerCategory& H = K.hom(A, D);
  if (H.src(alpha) != from.f || H.tgt(alpha) != to.f)
    return CheckOutcome::fail("alpha endpoints");
  const int t_alpha = K.lwhisk(A, D, D, t.t, alpha);
  const int alpha_s = K.rwhisk(A, A, D, alpha, s.t);
  if (H.comp(to.sigma, t_alpha) != H.comp(alpha_s, from.sigma))
    return CheckOutcome::fail("square");
  const int alpha_dag = H.dagger[static_cast<std::size_t>(alpha)];
  const int t_alpha_dag = K.lwhisk(A, D, D, t.t, alpha_dag);
  const int alpha_dag_s = K.rwhisk(A, A, D, alpha_dag, s.t);
  if (H.comp(from.sigma, t_alpha_dag) != H.comp(alpha_dag_s, to.sigma))
    return CheckOutcome::fail("dagger square");
  return CheckOutcome::pass();
}

// Generic assembly of a completion-style 2-category -----------------------

namespace {

struct CellPair {
  int f = -1;
  int sigma = -1;
  bool operator==(const CellPair&) const = default;
};

struct CompletionHooks {
  std::function<std::vector<CellPair>(int, int)> cells1;
  std::function<std::vector<int>(int, int, const CellPair&, const CellPair&)> cells2;
  std::function<CellPair(int)> ident1;
  std::function<int(int, int, const CellPair&)> ident2;
  std::function<CellPair(int, int, int, const CellPair&, const CellPair&)> comp1;
  // beta: mid -> to, alpha: from -> mid
  std::function<int(int, int, const CellPair&, const CellPair&, const CellPair&,
                    int, int)>
      vcomp;
  std::function<int(int, int, const CellPair&, const CellPair&, int)> dag2;
  std::function<int(int, int, int, const CellPair&, const CellPair&,
                    const CellPair&, int)>
      lw;  // (i,j,k, h, from, to, alpha)
  std::function<int(int, int, int, const CellPair&, const CellPair&,
                    const CellPair&, int)>
      rw;  // (i,j,k, e, from, to, beta)
};

struct AssembledCompletion {
  FinDagger2Category cat;
  std::vector<std::vector<CellPair>> cells1;
  std::vector<std::vector<std::array<int, 3>>> triples;  // (from, to, alpha)
};

AssembledCompletion assemble_completion(const std::string& name, int n_monads,
                                        const CompletionHooks& H) {
  AssembledCompletion R;
  R.cat.name = name;
  for (int i = 0; i < n_monads; ++i)
    R.cat.cells0.push_back("M" + pad_id(i, static_cast<std::size_t>(n_monads)));
  const int n = n_monads;
  R.cells1.resize(static_cast<std::size_t>(n * n));
  R.triples.resize(static_cast<std::size_t>(n * n));
  R.cat.homs.resize(static_cast<std::size_t>(n * n));

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::size_t ij = static_cast<std::size_t>(i * n + j);
      R.cells1[ij] = H.cells1(i, j);
      auto& tri = R.triples[ij];
      for (std::size_t from = 0; from < R.cells1[ij].size(); ++from)
        for (std::size_t to = 0; to < R.cells1[ij].size(); ++to)
          for (int alpha : H.cells2(i, j, R.cells1[ij][from], R.cells1[ij][to]))
            tri.push_back({static_cast<int>(from), static_cast<int>(to), alpha});

      auto tri_index = [&](int from, int to, int alpha) {
        for (std::size_t k = 0; k < tri.size(); ++k)
          if (tri[k][0] == from && tri[k][1] == to && tri[k][2] == alpha)
            return static_cast<int>(k);
        throw ValidationError(ErrKind::InternalClosureFailure,
                              name + " 2-cell escapes enumeration");
      };

      CategoryDescription d;
      d.name = name + "(" + R.cat.cells0[static_cast<std::size_t>(i)] + ", " +
               R.cat.cells0[static_cast<std::size_t>(j)] + ")";
      for (std::size_t k = 0; k < R.cells1[ij].size(); ++k)
        d.objects.push_back("c" + pad_id(static_cast<int>(k), R.cells1[ij].size()));
      for (std::size_t k = 0; k < tri.size(); ++k)
        d.morphisms.push_back({"x" + pad_id(static_cast<int>(k), tri.size()),
                               d.objects[static_cast<std::size_t>(tri[k][0])],
                               d.objects[static_cast<std::size_t>(tri[k][1])]});
      for (std::size_t k = 0; k < R.cells1[ij].size(); ++k) {
        const int alpha = H.ident2(i, j, R.cells1[ij][k]);
        d.identities[d.objects[k]] =
            d.morphisms[static_cast<std::size_t>(
                            tri_index(static_cast<int>(k), static_cast<int>(k), alpha))]
                .id;
      }
      for (std::size_t k2 = 0; k2 < tri.size(); ++k2)
        for (std::size_t k1 = 0; k1 < tri.size(); ++k1) {
          if (tri[k1][1] != tri[k2][0]) continue;
          const int v = H.vcomp(i, j, R.cells1[ij][static_cast<std::size_t>(tri[k1][0])],
                                R.cells1[ij][static_cast<std::size_t>(tri[k1][1])],
                                R.cells1[ij][static_cast<std::size_t>(tri[k2][1])],
                                tri[k2][2], tri[k1][2]);
          d.composition.push_back(
              {d.morphisms[k2].id, d.morphisms[k1].id,
               d.morphisms[static_cast<std::size_t>(
                               tri_index(tri[k1][0], tri[k2][1], v))]
                   .id});
        }
      for (std::size_t k = 0; k < tri.size(); ++k) {
        const int v = H.dag2(i, j, R.cells1[ij][static_cast<std::size_t>(tri[k][0])],
                             R.cells1[ij][static_cast<std::size_t>(tri[k][1])],
                             tri[k][2]);
        d.dagger[d.morphisms[k].id] =
            d.morphisms[static_cast<std::size_t>(tri_index(tri[k][1], tri[k][0], v))]
                .id;
      }
      R.cat.hom(i, j) = validate_category(d);
    }

  auto cell1_index = [&](int i, int j, const CellPair& c) {
    const auto& v = R.cells1[static_cast<std::size_t>(i * n + j)];
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] == c) return static_cast<int>(k);
    throw ValidationError(ErrKind::InternalClosureFailure,
                          name + " 1-cell escapes enumeration");
  };
  auto tri_index2 = [&](int i, int j, int from, int to, int alpha) {
    const auto& tri = R.triples[static_cast<std::size_t>(i * n + j)];
    for (std::size_t k = 0; k < tri.size(); ++k)
      if (tri[k][0] == from && tri[k][1] == to && tri[k][2] == alpha)
        return static_cast<int>(k);
    throw ValidationError(ErrKind::InternalClosureFailure,
                          name + " 2-cell escapes enumeration");
  };

  R.cat.id1_tab.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    R.cat.id1_tab[static_cast<std::size_t>(i)] = cell1_index(i, i, H.ident1(i));

  R.cat.comp1_tab.assign(static_cast<std::size_t>(n * n * n), {});
  R.cat.lwhisk_tab.assign(static_cast<std::size_t>(n * n * n), {});
  R.cat.rwhisk_tab.assign(static_cast<std::size_t>(n * n * n), {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const std::size_t t = static_cast<std::size_t>(R.cat.tidx(i, j, k));
        const auto& ij = R.cells1[static_cast<std::size_t>(i * n + j)];
        const auto& jk = R.cells1[static_cast<std::size_t>(j * n + k)];
        const auto& tij = R.triples[static_cast<std::size_t>(i * n + j)];
        const auto& tjk = R.triples[static_cast<std::size_t>(j * n + k)];
        R.cat.comp1_tab[t].assign(ij.size() * jk.size(), -1);
        R.cat.lwhisk_tab[t].assign(tij.size() * jk.size(), -1);
        R.cat.rwhisk_tab[t].assign(ij.size() * tjk.size(), -1);
        for (std::size_t g = 0; g < jk.size(); ++g) {
          for (std::size_t f = 0; f < ij.size(); ++f)
            R.cat.comp1_tab[t][g * ij.size() + f] =
                cell1_index(i, k, H.comp1(i, j, k, jk[g], ij[f]));
          for (std::size_t x = 0; x < tij.size(); ++x) {
            const auto& from = ij[static_cast<std::size_t>(tij[x][0])];
            const auto& to = ij[static_cast<std::size_t>(tij[x][1])];
            const int v = H.lw(i, j, k, jk[g], from, to, tij[x][2]);
            const int rf = cell1_index(i, k, H.comp1(i, j, k, jk[g], from));
            const int rt = cell1_index(i, k, H.comp1(i, j, k, jk[g], to));
            R.cat.lwhisk_tab[t][g * tij.size() + x] = tri_index2(i, k, rf, rt, v);
          }
        }
        for (std::size_t x = 0; x < tjk.size(); ++x)
          for (std::size_t f = 0; f < ij.size(); ++f) {
            const auto& from = jk[static_cast<std::size_t>(tjk[x][0])];
            const auto& to = jk[static_cast<std::size_t>(tjk[x][1])];
            const int v = H.rw(i, j, k, ij[f], from, to, tjk[x][2]);
            const int rf = cell1_index(i, k, H.comp1(i, j, k, from, ij[f]));
            const int rt = cell1_index(i, k, H.comp1(i, j, k, to, ij[f]));
            R.cat.rwhisk_tab[t][x * ij.size() + f] = tri_index2(i, k, rf, rt, v);
          }
      }
  return R;
}

std::vector<Monad2> all_frobenius_monads(const FinDagger2Category& K) {
  std::vector<Monad2> out;
  for (int a = 0; a < K.n0(); ++a)
    for (const auto& m : enumerate_monads2(K, a, true)) out.push_back(m);
  return out;
}

}  // namespace

int Dfmnd2Result::monad_index(const Monad2& m) const {
  for (std::size_t i = 0; i < monads.size(); ++i)
    if (monads[i] == m) return static_cast<int>(i);
  return -1;
}

int CompletionResult::monad_index(const Monad2& m) const {
  for (std::size_t i = 0; i < monads.size(); ++i)
    if (monads[i] == m) return static_cast<int>(i);
  return -1;
}

Dfmnd2Result build_dfmnd(const FinDagger2Category& K) {
  Dfmnd2Result res;
  res.monads = all_frobenius_monads(K);
  const int n = static_cast<int>(res.monads.size());

  CompletionHooks H;
  H.cells1 = [&](int i, int j) {
    const Monad2& s = res.monads[static_cast<std::size_t>(i)];
    const Monad2& t = res.monads[static_cast<std::size_t>(j)];
    const FinDaggerCategory& hom = K.hom(s.cell0, t.cell0);
    std::vector<CellPair> out;
    for (int f = 0; f < static_cast<int>(hom.objects.size()); ++f)
      for (int sig = 0; sig < static_cast<int>(hom.morphisms.size()); ++sig)
        if (check_monad_morphism2(K, s, t, {f, sig})) out.push_back({f, sig});
    return out;
  };
  H.cells2 = [&](int i, int j, const CellPair& from, const CellPair& to) {
    const Monad2& s = res.monads[static_cast<std::size_t>(i)];
    const Monad2& t = res.monads[static_cast<std::size_t>(j)];
    const FinDaggerCategory& hom = K.hom(s.cell0, t.cell0);
    std::vector<int> out;
    for (int a = 0; a < static_cast<int>(hom.morphisms.size()); ++a)
      if (hom.src(a) == from.f && hom.tgt(a) == to.f &&
          check_monad_cell2(K, s, t, {from.f, from.sigma}, {to.f, to.sigma}, a))
        out.push_back(a);
    return out;
  };
  H.ident1 = [&](int i) {
    const Monad2& s = res.monads[static_cast<std::size_t>(i)];
    return CellPair{K.id1(s.cell0),
                    K.hom(s.cell0, s.cell0).identity[static_cast<std::size_t>(s.t)]};
  };
  H.ident2 = [&](int i, int j, const CellPair& c) {
    const Monad2& s = res.monads[static_cast<std::size_t>(i)];
    const Monad2& t = res.monads[static_cast<std::size_t>(j)];
    return K.hom(s.cell0, t.cell0).identity[static_cast<std::size_t>(c.f)];
  };
  H.comp1 = [&](int i, int j, int k, const CellPair& g, const CellPair& f) {
    const int A = res.monads[static_cast<std::size_t>(i)].cell0;
    const int B = res.monads[static_cast<std::size_t>(j)].cell0;
    const int C = res.monads[static_cast<std::size_t>(k)].cell0;
    const FinDaggerCategory& hac = K.hom(A, C);
    const int f1 = K.comp1(A, B, C, g.f, f.f);
    const int g_sigma = K.lwhisk(A, B, C, g.f, f.sigma);
    const int gamma_f = K.rwhisk(A, B, C, g.sigma, f.f);
    return CellPair{f1, hac.comp(g_sigma, gamma_f)};
  };
  H.vcomp = [&](int i, int j, const CellPair&, const CellPair&, const CellPair&,
                int beta, int alpha) {
    const int A = res.monads[static_cast<std::size_t>(i)].cell0;
    const int D = res.monads[static_cast<std::size_t>(j)].cell0;
    return K.hom(A, D).comp(beta, alpha);
  };
  H.dag2 = [&](int i, int j, const CellPair&, const CellPair&, int alpha) {
    const int A = res.monads[static_cast<std::size_t>(i)].cell0;
    const int D = res.monads[static_cast<std::size_t>(j)].cell0;
    return K.hom(A, D).dagger[static_cast<std::size_t>(alpha)];
  };
  H.lw = [&](int i, int j, int k, const CellPair& h, const CellPair&,
             const CellPair&, int alpha) {
    const int A = res.monads[static_cast<std::size_t>(i)].cell0;
    const int B = res.monads[static_cast<std::size_t>(j)].cell0;
    const int C = res.monads[static_cast<std::size_t>(k)].cell0;
    return K.lwhisk(A, B, C, h.f, alpha);
  };
  H.rw = [&](int i, int j, int k, const CellPair& e, const CellPair&,
             const CellPair&, int beta) {
    const int A = res.monads[static_cast<std::size_t>(i)].cell0;
    const int B = res.monads[static_cast<std::size_t>(j)].cell0;
    const int C = res.monads[static_cast<std::size_t>(k)].cell0;
    return K.rwhisk(A, B, C, beta, e.f);
  };

  AssembledCompletion R = assemble_completion("DFMnd(" + K.name + ")", n, H);
  res.cat = std::move(R.cat);
  res.cells1.resize(R.cells1.size());
  res.cells2.resize(R.triples.size());
  for (std::size_t ij = 0; ij < R.cells1.size(); ++ij) {
    for (const auto& c : R.cells1[ij])
      res.cells1[ij].push_back({c.f, c.sigma});
    res.cells2[ij].resize(R.triples[ij].size());
    for (std::size_t k = 0; k < R.triples[ij].size(); ++k)
      res.cells2[ij][k] = {R.triples[ij][k][0], R.triples[ij][k][1],
                           R.triples[ij][k][2]};
  }
  return res;
}

Monad2 dfmnd_inclusion0(const FinDagger2Category& K, int cell0) {
  return identity_monad2(K, cell0);
}

CompletionResult build_fk_completion(const FinDagger2Category& K) {
  CompletionResult res;
  res.monads = all_frobenius_monads(K);
  const int n = static_cast<int>(res.monads.size());

  // 1-cell (D,t) -> (A,s): f: D -> A with sigma: f.t => s.f.
  auto mon = [&](int i) -> const Monad2& {
    return res.monads[static_cast<std::size_t>(i)];
  };

  auto valid_cell1 = [&](int i, int j, int f, int sigma) {
    const Monad2& t = mon(i);
    const Monad2& s = mon(j);
    const int D = t.cell0, A = s.cell0;
    const FinDaggerCategory& hom = K.hom(D, A);
    if (hom.src(sigma) != K.comp1(D, D, A, f, t.t) ||
        hom.tgt(sigma) != K.comp1(D, A, A, s.t, f))
      return false;
    const int mu_s_f = K.rwhisk(D, A, A, s.mu, f);
    const int s_sigma = K.lwhisk(D, A, A, s.t, sigma);
    const int sigma_t = K.rwhisk(D, D, A, sigma, t.t);
    const int f_mu_t = K.lwhisk(D, D, A, f, t.mu);
    if (hom.comp(mu_s_f, hom.comp(s_sigma, sigma_t)) != hom.comp(sigma, f_mu_t))
      return false;
    const int sig_dag = hom.dagger[static_cast<std::size_t>(sigma)];
    if (hom.comp(sig_dag, hom.comp(mu_s_f, s_sigma)) !=
        hom.comp(f_mu_t, K.rwhisk(D, D, A, sig_dag, t.t)))
      return false;
    const int f_eta_t = K.lwhisk(D, D, A, f, t.eta);
    if (hom.comp(sigma, f_eta_t) != K.rwhisk(D, A, A, s.eta, f)) return false;
    return true;
  };

  CompletionHooks H;
  H.cells1 = [&, valid_cell1](int i, int j) {
    const Monad2& t = mon(i);
    const Monad2& s = mon(j);
    const FinDaggerCategory& hom = K.hom(t.cell0, s.cell0);
    std::vector<CellPair> out;
    for (int f = 0; f < static_cast<int>(hom.objects.size()); ++f)
      for (int sig = 0; sig < static_cast<int>(hom.morphisms.size()); ++sig)
        if (valid_cell1(i, j, f, sig)) out.push_back({f, sig});
    return out;
  };
  H.cells2 = [&](int i, int j, const CellPair& from, const CellPair& to) {
    const Monad2& t = mon(i);
    const Monad2& s = mon(j);
    const int D = t.cell0, A = s.cell0;
    const FinDaggerCategory& hom = K.hom(D, A);
    const int sg = K.comp1(D, A, A, s.t, to.f);
    std::vector<int> out;
    for (int a = 0; a < static_cast<int>(hom.morphisms.size()); ++a) {
      if (hom.src(a) != from.f || hom.tgt(a) != sg) continue;
      const int mu_s_g = K.rwhisk(D, A, A, s.mu, to.f);
      const int s_gamma = K.lwhisk(D, A, A, s.t, to.sigma);
      const int alpha_t = K.rwhisk(D, D, A, a, t.t);
      const int s_alpha = K.lwhisk(D, A, A, s.t, a);
      if (hom.comp(mu_s_g, hom.comp(s_gamma, alpha_t)) ==
          hom.comp(mu_s_g, hom.comp(s_alpha, from.sigma)))
        out.push_back(a);
    }
    return out;
  };
  H.ident1 = [&](int i) {
    const Monad2& t = mon(i);
    return CellPair{K.id1(t.cell0),
                    K.hom(t.cell0, t.cell0).identity[static_cast<std::size_t>(t.t)]};
  };
  H.ident2 = [&](int i, int j, const CellPair& c) {
    const Monad2& t = mon(i);
    const Monad2& s = mon(j);
    return K.rwhisk(t.cell0, s.cell0, s.cell0, s.eta, c.f);
  };
  H.comp1 = [&](int i, int j, int k, const CellPair& g, const CellPair& f) {
    const int D = mon(i).cell0;
    const int A = mon(j).cell0;
    const int B = mon(k).cell0;
    const FinDaggerCategory& hom = K.hom(D, B);
    const int gf = K.comp1(D, A, B, g.f, f.f);
    const int gamma_f = K.rwhisk(D, A, B, g.sigma, f.f);
    const int g_sigma = K.lwhisk(D, A, B, g.f, f.sigma);
    return CellPair{gf, hom.comp(gamma_f, g_sigma)};
  };
  H.vcomp = [&](int i, int j, const CellPair&, const CellPair&, const CellPair& to,
                int beta, int alpha) {
    const Monad2& t = mon(i);
    const Monad2& s = mon(j);
    const int D = t.cell0, A = s.cell0;
    const FinDaggerCategory& hom = K.hom(D, A);
    const int mu_s_h = K.rwhisk(D, A, A, s.mu, to.f);
    const int s_beta = K.lwhisk(D, A, A, s.t, beta);
    return hom.comp(mu_s_h, hom.comp(s_beta, alpha));
  };
  H.dag2 = [&](int i, int j, const CellPair&, const CellPair& to, int alpha) {
    const Monad2& t = mon(i);
    const Monad2& s = mon(j);
    const int D = t.cell0, A = s.cell0;
    const FinDaggerCategory& hom = K.hom(D, A);
    const int eta_g = K.rwhisk(D, A, A, s.eta, to.f);
    const int mu_dag_g =
        K.rwhisk(D, A, A, hom.dagger[static_cast<std::size_t>(s.mu)], to.f);
    const int s_alpha_dag =
        K.lwhisk(D, A, A, s.t, hom.dagger[static_cast<std::size_t>(alpha)]);
    return hom.comp(s_alpha_dag, hom.comp(mu_dag_g, eta_g));
  };
  H.lw = [&](int i, int j, int k, const CellPair& g, const CellPair&,
             const CellPair& to, int alpha) {
    const int D = mon(i).cell0;
    const int A = mon(j).cell0;
    const int B = mon(k).cell0;
    const FinDaggerCategory& hom = K.hom(D, B);
    const int g_alpha = K.lwhisk(D, A, B, g.f, alpha);
    const int gamma_fp = K.rwhisk(D, A, B, g.sigma, to.f);
    return hom.comp(gamma_fp, g_alpha);
  };
  H.rw = [&](int i, int j, int k, const CellPair& e, const CellPair&,
             const CellPair&, int beta) {
    const int D = mon(i).cell0;
    const int A = mon(j).cell0;
    const int B = mon(k).cell0;
    return K.rwhisk(D, A, B, beta, e.f);
  };

  AssembledCompletion R = assemble_completion("FK(" + K.name + ")", n, H);
  res.cat = std::move(R.cat);
  res.cells1.resize(R.cells1.size());
  res.cells2.resize(R.triples.size());
  for (std::size_t ij = 0; ij < R.cells1.size(); ++ij) {
    for (const auto& c : R.cells1[ij]) res.cells1[ij].push_back({c.f, c.sigma});
    res.cells2[ij].resize(R.triples[ij].size());
    for (std::size_t k = 0; k < R.triples[ij].size(); ++k)
      res.cells2[ij][k] = {R.triples[ij][k][0], R.triples[ij][k][1],
                           R.triples[ij][k][2]};
  }
  return res;
}

CompletionResult build_fem_completion(const FinDagger2Category& K) {
  const FinDagger2Category Kop = op2(K);
  CompletionResult fk = build_fk_completion(Kop);
  CompletionResult res;
  res.cat = op2(fk.cat);
  res.cat.name = "FEM(" + K.name + ")";
  res.monads = fk.monads;  // monads of op2(K) coincide with monads of K
  const int n = static_cast<int>(res.monads.size());
  res.cells1.resize(static_cast<std::size_t>(n * n));
  res.cells2.resize(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      res.cells1[static_cast<std::size_t>(i * n + j)] =
          fk.cells1[static_cast<std::size_t>(j * n + i)];
      res.cells2[static_cast<std::size_t>(i * n + j)] =
          fk.cells2[static_cast<std::size_t>(j * n + i)];
    }
  return res;
}

// Algebra objects ----------------------------------------------------------

namespace {

std::vector<MonadMorphism2> morphisms_from_trivial(const FinDagger2Category& K,
                                                   int A, const Monad2& t) {
  const Monad2 triv = identity_monad2(K, A);
  std::vector<MonadMorphism2> out;
  const FinDaggerCategory& hom = K.hom(A, t.cell0);
  for (int f = 0; f < static_cast<int>(hom.objects.size()); ++f)
    for (int sig = 0; sig < static_cast<int>(hom.morphisms.size()); ++sig)
      if (check_monad_morphism2(K, triv, t, {f, sig})) out.push_back({f, sig});
  return out;
}

}  // namespace

CheckOutcome fem_object_check(const FinDagger2Category& K, const Monad2& m,
                              const FEMObjectWitness& w) {
  const int D = m.cell0;
  const int E = w.E;

  // Per 0-cell: composing with (u, xi) must be a dagger isomorphism onto the
  // category of monad morphisms out of the identity monad.
  for (int A = 0; A < K.n0(); ++A) {
    const FinDaggerCategory& hae = K.hom(A, E);
    const FinDaggerCategory& had = K.hom(A, D);
    const Monad2 triv = identity_monad2(K, A);
    const auto targets = morphisms_from_trivial(K, A, m);

    std::vector<MonadMorphism2> images;
    for (int f = 0; f < static_cast<int>(hae.objects.size()); ++f) {
      const int uf = K.comp1(A, E, D, w.u, f);
      const int xif = K.rwhisk(A, E, D, w.xi, f);
      if (!check_monad_morphism2(K, triv, m, {uf, xif}))
        return CheckOutcome::fail(
            "0-cell " + K.cells0[static_cast<std::size_t>(A)] + ": image of " +
            hae.objects[static_cast<std::size_t>(f)] + " is not a monad morphism");
      images.push_back({uf, xif});
    }
    if (images.size() != targets.size())
      return CheckOutcome::fail(
          "0-cell " + K.cells0[static_cast<std::size_t>(A)] + ": " +
          std::to_string(images.size()) + " 1-cells into the witness vs " +
          std::to_string(targets.size()) + " monad morphisms");
    for (std::size_t x = 0; x < images.size(); ++x)
      for (std::size_t y = x + 1; y < images.size(); ++y)
        if (images[x] == images[y])
          return CheckOutcome::fail(
              "0-cell " + K.cells0[static_cast<std::size_t>(A)] +
              ": composition with the witness is not injective on 1-cells");

    // morphism level, per frame
    for (int f = 0; f < static_cast<int>(hae.objects.size()); ++f)
      for (int g = 0; g < static_cast<int>(hae.objects.size()); ++g) {
        std::vector<int> mapped;
        for (int x = 0; x < static_cast<int>(hae.morphisms.size()); ++x) {
          if (hae.src(x) != f || hae.tgt(x) != g) continue;
          const int ux = K.lwhisk(A, E, D, w.u, x);
          const auto from = images[static_cast<std::size_t>(f)];
          const auto to = images[static_cast<std::size_t>(g)];
          if (!check_monad_cell2(K, triv, m, from, to, ux))
            return CheckOutcome::fail(
                "0-cell " + K.cells0[static_cast<std::size_t>(A)] + ": image of " +
                hae.mid(x) + " violates a 2-cell square");
          mapped.push_back(ux);
        }
        std::size_t count = 0;
        for (int y = 0; y < static_cast<int>(had.morphisms.size()); ++y) {
          if (had.src(y) != images[static_cast<std::size_t>(f)].f ||
              had.tgt(y) != images[static_cast<std::size_t>(g)].f)
            continue;
          if (check_monad_cell2(K, triv, m, images[static_cast<std::size_t>(f)],
                                images[static_cast<std::size_t>(g)], y))
            ++count;
        }
        std::sort(mapped.begin(), mapped.end());
        if (std::adjacent_find(mapped.begin(), mapped.end()) != mapped.end())
          return CheckOutcome::fail(
              "0-cell " + K.cells0[static_cast<std::size_t>(A)] +
              ": composition with the witness is not injective on 2-cells");
        if (mapped.size() != count)
          return CheckOutcome::fail(
              "0-cell " + K.cells0[static_cast<std::size_t>(A)] + ": " +
              std::to_string(mapped.size()) + " 2-cells map onto " +
              std::to_string(count) + " squares");
      }
    // dagger / identity / composition preservation are inherited from the
    // validated whisker tables; spot-check dagger anyway
    for (int x = 0; x < static_cast<int>(hae.morphisms.size()); ++x) {
      const int ux = K.lwhisk(A, E, D, w.u, x);
      const int uxd = K.lwhisk(A, E, D, w.u,
                               hae.dagger[static_cast<std::size_t>(x)]);
      if (had.dagger[static_cast<std::size_t>(ux)] != uxd)
        return CheckOutcome::fail(
            "0-cell " + K.cells0[static_cast<std::size_t>(A)] +
            ": composition with the witness does not preserve dagger");
    }
  }

  // Witness equations.
  const Monad2 triv_e = identity_monad2(K, E);
  if (!check_monad_morphism2(K, triv_e, m, {w.u, w.xi}))
    return CheckOutcome::fail("(u, xi) is not a monad morphism");
  if (K.comp1(D, E, D, w.u, w.f_t) != m.t)
    return CheckOutcome::fail("u . f_t differs from t");
  if (K.rwhisk(D, E, D, w.xi, w.f_t) != m.mu)
    return CheckOutcome::fail("xi * f_t differs from mu");
  if (K.lwhisk(E, E, D, w.u, w.eps_t) != w.xi)
    return CheckOutcome::fail("u * eps_t differs from xi");
  {
    const FinDaggerCategory& hde = K.hom(D, E);
    const FinDaggerCategory& hed = K.hom(E, D);
    const int lhs = hde.comp(K.rwhisk(D, E, E, w.eps_t, w.f_t),
                             K.lwhisk(D, D, E, w.f_t, m.eta));
    if (lhs != hde.identity[static_cast<std::size_t>(w.f_t)])
      return CheckOutcome::fail("first adjunction triangle");
    const int rhs = hed.comp(K.lwhisk(E, E, D, w.u, w.eps_t),
                             K.rwhisk(E, D, D, m.eta, w.u));
    if (rhs != hed.identity[static_cast<std::size_t>(w.u)])
      return CheckOutcome::fail("second adjunction triangle");
  }
  return CheckOutcome::pass();
}

CheckOutcome check_adjunction2(const FinDagger2Category& K,
                               const Adjunction2& adj) {
  const int a = adj.a0, b = adj.b0;
  const FinDaggerCategory& haa = K.hom(a, a);
  const FinDaggerCategory& hbb = K.hom(b, b);
  const FinDaggerCategory& hab = K.hom(a, b);
  const FinDaggerCategory& hba = K.hom(b, a);
  if (haa.src(adj.eta) != K.id1(a) ||
      haa.tgt(adj.eta) != K.comp1(a, b, a, adj.u, adj.f))
    return CheckOutcome::fail("unit endpoints");
  if (hbb.src(adj.eps) != K.comp1(b, a, b, adj.f, adj.u) ||
      hbb.tgt(adj.eps) != K.id1(b))
    return CheckOutcome::fail("counit endpoints");
  const int t1 = hab.comp(K.rwhisk(a, b, b, adj.eps, adj.f),
                          K.lwhisk(a, a, b, adj.f, adj.eta));
  if (t1 != hab.identity[static_cast<std::size_t>(adj.f)])
    return CheckOutcome::fail("triangle on f");
  const int t2 = hba.comp(K.lwhisk(b, b, a, adj.u, adj.eps),
                          K.rwhisk(b, a, a, adj.eta, adj.u));
  if (t2 != hba.identity[static_cast<std::size_t>(adj.u)])
    return CheckOutcome::fail("triangle on u");
  return CheckOutcome::pass();
}

Monad2 monad_from_adjunction2(const FinDagger2Category& K,
                              const Adjunction2& adj) {
  Monad2 m;
  m.cell0 = adj.a0;
  m.t = K.comp1(adj.a0, adj.b0, adj.a0, adj.u, adj.f);
  const int u_eps = K.lwhisk(adj.b0, adj.b0, adj.a0, adj.u, adj.eps);
  m.mu = K.rwhisk(adj.a0, adj.b0, adj.a0, u_eps, adj.f);
  m.eta = adj.eta;
  const CheckOutcome ok = check_monad2(K, m);
  if (!ok)
    throw ValidationError(ErrKind::CheckFailed,
                          "adjunction does not induce a monad: " + ok.witness);
  return m;
}

int universal2_check(const FinDagger2Category& K, const Adjunction2& adj,
                     const FEMObjectWitness& w) {
  monad_from_adjunction2(K, adj);  // the adjunction must induce a monad
  const int a = adj.a0, b = adj.b0, E = w.E;
  const FinDaggerCategory& hbe = K.hom(b, E);
  std::vector<int> hits;
  const int u_eps = K.lwhisk(b, b, a, adj.u, adj.eps);
  for (int nc = 0; nc < static_cast<int>(hbe.objects.size()); ++nc) {
    if (K.comp1(b, E, a, w.u, nc) != adj.u) continue;
    if (K.rwhisk(b, E, a, w.xi, nc) != u_eps) continue;
    hits.push_back(nc);
  }
  if (hits.empty())
    throw ValidationError(ErrKind::NoComparison, "no mediating 1-cell");
  if (hits.size() > 1)
    throw ValidationError(ErrKind::NonUnique,
                          std::to_string(hits.size()) + " mediating 1-cells");
  const int nc = hits.front();
  if (K.comp1(a, b, E, nc, adj.f) != w.f_t)
    throw ValidationError(ErrKind::CheckFailed, "n . f differs from f_t");
  if (K.lwhisk(b, b, E, nc, adj.eps) != K.rwhisk(b, E, E, w.eps_t, nc))
    throw ValidationError(ErrKind::CheckFailed,
                          "n * eps differs from eps_t * n");
  return nc;
}

CheckOutcome eta_commutation_check(const FinDagger2Category& K,
                                   const Monad2& m) {
  const int a = m.cell0;
  if (K.lwhisk(a, a, a, m.t, m.eta) != K.rwhisk(a, a, a, m.eta, m.t))
    return CheckOutcome::fail("t * eta differs from eta * t");
  return CheckOutcome::pass();
}

PairsCorrespondence fem_pairs_correspondence(const FinDagger2Category& K,
                                             const Monad2& s,
                                             const FEMObjectWitness& ws,
                                             const Monad2& t,
                                             const FEMObjectWitness& wt) {
  const int A = s.cell0;
  const int D = t.cell0;
  const int Es = ws.E;
  const int Et = wt.E;
  const FinDaggerCategory& had = K.hom(A, D);
  const FinDaggerCategory& hee = K.hom(Es, Et);
  const FinDaggerCategory& hesd = K.hom(Es, D);

  PairsCorrespondence out;
  for (int f = 0; f < static_cast<int>(had.objects.size()); ++f)
    for (int sig = 0; sig < static_cast<int>(had.morphisms.size()); ++sig)
      if (check_monad_morphism2(K, s, t, {f, sig}))
        out.morphisms.push_back({f, sig});

  auto square_holds = [&](int f, int sig, int fbar) {
    if (K.comp1(Es, Et, D, wt.u, fbar) != K.comp1(Es, A, D, f, ws.u))
      return false;
    const int lhs = K.rwhisk(Es, Et, D, wt.xi, fbar);
    const int rhs = hesd.comp(K.lwhisk(Es, A, D, f, ws.xi),
                              K.rwhisk(Es, A, D, sig, ws.u));
    return lhs == rhs;
  };

  for (const auto& mm : out.morphisms) {
    std::vector<int> hits;
    for (int fbar = 0; fbar < static_cast<int>(hee.objects.size()); ++fbar)
      if (square_holds(mm.f, mm.sigma, fbar)) hits.push_back(fbar);
    if (hits.size() != 1)
      throw ValidationError(
          ErrKind::CheckFailed,
          "lift of a monad morphism is not unique: " + std::to_string(hits.size()));
    out.fbar.push_back(hits.front());

    // recover sigma from fbar and cross-check
    const int xi_fbar = K.rwhisk(Es, Et, D, wt.xi, hits.front());
    const int xi_fs = K.rwhisk(A, Es, D, xi_fbar, ws.f_t);
    const int tf = K.comp1(A, D, D, t.t, mm.f);
    const int tf_eta = K.lwhisk(A, A, D, tf, s.eta);
    const int rec = had.comp(xi_fs, tf_eta);
    if (rec != mm.sigma)
      throw ValidationError(ErrKind::CheckFailed,
                            "sigma recovery from the lift failed");
  }
  // (f, sigma) -> (f, fbar) must be injective; counting pairs that actually
  // occur catches two sigmas collapsing onto the same lift
  std::size_t pairs = 0;
  for (int f = 0; f < static_cast<int>(had.objects.size()); ++f)
    for (int fbar = 0; fbar < static_cast<int>(hee.objects.size()); ++fbar) {
      bool any = false;
      for (const auto& mm : out.morphisms)
        if (mm.f == f && square_holds(mm.f, mm.sigma, fbar)) any = true;
      if (any) ++pairs;
    }
  if (pairs != out.morphisms.size())
    throw ValidationError(ErrKind::CheckFailed,
                          "pair correspondence is not bijective on 1-cells");

  // 2-cells
  for (std::size_t i = 0; i < out.morphisms.size(); ++i)
    for (std::size_t j = 0; j < out.morphisms.size(); ++j) {
      for (int alpha = 0; alpha < static_cast<int>(had.morphisms.size()); ++alpha) {
        if (had.src(alpha) != out.morphisms[i].f ||
            had.tgt(alpha) != out.morphisms[j].f)
          continue;
        if (!check_monad_cell2(K, s, t, out.morphisms[i], out.morphisms[j], alpha))
          continue;
        std::vector<int> hits;
        for (int ab = 0; ab < static_cast<int>(hee.morphisms.size()); ++ab) {
          if (hee.src(ab) != out.fbar[i] || hee.tgt(ab) != out.fbar[j]) continue;
          if (K.lwhisk(Es, Et, D, wt.u, ab) ==
              K.rwhisk(Es, A, D, alpha, ws.u))
            hits.push_back(ab);
        }
        if (hits.size() != 1)
          throw ValidationError(ErrKind::CheckFailed,
                                "lift of a 2-cell is not unique: " +
                                    std::to_string(hits.size()));
        out.cell_pairs.push_back({static_cast<int>(i), static_cast<int>(j), alpha});
        out.abar.push_back(hits.front());
      }
    }
  {
    std::set<std::array<int, 3>> lifted;
    for (std::size_t k = 0; k < out.cell_pairs.size(); ++k)
      lifted.insert({out.cell_pairs[k][0], out.cell_pairs[k][1], out.abar[k]});
    if (lifted.size() != out.cell_pairs.size())
      throw ValidationError(ErrKind::CheckFailed,
                            "2-cell correspondence is not injective");
  }

  // dagger preservation of the correspondence
  out.dagger_preserving = true;
  auto find_pair = [&](int i, int j, int alpha) -> int {
    for (std::size_t k = 0; k < out.cell_pairs.size(); ++k)
      if (out.cell_pairs[k][0] == i && out.cell_pairs[k][1] == j &&
          out.cell_pairs[k][2] == alpha)
        return static_cast<int>(k);
    return -1;
  };
  for (std::size_t k = 0; k < out.cell_pairs.size(); ++k) {
    const int i = out.cell_pairs[k][0];
    const int j = out.cell_pairs[k][1];
    const int alpha = out.cell_pairs[k][2];
    const int alpha_dag = had.dagger[static_cast<std::size_t>(alpha)];
    const int kd = find_pair(j, i, alpha_dag);
    if (kd < 0 ||
        out.abar[static_cast<std::size_t>(kd)] !=
            hee.dagger[static_cast<std::size_t>(out.abar[k])]) {
      out.dagger_preserving = false;
      break;
    }
  }
  return out;
}

// Strict dagger 2-functors ---------------------------------------------------

void validate_2functor(const FinDagger2Category& K,
                       const FinDagger2Category& L, const Dagger2Functor& F) {
  const int n = K.n0();
  if (static_cast<int>(F.map0.size()) != n)
    throw ValidationError(ErrKind::DanglingReference, "0-cell map size");
  for (int a : F.map0)
    if (a < 0 || a >= L.n0())
      throw ValidationError(ErrKind::DanglingReference, "0-cell image");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const std::size_t ab = static_cast<std::size_t>(a * n + b);
      validate_functor_indexed(K.hom(a, b),
                               L.hom(F.map0[static_cast<std::size_t>(a)],
                                     F.map0[static_cast<std::size_t>(b)]),
                               F.map1[ab], F.map2[ab]);
    }
  for (int a = 0; a < n; ++a)
    if (F.map1[static_cast<std::size_t>(a * n + a)]
              [static_cast<std::size_t>(K.id1(a))] !=
        L.id1(F.map0[static_cast<std::size_t>(a)]))
      throw ValidationError(ErrKind::CoherenceFail,
                            "identity 1-cell at " + K.cells0[static_cast<std::size_t>(a)]);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int fa = F.map0[static_cast<std::size_t>(a)];
        const int fb = F.map0[static_cast<std::size_t>(b)];
        const int fc = F.map0[static_cast<std::size_t>(c)];
        const auto& m_ab = F.map1[static_cast<std::size_t>(a * n + b)];
        const auto& m_bc = F.map1[static_cast<std::size_t>(b * n + c)];
        const auto& m_ac = F.map1[static_cast<std::size_t>(a * n + c)];
        const auto& x_ab = F.map2[static_cast<std::size_t>(a * n + b)];
        const auto& x_bc = F.map2[static_cast<std::size_t>(b * n + c)];
        const auto& x_ac = F.map2[static_cast<std::size_t>(a * n + c)];
        for (int g = 0; g < static_cast<int>(K.hom(b, c).objects.size()); ++g)
          for (int f = 0; f < static_cast<int>(K.hom(a, b).objects.size()); ++f)
            if (m_ac[static_cast<std::size_t>(K.comp1(a, b, c, g, f))] !=
                L.comp1(fa, fb, fc, m_bc[static_cast<std::size_t>(g)],
                        m_ab[static_cast<std::size_t>(f)]))
              throw ValidationError(ErrKind::CoherenceFail, "1-cell composition");
        for (int g = 0; g < static_cast<int>(K.hom(b, c).objects.size()); ++g)
          for (int x = 0; x < static_cast<int>(K.hom(a, b).morphisms.size()); ++x)
            if (x_ac[static_cast<std::size_t>(K.lwhisk(a, b, c, g, x))] !=
                L.lwhisk(fa, fb, fc, m_bc[static_cast<std::size_t>(g)],
                         x_ab[static_cast<std::size_t>(x)]))
              throw ValidationError(ErrKind::CoherenceFail, "left whisker");
        for (int x = 0; x < static_cast<int>(K.hom(b, c).morphisms.size()); ++x)
          for (int f = 0; f < static_cast<int>(K.hom(a, b).objects.size()); ++f)
            if (x_ac[static_cast<std::size_t>(K.rwhisk(a, b, c, x, f))] !=
                L.rwhisk(fa, fb, fc, x_bc[static_cast<std::size_t>(x)],
                         m_ab[static_cast<std::size_t>(f)]))
              throw ValidationError(ErrKind::CoherenceFail, "right whisker");
      }
}

Dagger2Functor extend_2functor(const FinDagger2Category& K,
                               const Dfmnd2Result& dfmnd,
                               const FinDagger2Category& L,
                               const Dagger2Functor& F,
                               const std::vector<FEMObjectWitness>& witnesses) {
  const int n = static_cast<int>(dfmnd.monads.size());
  if (static_cast<int>(witnesses.size()) != n)
    throw ValidationError(ErrKind::MissingWitness,
                          "one witness per monad is required");

  // image monads in L
  std::vector<Monad2> im(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Monad2& m = dfmnd.monads[static_cast<std::size_t>(i)];
    const int a = m.cell0;
    const std::size_t aa = static_cast<std::size_t>(a * K.n0() + a);
    im[static_cast<std::size_t>(i)] =
        Monad2{F.map0[static_cast<std::size_t>(a)],
               F.map1[aa][static_cast<std::size_t>(m.t)],
               F.map2[aa][static_cast<std::size_t>(m.mu)],
               F.map2[aa][static_cast<std::size_t>(m.eta)]};
  }

  Dagger2Functor R;
  R.source = nullptr;  // caller pairs it with dfmnd.cat
  R.target = nullptr;
  R.map0.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    R.map0[static_cast<std::size_t>(i)] = witnesses[static_cast<std::size_t>(i)].E;
  R.map1.resize(static_cast<std::size_t>(n * n));
  R.map2.resize(static_cast<std::size_t>(n * n));

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::size_t ij = static_cast<std::size_t>(i * n + j);
      const Monad2& s = dfmnd.monads[static_cast<std::size_t>(i)];
      const Monad2& t = dfmnd.monads[static_cast<std::size_t>(j)];
      const int A = s.cell0;
      const int D = t.cell0;
      const std::size_t ad = static_cast<std::size_t>(A * K.n0() + D);
      const FEMObjectWitness& wsi = witnesses[static_cast<std::size_t>(i)];
      const FEMObjectWitness& wtj = witnesses[static_cast<std::size_t>(j)];
      const int Es = wsi.E, Et = wtj.E;
      const FinDaggerCategory& hee = L.hom(Es, Et);
      const FinDaggerCategory& hesd = L.hom(Es, im[static_cast<std::size_t>(j)].cell0);

      auto lift1 = [&](int f_img, int sig_img) {
        std::vector<int> hits;
        for (int fbar = 0; fbar < static_cast<int>(hee.objects.size()); ++fbar) {
          if (L.comp1(Es, Et, im[static_cast<std::size_t>(j)].cell0, wtj.u, fbar) !=
              L.comp1(Es, im[static_cast<std::size_t>(i)].cell0,
                      im[static_cast<std::size_t>(j)].cell0, f_img, wsi.u))
            continue;
          const int lhs = L.rwhisk(Es, Et, im[static_cast<std::size_t>(j)].cell0,
                                   wtj.xi, fbar);
          const int rhs = hesd.comp(
              L.lwhisk(Es, im[static_cast<std::size_t>(i)].cell0,
                       im[static_cast<std::size_t>(j)].cell0, f_img, wsi.xi),
              L.rwhisk(Es, im[static_cast<std::size_t>(i)].cell0,
                       im[static_cast<std::size_t>(j)].cell0, sig_img, wsi.u));
          if (lhs == rhs) hits.push_back(fbar);
        }
        if (hits.size() != 1)
          throw ValidationError(ErrKind::NonUnique, "1-cell lift");
        return hits.front();
      };

      auto& m1 = R.map1[ij];
      auto& m2 = R.map2[ij];
      const auto& cells = dfmnd.cells1[ij];
      m1.resize(cells.size());
      for (std::size_t c = 0; c < cells.size(); ++c) {
        const int f_img = F.map1[ad][static_cast<std::size_t>(cells[c].f)];
        const int sig_img = F.map2[ad][static_cast<std::size_t>(cells[c].sigma)];
        m1[c] = lift1(f_img, sig_img);
      }
      const auto& tri = dfmnd.cells2[ij];
      m2.resize(tri.size());
      for (std::size_t x = 0; x < tri.size(); ++x) {
        const int alpha_img = F.map2[ad][static_cast<std::size_t>(tri[x][2])];
        const int from = m1[static_cast<std::size_t>(tri[x][0])];
        const int to = m1[static_cast<std::size_t>(tri[x][1])];
        std::vector<int> hits;
        for (int ab = 0; ab < static_cast<int>(hee.morphisms.size()); ++ab) {
          if (hee.src(ab) != from || hee.tgt(ab) != to) continue;
          if (L.lwhisk(Es, Et, im[static_cast<std::size_t>(j)].cell0, wtj.u, ab) ==
              L.rwhisk(Es, im[static_cast<std::size_t>(i)].cell0,
                       im[static_cast<std::size_t>(j)].cell0, alpha_img, wsi.u))
            hits.push_back(ab);
        }
        if (hits.size() != 1)
          throw ValidationError(ErrKind::NonUnique, "2-cell lift");
        m2[x] = hits.front();
      }
    }
  validate_2functor(dfmnd.cat, L, R);
  return R;
}

}  // namespace daggercat
