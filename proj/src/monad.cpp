#include "daggercat/monad.hpp"

#include <algorithm>
#include <map>

#include "daggercat/errors.hpp"

namespace daggercat {

namespace {

bool nat_unitary(const FinDaggerCategory& c, const NatTrans& n) {
  for (int comp : n.components)
    if (!is_unitary(c, comp)) return false;
  return true;
}

}  // namespace

FrobeniusMonad validate_monad(const FinDaggerCategory& base,
                              const DaggerFunctor& T,
                              const std::vector<int>& mu_components,
                              const std::vector<int>& eta_components) {
  if (!(T.source == base) || !(T.target == base))
    throw ValidationError(ErrKind::NotDaggerEndofunctor, base.name);

  FrobeniusMonad m;
  m.base = base;
  m.T = T;
  m.mu = validate_nat(functor_compose(T, T), T, mu_components);
  m.eta = validate_nat(identity_functor(base), T, eta_components);

  const int n_obj = static_cast<int>(base.objects.size());
  for (int d = 0; d < n_obj; ++d) {
    const std::size_t sd = static_cast<std::size_t>(d);
    const int mu_d = mu_components[sd];
    const int mu_Td = mu_components[static_cast<std::size_t>(T.obj_map[sd])];
    const int t_mu_d = T.mor_map[static_cast<std::size_t>(mu_d)];
    if (base.comp(mu_d, t_mu_d) != base.comp(mu_d, mu_Td))
      throw ValidationError(ErrKind::AssocFail, base.objects[sd]);
    const int id_Td = base.identity[static_cast<std::size_t>(T.obj_map[sd])];
    const int t_eta_d = T.mor_map[static_cast<std::size_t>(eta_components[sd])];
    if (base.comp(mu_d, t_eta_d) != id_Td)
      throw ValidationError(ErrKind::UnitFail, base.objects[sd] + " (left)");
    const int eta_Td = eta_components[static_cast<std::size_t>(T.obj_map[sd])];
    if (base.comp(mu_d, eta_Td) != id_Td)
      throw ValidationError(ErrKind::UnitFail, base.objects[sd] + " (right)");
  }
  m.frobenius = check_frobenius(m);
  return m;
}

FrobeniusMonad identity_monad(const FinDaggerCategory& base) {
  const DaggerFunctor id = identity_functor(base);
  std::vector<int> comps(base.objects.size());
  for (std::size_t a = 0; a < comps.size(); ++a)
    comps[a] = base.identity[a];
  return validate_monad(base, id, comps, comps);
}

bool check_frobenius(const FrobeniusMonad& m) {
  const FinDaggerCategory& B = m.base;
  for (std::size_t d = 0; d < B.objects.size(); ++d) {
    const int mu_d = m.mu.components[d];
    const int mu_Td = m.mu.components[static_cast<std::size_t>(m.T.obj_map[d])];
    const int lhs = B.comp(mu_Td, m.T.mor_map[static_cast<std::size_t>(
                                      B.dagger[static_cast<std::size_t>(mu_d)])]);
    const int rhs = B.comp(m.T.mor_map[static_cast<std::size_t>(mu_d)],
                           B.dagger[static_cast<std::size_t>(mu_Td)]);
    if (lhs != rhs) return false;
  }
  return true;
}

bool is_em_algebra(const FrobeniusMonad& m, int carrier, int delta) {
  const FinDaggerCategory& B = m.base;
  const std::size_t d = static_cast<std::size_t>(carrier);
  const int Td = m.T.obj_map[d];
  if (B.src(delta) != Td || B.tgt(delta) != carrier) return false;
  if (B.comp(delta, m.eta.components[d]) != B.identity[d]) return false;
  const int t_delta = m.T.mor_map[static_cast<std::size_t>(delta)];
  return B.comp(delta, t_delta) == B.comp(delta, m.mu.components[d]);
}

bool is_fem_algebra(const FrobeniusMonad& m, int carrier, int delta) {
  if (!is_em_algebra(m, carrier, delta)) return false;
  const FinDaggerCategory& B = m.base;
  const std::size_t d = static_cast<std::size_t>(carrier);
  const int delta_dag = B.dagger[static_cast<std::size_t>(delta)];
  const int lhs = B.comp(m.mu.components[d],
                         m.T.mor_map[static_cast<std::size_t>(delta_dag)]);
  const int rhs = B.comp(m.T.mor_map[static_cast<std::size_t>(delta)],
                         B.dagger[static_cast<std::size_t>(m.mu.components[d])]);
  return lhs == rhs;
}

std::vector<EMAlgebra> algebras_for(const FrobeniusMonad& m) {
  std::vector<EMAlgebra> out;
  const FinDaggerCategory& B = m.base;
  for (int d = 0; d < static_cast<int>(B.objects.size()); ++d)
    for (int f = 0; f < static_cast<int>(B.morphisms.size()); ++f) {
      if (B.src(f) != m.T.obj_map[static_cast<std::size_t>(d)] || B.tgt(f) != d)
        continue;
      if (!is_em_algebra(m, d, f)) continue;
      out.push_back({d, f, true, is_fem_algebra(m, d, f)});
    }
  return out;
}

Adjunction validate_adjunction(const DaggerFunctor& F, const DaggerFunctor& U,
                               const std::vector<int>& unit_components,
                               const std::vector<int>& counit_components) {
  if (!(F.target == U.source) || !(U.target == F.source))
    throw ValidationError(ErrKind::WrongEndpoints, "adjunction frame");
  Adjunction adj;
  adj.F = F;
  adj.U = U;
  adj.unit = validate_nat(identity_functor(F.source), functor_compose(U, F),
                          unit_components);
  adj.counit = validate_nat(functor_compose(F, U), identity_functor(U.source),
                            counit_components);
  const FinDaggerCategory& A = F.source;
  const FinDaggerCategory& D = U.source;
  for (std::size_t a = 0; a < A.objects.size(); ++a) {
    const int Fa = F.obj_map[a];
    const int lhs = D.comp(counit_components[static_cast<std::size_t>(Fa)],
                           F.mor_map[static_cast<std::size_t>(unit_components[a])]);
    if (lhs != D.identity[static_cast<std::size_t>(Fa)])
      throw ValidationError(ErrKind::CoherenceFail, "triangle at " + A.objects[a]);
  }
  for (std::size_t d = 0; d < D.objects.size(); ++d) {
    const int Ud = U.obj_map[d];
    const int lhs = A.comp(U.mor_map[static_cast<std::size_t>(counit_components[d])],
                           unit_components[static_cast<std::size_t>(Ud)]);
    if (lhs != A.identity[static_cast<std::size_t>(Ud)])
      throw ValidationError(ErrKind::CoherenceFail, "triangle at " + D.objects[d]);
  }
  return adj;
}

int FEMCategoryResult::algebra_index(int carrier, int delta) const {
  for (std::size_t i = 0; i < algebras.size(); ++i)
    if (algebras[i].carrier == carrier && algebras[i].structure == delta)
      return static_cast<int>(i);
  return -1;
}

FEMCategoryResult build_fem_category(const FrobeniusMonad& m) {
  if (!m.frobenius)
    throw ValidationError(ErrKind::NotFrobenius, m.base.name);
  const FinDaggerCategory& B = m.base;

  FEMCategoryResult res;
  res.monad = m;
  for (const auto& alg : algebras_for(m))
    if (alg.fem) res.algebras.push_back(alg);

  auto obj_id = [&](const EMAlgebra& a) {
    return B.objects[static_cast<std::size_t>(a.carrier)] + "@" +
           B.mid(a.structure);
  };
  std::sort(res.algebras.begin(), res.algebras.end(),
            [&](const EMAlgebra& x, const EMAlgebra& y) {
              return obj_id(x) < obj_id(y);
            });

  auto is_hom = [&](const EMAlgebra& x, const EMAlgebra& y, int f) {
    if (B.src(f) != x.carrier || B.tgt(f) != y.carrier) return false;
    return B.comp(f, x.structure) ==
           B.comp(y.structure, m.T.mor_map[static_cast<std::size_t>(f)]);
  };

  CategoryDescription d;
  d.name = "FEM(" + B.name + ")";
  std::map<std::string, int> mor_lookup;  // fem morphism id -> base morphism
  for (const auto& a : res.algebras) d.objects.push_back(obj_id(a));
  for (std::size_t i = 0; i < res.algebras.size(); ++i)
    for (std::size_t j = 0; j < res.algebras.size(); ++j)
      for (int f = 0; f < static_cast<int>(B.morphisms.size()); ++f) {
        if (!is_hom(res.algebras[i], res.algebras[j], f)) continue;
        const std::string id = B.mid(f) + "@" + d.objects[i] + ">" + d.objects[j];
        d.morphisms.push_back({id, d.objects[i], d.objects[j]});
        mor_lookup[id] = f;
      }
  for (std::size_t i = 0; i < res.algebras.size(); ++i) {
    const int one = B.identity[static_cast<std::size_t>(res.algebras[i].carrier)];
    d.identities[d.objects[i]] = B.mid(one) + "@" + d.objects[i] + ">" + d.objects[i];
  }
  auto hom_name = [&](int f, std::size_t i, std::size_t j) {
    return B.mid(f) + "@" + d.objects[i] + ">" + d.objects[j];
  };
  for (const auto& mor : d.morphisms) {
    const int f = mor_lookup[mor.id];
    // dagger closure; guaranteed by Frobenius-compatibility, checked anyway
    const int fd = B.dagger[static_cast<std::size_t>(f)];
    std::size_t i = 0, j = 0;
    for (std::size_t k = 0; k < d.objects.size(); ++k) {
      if (d.objects[k] == mor.src) i = k;
      if (d.objects[k] == mor.tgt) j = k;
    }
    if (!is_hom(res.algebras[j], res.algebras[i], fd))
      throw ValidationError(ErrKind::InternalClosureFailure,
                            "dagger of " + mor.id);
    d.dagger[mor.id] = hom_name(fd, j, i);
    for (const auto& pre : d.morphisms) {
      if (pre.tgt != mor.src) continue;
      const int g = mor_lookup[pre.id];
      std::size_t h = 0;
      for (std::size_t k = 0; k < d.objects.size(); ++k)
        if (d.objects[k] == pre.src) h = k;
      d.composition.push_back({mor.id, pre.id, hom_name(B.comp(f, g), h, j)});
    }
  }
  res.fem_cat = validate_category(d);

  res.underlying.resize(res.fem_cat.morphisms.size());
  for (std::size_t k = 0; k < res.fem_cat.morphisms.size(); ++k)
    res.underlying[k] = mor_lookup[res.fem_cat.morphisms[k].id];

  // Forgetful functor.
  {
    std::vector<int> om(res.fem_cat.objects.size());
    for (std::size_t i = 0; i < res.algebras.size(); ++i) {
      const int oi = res.fem_cat.object_index(obj_id(res.algebras[i]));
      om[static_cast<std::size_t>(oi)] = res.algebras[i].carrier;
    }
    res.U = validate_functor_indexed(res.fem_cat, B, om, res.underlying);
  }
  // Free functor.
  {
    std::vector<int> om(B.objects.size());
    std::vector<int> mm(B.morphisms.size());
    for (std::size_t a = 0; a < B.objects.size(); ++a) {
      const int carrier = m.T.obj_map[a];
      const int delta = m.mu.components[a];
      const int idx = res.algebra_index(carrier, delta);
      if (idx < 0)
        throw ValidationError(ErrKind::InternalClosureFailure,
                              "free algebra of " + B.objects[a]);
      om[a] = res.fem_cat.object_index(obj_id(res.algebras[static_cast<std::size_t>(idx)]));
    }
    for (std::size_t f = 0; f < B.morphisms.size(); ++f) {
      const std::string id =
          B.mid(m.T.mor_map[f]) + "@" +
          res.fem_cat.objects[static_cast<std::size_t>(om[static_cast<std::size_t>(B.src(static_cast<int>(f)))])] +
          ">" +
          res.fem_cat.objects[static_cast<std::size_t>(om[static_cast<std::size_t>(B.tgt(static_cast<int>(f)))])];
      const int k = res.fem_cat.morphism_index(id);
      if (k < 0)
        throw ValidationError(ErrKind::InternalClosureFailure,
                              "free image of " + B.mid(static_cast<int>(f)));
      mm[f] = k;
    }
    res.F = validate_functor_indexed(B, res.fem_cat, om, mm);
  }
  // Adjunction F -| U with unit eta and counit built from the structures.
  {
    std::vector<int> counit(res.fem_cat.objects.size());
    for (std::size_t i = 0; i < res.algebras.size(); ++i) {
      const EMAlgebra& alg = res.algebras[i];
      const int oi = res.fem_cat.object_index(obj_id(alg));
      const std::string free_id = obj_id({m.T.obj_map[static_cast<std::size_t>(alg.carrier)],
                                          m.mu.components[static_cast<std::size_t>(alg.carrier)],
                                          true, true});
      const std::string id = B.mid(alg.structure) + "@" + free_id + ">" + obj_id(alg);
      const int k = res.fem_cat.morphism_index(id);
      if (k < 0)
        throw ValidationError(ErrKind::InternalClosureFailure,
                              "counit at " + obj_id(alg));
      counit[static_cast<std::size_t>(oi)] = k;
    }
    res.adj = validate_adjunction(res.F, res.U, m.eta.components, counit);
  }
  {
    std::vector<int> xi(res.fem_cat.objects.size());
    for (std::size_t i = 0; i < res.algebras.size(); ++i) {
      const int oi = res.fem_cat.object_index(obj_id(res.algebras[i]));
      xi[static_cast<std::size_t>(oi)] = res.algebras[i].structure;
    }
    res.counit_xi = validate_nat(functor_compose(m.T, res.U), res.U, xi);
  }
  return res;
}

FrobeniusMonad monad_from_adjunction(const Adjunction& adj) {
  const DaggerFunctor T = functor_compose(adj.U, adj.F);
  const FinDaggerCategory& A = adj.F.source;
  std::vector<int> mu(A.objects.size());
  for (std::size_t a = 0; a < A.objects.size(); ++a)
    mu[a] = adj.U.mor_map[static_cast<std::size_t>(
        adj.counit.components[static_cast<std::size_t>(adj.F.obj_map[a])])];
  FrobeniusMonad m = validate_monad(A, T, mu, adj.unit.components);
  if (!m.frobenius)
    throw ValidationError(ErrKind::NotFrobenius, "monad of a dagger adjunction");
  return m;
}

namespace {

bool monads_equal(const FrobeniusMonad& a, const FrobeniusMonad& b) {
  return a.base == b.base && a.T.same_maps(b.T) &&
         a.mu.components == b.mu.components && a.eta.components == b.eta.components;
}

}  // namespace

DaggerFunctor comparison_functor(const Adjunction& adj,
                                 const FEMCategoryResult& fem) {
  const FrobeniusMonad induced = monad_from_adjunction(adj);
  if (!monads_equal(induced, fem.monad))
    throw ValidationError(ErrKind::MonadMismatch, fem.fem_cat.name);

  const FinDaggerCategory& D = adj.U.source;
  const DaggerFunctor F_T = fem.F;
  const DaggerFunctor U_T = fem.U;
  std::vector<DaggerFunctor> hits;
  for (auto& N : all_dagger_functors(D, fem.fem_cat)) {
    if (!functor_compose(U_T, N).same_maps(adj.U)) continue;
    if (!functor_compose(N, adj.F).same_maps(F_T)) continue;
    hits.push_back(std::move(N));
  }
  if (hits.empty())
    throw ValidationError(ErrKind::NoComparison, fem.fem_cat.name);
  if (hits.size() > 1)
    throw ValidationError(ErrKind::NonUnique, fem.fem_cat.name);
  return hits.front();
}

bool is_monadic(const Adjunction& adj, const FEMCategoryResult& fem,
                std::uint64_t cap) {
  const DaggerFunctor N = comparison_functor(adj, fem);
  const FinDaggerCategory& D = adj.U.source;
  const DaggerFunctor id_fem = identity_functor(fem.fem_cat);
  const DaggerFunctor id_d = identity_functor(D);
  for (const auto& M : all_dagger_functors(fem.fem_cat, D, cap)) {
    bool in_ok = false;
    for (const auto& n : all_nats(functor_compose(N, M), id_fem))
      if (nat_unitary(fem.fem_cat, n)) {
        in_ok = true;
        break;
      }
    if (!in_ok) continue;
    for (const auto& n : all_nats(functor_compose(M, N), id_d))
      if (nat_unitary(D, n)) return true;
  }
  return false;
}

}  // namespace daggercat
