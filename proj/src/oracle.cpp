#include "daggercat/oracle.hpp"

#include <functional>
#include <map>
#include <set>

namespace daggercat::oracle {

using nlohmann::ordered_json;

// Everything below re-derives the laws from the raw tables on purpose;
// nothing is delegated to the validators in the main modules.

namespace {

int comp_of(const FinDaggerCategory& c, int g, int f) {
  return c.compose[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
}

bool f_ok(const FinDaggerCategory& A, const FinDaggerCategory& B,
          const std::vector<int>& om, const std::vector<int>& mm) {
  for (std::size_t m = 0; m < mm.size(); ++m) {
    const int i = mm[m];
    if (B.src(i) != om[static_cast<std::size_t>(A.src(static_cast<int>(m)))])
      return false;
    if (B.tgt(i) != om[static_cast<std::size_t>(A.tgt(static_cast<int>(m)))])
      return false;
    if (mm[static_cast<std::size_t>(A.dagger[m])] !=
        B.dagger[static_cast<std::size_t>(i)])
      return false;
  }
  for (std::size_t a = 0; a < om.size(); ++a)
    if (mm[static_cast<std::size_t>(A.identity[a])] !=
        B.identity[static_cast<std::size_t>(om[a])])
      return false;
  for (int g = 0; g < static_cast<int>(mm.size()); ++g)
    for (int f = 0; f < static_cast<int>(mm.size()); ++f) {
      if (A.src(g) != A.tgt(f)) continue;
      if (comp_of(B, mm[static_cast<std::size_t>(g)], mm[static_cast<std::size_t>(f)]) !=
          mm[static_cast<std::size_t>(comp_of(A, g, f))])
        return false;
    }
  return true;
}

// Partial consistency against everything assigned so far.
bool partial_ok(const FinDaggerCategory& A, const FinDaggerCategory& B,
                const std::vector<int>& om, const std::vector<int>& mm,
                int fresh) {
  const int img = mm[static_cast<std::size_t>(fresh)];
  if (B.src(img) != om[static_cast<std::size_t>(A.src(fresh))] ||
      B.tgt(img) != om[static_cast<std::size_t>(A.tgt(fresh))])
    return false;
  const int fd = A.dagger[static_cast<std::size_t>(fresh)];
  if (mm[static_cast<std::size_t>(fd)] >= 0 &&
      mm[static_cast<std::size_t>(fd)] != B.dagger[static_cast<std::size_t>(img)])
    return false;
  for (int o = 0; o < static_cast<int>(mm.size()); ++o) {
    if (mm[static_cast<std::size_t>(o)] < 0) continue;
    if (A.src(fresh) == A.tgt(o)) {
      const int c = comp_of(A, fresh, o);
      if (mm[static_cast<std::size_t>(c)] >= 0 &&
          comp_of(B, img, mm[static_cast<std::size_t>(o)]) !=
              mm[static_cast<std::size_t>(c)])
        return false;
    }
    if (A.src(o) == A.tgt(fresh)) {
      const int c = comp_of(A, o, fresh);
      if (mm[static_cast<std::size_t>(c)] >= 0 &&
          comp_of(B, mm[static_cast<std::size_t>(o)], img) !=
              mm[static_cast<std::size_t>(c)])
        return false;
    }
  }
  return true;
}

ordered_json functor_json(const FinDaggerCategory& A, const FinDaggerCategory& B,
                          const OracleFunctor& F) {
  ordered_json objs = ordered_json::object();
  for (std::size_t a = 0; a < A.objects.size(); ++a)
    objs[A.objects[a]] = B.objects[static_cast<std::size_t>(F.obj_map[a])];
  ordered_json mors = ordered_json::object();
  for (std::size_t m = 0; m < A.morphisms.size(); ++m)
    mors[A.morphisms[m].id] = B.mid(F.mor_map[m]);
  return ordered_json{{"objects", objs}, {"morphisms", mors}};
}

}  // namespace

bool naive_check_category(const CategoryDescription& desc) {
  std::map<std::string, std::pair<std::string, std::string>> ends;
  for (const auto& m : desc.morphisms) {
    if (ends.count(m.id)) return false;
    ends[m.id] = {m.src, m.tgt};
  }
  std::set<std::string> objs(desc.objects.begin(), desc.objects.end());
  if (objs.size() != desc.objects.size()) return false;
  for (const auto& [id, e] : ends)
    if (!objs.count(e.first) || !objs.count(e.second)) return false;

  std::map<std::string, std::string> unit = desc.identities;
  for (const auto& o : desc.objects) {
    auto it = unit.find(o);
    if (it == unit.end()) return false;
    auto m = ends.find(it->second);
    if (m == ends.end() || m->second.first != o || m->second.second != o)
      return false;
  }

  std::map<std::pair<std::string, std::string>, std::string> comp;
  for (const auto& row : desc.composition) {
    if (!ends.count(row[0]) || !ends.count(row[1]) || !ends.count(row[2]))
      return false;
    if (ends[row[1]].second != ends[row[0]].first) return false;
    auto key = std::make_pair(row[0], row[1]);
    if (comp.count(key) && comp[key] != row[2]) return false;
    comp[key] = row[2];
    if (ends[row[2]].first != ends[row[1]].first ||
        ends[row[2]].second != ends[row[0]].second)
      return false;
  }
  for (const auto& [g, ge] : ends)
    for (const auto& [f, fe] : ends) {
      if (fe.second != ge.first) continue;
      if (!comp.count({g, f})) return false;
    }
  for (const auto& [f, fe] : ends) {
    if (comp[{unit[fe.second], f}] != f) return false;
    if (comp[{f, unit[fe.first]}] != f) return false;
  }
  for (const auto& [h, he] : ends)
    for (const auto& [g, ge] : ends) {
      if (ge.second != he.first) continue;
      for (const auto& [f, fe] : ends) {
        if (fe.second != ge.first) continue;
        if (comp[{comp[{h, g}], f}] != comp[{h, comp[{g, f}]}]) return false;
      }
    }

  std::map<std::string, std::string> dag = desc.dagger;
  for (const auto& [f, fe] : ends) {
    auto it = dag.find(f);
    if (it == dag.end() || !ends.count(it->second)) return false;
    const auto& de = ends[it->second];
    if (de.first != fe.second || de.second != fe.first) return false;
    if (dag[it->second] != f) return false;
  }
  for (const auto& [o, u] : unit)
    if (dag[u] != u) return false;
  for (const auto& [g, ge] : ends)
    for (const auto& [f, fe] : ends) {
      if (fe.second != ge.first) continue;
      if (dag[comp[{g, f}]] != comp[{dag[f], dag[g]}]) return false;
    }
  return true;
}

bool naive_frobenius(const FinDaggerCategory& base, const OracleFunctor& T,
                     const std::vector<int>& mu) {
  for (std::size_t d = 0; d < base.objects.size(); ++d) {
    const int mu_d = mu[d];
    const int mu_Td = mu[static_cast<std::size_t>(T.obj_map[d])];
    const int lhs = comp_of(base, mu_Td,
                            T.mor_map[static_cast<std::size_t>(
                                base.dagger[static_cast<std::size_t>(mu_d)])]);
    const int rhs = comp_of(base, T.mor_map[static_cast<std::size_t>(mu_d)],
                            base.dagger[static_cast<std::size_t>(mu_Td)]);
    if (lhs != rhs) return false;
  }
  return true;
}

std::vector<OracleFunctor> enumerate_dagger_functors(
    const FinDaggerCategory& A, const FinDaggerCategory& B, std::uint64_t cap) {
  const int n_obj = static_cast<int>(A.objects.size());
  const int n_mor = static_cast<int>(A.morphisms.size());
  std::vector<OracleFunctor> out;
  std::vector<int> om(static_cast<std::size_t>(n_obj), -1);
  std::vector<int> mm(static_cast<std::size_t>(n_mor), -1);
  std::uint64_t nodes = 0;
  auto bump = [&] {
    if (++nodes > cap) throw SearchSpaceTooLarge(cap);
  };

  std::function<void(int)> assign_mor = [&](int m) {
    if (m == n_mor) {
      if (f_ok(A, B, om, mm)) out.push_back({om, mm});
      return;
    }
    const int sa = om[static_cast<std::size_t>(A.src(m))];
    const int ta = om[static_cast<std::size_t>(A.tgt(m))];
    for (int cand = 0; cand < static_cast<int>(B.morphisms.size()); ++cand) {
      if (B.src(cand) != sa || B.tgt(cand) != ta) continue;
      bump();
      mm[static_cast<std::size_t>(m)] = cand;
      if (partial_ok(A, B, om, mm, m)) assign_mor(m + 1);
      mm[static_cast<std::size_t>(m)] = -1;
    }
  };
  std::function<void(int)> assign_obj = [&](int a) {
    if (a == n_obj) {
      assign_mor(0);
      return;
    }
    for (int b = 0; b < static_cast<int>(B.objects.size()); ++b) {
      bump();
      om[static_cast<std::size_t>(a)] = b;
      assign_obj(a + 1);
    }
  };
  if (n_obj == 0)
    out.push_back({om, mm});
  else
    assign_obj(0);
  return out;
}

std::vector<std::vector<int>> enumerate_nat(const FinDaggerCategory& A,
                                            const FinDaggerCategory& B,
                                            const OracleFunctor& F,
                                            const OracleFunctor& G) {
  const int n_obj = static_cast<int>(A.objects.size());
  std::vector<std::vector<int>> out;
  std::vector<int> comp(static_cast<std::size_t>(n_obj), -1);
  std::function<void(int)> rec = [&](int a) {
    if (a == n_obj) {
      for (int f = 0; f < static_cast<int>(A.morphisms.size()); ++f) {
        const std::size_t x = static_cast<std::size_t>(A.src(f));
        const std::size_t y = static_cast<std::size_t>(A.tgt(f));
        if (comp_of(B, G.mor_map[static_cast<std::size_t>(f)], comp[x]) !=
            comp_of(B, comp[y], F.mor_map[static_cast<std::size_t>(f)]))
          return;
      }
      out.push_back(comp);
      return;
    }
    for (int c = 0; c < static_cast<int>(B.morphisms.size()); ++c) {
      if (B.src(c) != F.obj_map[static_cast<std::size_t>(a)] ||
          B.tgt(c) != G.obj_map[static_cast<std::size_t>(a)])
        continue;
      comp[static_cast<std::size_t>(a)] = c;
      rec(a + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<OracleMonad> enumerate_monads(const FinDaggerCategory& C,
                                          std::uint64_t cap) {
  std::vector<OracleMonad> out;
  const int n_obj = static_cast<int>(C.objects.size());
  for (const auto& T : enumerate_dagger_functors(C, C, cap)) {
    // candidate mu_d: T(T d) -> T d and eta_d: d -> T d, componentwise
    std::vector<std::vector<int>> mu_cands(static_cast<std::size_t>(n_obj));
    std::vector<std::vector<int>> eta_cands(static_cast<std::size_t>(n_obj));
    for (int d = 0; d < n_obj; ++d) {
      const int Td = T.obj_map[static_cast<std::size_t>(d)];
      const int TTd = T.obj_map[static_cast<std::size_t>(Td)];
      for (int f = 0; f < static_cast<int>(C.morphisms.size()); ++f) {
        if (C.src(f) == TTd && C.tgt(f) == Td)
          mu_cands[static_cast<std::size_t>(d)].push_back(f);
        if (C.src(f) == d && C.tgt(f) == Td)
          eta_cands[static_cast<std::size_t>(d)].push_back(f);
      }
    }
    std::vector<int> mu(static_cast<std::size_t>(n_obj), -1);
    std::vector<int> eta(static_cast<std::size_t>(n_obj), -1);

    auto natural = [&](const std::vector<int>& comps, bool from_tt) {
      for (int f = 0; f < static_cast<int>(C.morphisms.size()); ++f) {
        const std::size_t x = static_cast<std::size_t>(C.src(f));
        const std::size_t y = static_cast<std::size_t>(C.tgt(f));
        const int Tf = T.mor_map[static_cast<std::size_t>(f)];
        const int upper = from_tt ? T.mor_map[static_cast<std::size_t>(Tf)] : f;
        if (comp_of(C, Tf, comps[x]) != comp_of(C, comps[y], upper)) return false;
      }
      return true;
    };
    auto laws = [&] {
      for (int d = 0; d < n_obj; ++d) {
        const std::size_t sd = static_cast<std::size_t>(d);
        const int Td = T.obj_map[sd];
        const int t_mu = T.mor_map[static_cast<std::size_t>(mu[sd])];
        if (comp_of(C, mu[sd], t_mu) !=
            comp_of(C, mu[sd], mu[static_cast<std::size_t>(Td)]))
          return false;
        const int unit = C.identity[static_cast<std::size_t>(Td)];
        if (comp_of(C, mu[sd], T.mor_map[static_cast<std::size_t>(eta[sd])]) != unit)
          return false;
        if (comp_of(C, mu[sd], eta[static_cast<std::size_t>(Td)]) != unit)
          return false;
      }
      return true;
    };

    std::function<void(int)> pick_eta = [&](int d) {
      if (d == n_obj) {
        if (!natural(eta, false) || !laws()) return;
        out.push_back({T, mu, eta, naive_frobenius(C, T, mu)});
        return;
      }
      for (int c : eta_cands[static_cast<std::size_t>(d)]) {
        eta[static_cast<std::size_t>(d)] = c;
        pick_eta(d + 1);
      }
    };
    std::function<void(int)> pick_mu = [&](int d) {
      if (d == n_obj) {
        if (natural(mu, true)) pick_eta(0);
        return;
      }
      for (int c : mu_cands[static_cast<std::size_t>(d)]) {
        mu[static_cast<std::size_t>(d)] = c;
        pick_mu(d + 1);
      }
    };
    pick_mu(0);
  }
  return out;
}

std::vector<OracleAlgebra> enumerate_algebras(const FinDaggerCategory& base,
                                              const OracleMonad& m) {
  std::vector<OracleAlgebra> out;
  for (int d = 0; d < static_cast<int>(base.objects.size()); ++d) {
    const std::size_t sd = static_cast<std::size_t>(d);
    const int Td = m.T.obj_map[sd];
    for (int f = 0; f < static_cast<int>(base.morphisms.size()); ++f) {
      if (base.src(f) != Td || base.tgt(f) != d) continue;
      if (comp_of(base, f, m.eta[sd]) != base.identity[sd]) continue;
      if (comp_of(base, f, m.T.mor_map[static_cast<std::size_t>(f)]) !=
          comp_of(base, f, m.mu[sd]))
        continue;
      const int fd = base.dagger[static_cast<std::size_t>(f)];
      const bool fem =
          comp_of(base, m.mu[sd], m.T.mor_map[static_cast<std::size_t>(fd)]) ==
          comp_of(base, m.T.mor_map[static_cast<std::size_t>(f)],
                  base.dagger[static_cast<std::size_t>(m.mu[sd])]);
      out.push_back({d, f, fem});
    }
  }
  return out;
}

std::vector<OracleMonadMorphism> enumerate_monad_morphisms(
    const FinDaggerCategory& A, const OracleMonad& s,
    const FinDaggerCategory& D, const OracleMonad& t, std::uint64_t cap) {
  std::vector<OracleMonadMorphism> out;
  const int n_obj = static_cast<int>(A.objects.size());
  for (const auto& F : enumerate_dagger_functors(A, D, cap)) {
    // sigma_a: t(F a) -> F(s a)
    std::vector<std::vector<int>> cands(static_cast<std::size_t>(n_obj));
    for (int a = 0; a < n_obj; ++a) {
      const int Fa = F.obj_map[static_cast<std::size_t>(a)];
      const int tFa = t.T.obj_map[static_cast<std::size_t>(Fa)];
      const int Fsa = F.obj_map[static_cast<std::size_t>(
          s.T.obj_map[static_cast<std::size_t>(a)])];
      for (int f = 0; f < static_cast<int>(D.morphisms.size()); ++f)
        if (D.src(f) == tFa && D.tgt(f) == Fsa)
          cands[static_cast<std::size_t>(a)].push_back(f);
    }
    std::vector<int> sig(static_cast<std::size_t>(n_obj), -1);
    auto ok = [&] {
      // naturality
      for (int f = 0; f < static_cast<int>(A.morphisms.size()); ++f) {
        const std::size_t x = static_cast<std::size_t>(A.src(f));
        const std::size_t y = static_cast<std::size_t>(A.tgt(f));
        const int Fsf = F.mor_map[static_cast<std::size_t>(
            s.T.mor_map[static_cast<std::size_t>(f)])];
        const int tFf = t.T.mor_map[static_cast<std::size_t>(
            F.mor_map[static_cast<std::size_t>(f)])];
        if (comp_of(D, Fsf, sig[x]) != comp_of(D, sig[y], tFf)) return false;
      }
      for (int a = 0; a < n_obj; ++a) {
        const std::size_t sa = static_cast<std::size_t>(a);
        const int Fa = F.obj_map[sa];
        const int s_a = s.T.obj_map[sa];
        const int F_mu_s = F.mor_map[static_cast<std::size_t>(s.mu[sa])];
        const int sig_sa = sig[static_cast<std::size_t>(s_a)];
        const int t_sig = t.T.mor_map[static_cast<std::size_t>(sig[sa])];
        const int lhs = comp_of(D, F_mu_s, comp_of(D, sig_sa, t_sig));
        const int rhs = comp_of(D, sig[sa], t.mu[static_cast<std::size_t>(Fa)]);
        if (lhs != rhs) return false;
        const int sig_d = D.dagger[static_cast<std::size_t>(sig[sa])];
        const int lhs2 = comp_of(D, sig_d, comp_of(D, F_mu_s, sig_sa));
        const int rhs2 = comp_of(D, t.mu[static_cast<std::size_t>(Fa)],
                                 t.T.mor_map[static_cast<std::size_t>(sig_d)]);
        if (lhs2 != rhs2) return false;
        if (comp_of(D, sig[sa], t.eta[static_cast<std::size_t>(Fa)]) !=
            F.mor_map[static_cast<std::size_t>(s.eta[sa])])
          return false;
      }
      return true;
    };
    std::function<void(int)> rec = [&](int a) {
      if (a == n_obj) {
        if (ok()) out.push_back({F, sig});
        return;
      }
      for (int c : cands[static_cast<std::size_t>(a)]) {
        sig[static_cast<std::size_t>(a)] = c;
        rec(a + 1);
      }
    };
    rec(0);
  }
  return out;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> iso_search_dagger(
    const FinDaggerCategory& C, const FinDaggerCategory& D, std::uint64_t cap) {
  if (C.objects.size() != D.objects.size() ||
      C.morphisms.size() != D.morphisms.size())
    return std::nullopt;
  const int n_obj = static_cast<int>(C.objects.size());
  const int n_mor = static_cast<int>(C.morphisms.size());
  std::vector<int> om(static_cast<std::size_t>(n_obj), -1);
  std::vector<int> mm(static_cast<std::size_t>(n_mor), -1);
  std::vector<char> obj_used(static_cast<std::size_t>(n_obj), 0);
  std::vector<char> mor_used(static_cast<std::size_t>(n_mor), 0);
  std::uint64_t nodes = 0;
  auto bump = [&] {
    if (++nodes > cap) throw SearchSpaceTooLarge(cap);
  };

  std::optional<std::pair<std::vector<int>, std::vector<int>>> found;
  std::function<void(int)> assign_mor = [&](int m) {
    if (found) return;
    if (m == n_mor) {
      if (f_ok(C, D, om, mm)) found = std::make_pair(om, mm);
      return;
    }
    const int sa = om[static_cast<std::size_t>(C.src(m))];
    const int ta = om[static_cast<std::size_t>(C.tgt(m))];
    for (int cand = 0; cand < n_mor && !found; ++cand) {
      if (mor_used[static_cast<std::size_t>(cand)]) continue;
      if (D.src(cand) != sa || D.tgt(cand) != ta) continue;
      bump();
      mm[static_cast<std::size_t>(m)] = cand;
      mor_used[static_cast<std::size_t>(cand)] = 1;
      if (partial_ok(C, D, om, mm, m)) assign_mor(m + 1);
      mor_used[static_cast<std::size_t>(cand)] = 0;
      mm[static_cast<std::size_t>(m)] = -1;
    }
  };
  std::function<void(int)> assign_obj = [&](int a) {
    if (found) return;
    if (a == n_obj) {
      assign_mor(0);
      return;
    }
    for (int b = 0; b < n_obj && !found; ++b) {
      if (obj_used[static_cast<std::size_t>(b)]) continue;
      bump();
      om[static_cast<std::size_t>(a)] = b;
      obj_used[static_cast<std::size_t>(b)] = 1;
      assign_obj(a + 1);
      obj_used[static_cast<std::size_t>(b)] = 0;
    }
  };
  if (n_obj == 0) return std::make_pair(om, mm);
  assign_obj(0);
  return found;
}

ordered_json EnumerationReport::to_json() const {
  return ordered_json{{"space", space}, {"count", count}, {"items", items}};
}

std::string EnumerationReport::dump() const { return to_json().dump(2) + "\n"; }

EnumerationReport monads_report(const FinDaggerCategory& C, std::uint64_t cap) {
  EnumerationReport rep;
  rep.space = "monads(" + C.name + ")";
  const auto monads = enumerate_monads(C, cap);
  rep.count = monads.size();
  for (const auto& m : monads) {
    ordered_json mu = ordered_json::object();
    ordered_json eta = ordered_json::object();
    for (std::size_t d = 0; d < C.objects.size(); ++d) {
      mu[C.objects[d]] = C.mid(m.mu[d]);
      eta[C.objects[d]] = C.mid(m.eta[d]);
    }
    ordered_json alg_items = ordered_json::array();
    for (const auto& a : enumerate_algebras(C, m))
      alg_items.push_back(ordered_json{{"carrier", C.objects[static_cast<std::size_t>(a.carrier)]},
                                       {"structure", C.mid(a.delta)},
                                       {"fem", a.fem}});
    rep.items.push_back(ordered_json{{"endofunctor", functor_json(C, C, m.T)},
                                     {"mu", mu},
                                     {"eta", eta},
                                     {"frobenius", m.frobenius},
                                     {"algebras", alg_items}});
  }
  return rep;
}

EnumerationReport functors_report(const FinDaggerCategory& A,
                                  const FinDaggerCategory& B, std::uint64_t cap) {
  EnumerationReport rep;
  rep.space = "functors(" + A.name + ", " + B.name + ")";
  const auto fs = enumerate_dagger_functors(A, B, cap);
  rep.count = fs.size();
  for (const auto& f : fs) rep.items.push_back(functor_json(A, B, f));
  return rep;
}

EnumerationReport algebras_report(const FinDaggerCategory& base,
                                  const OracleMonad& m) {
  EnumerationReport rep;
  rep.space = "algebras(" + base.name + ")";
  const auto algs = enumerate_algebras(base, m);
  rep.count = algs.size();
  for (const auto& a : algs)
    rep.items.push_back(
        ordered_json{{"carrier", base.objects[static_cast<std::size_t>(a.carrier)]},
                     {"structure", base.mid(a.delta)},
                     {"fem", a.fem}});
  return rep;
}

}  // namespace daggercat::oracle
