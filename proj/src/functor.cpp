#include "daggercat/functor.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "daggercat/errors.hpp"

namespace daggercat {

namespace {

std::string pair_msg(const std::string& a, const std::string& b) {
  return "(" + a + ", " + b + ")";
}

// How each morphism of A is obtained during enumeration: identities are
// forced by the object map, generators are free choices, everything else is
// derived by dagger or binary composition from earlier steps.
struct PlanStep {
  enum Kind { Identity, Generator, Dagger, Composite } kind = Generator;
  int mor = -1;
  int arg1 = -1;  // Dagger: operand; Composite: g
  int arg2 = -1;  // Composite: f
};

std::vector<PlanStep> derivation_plan(const FinDaggerCategory& A) {
  const int n = static_cast<int>(A.morphisms.size());
  std::vector<char> known(static_cast<std::size_t>(n), 0);
  std::vector<PlanStep> plan;
  plan.reserve(static_cast<std::size_t>(n));

  for (int a = 0; a < static_cast<int>(A.objects.size()); ++a) {
    const int i = A.identity[static_cast<std::size_t>(a)];
    if (!known[static_cast<std::size_t>(i)]) {
      plan.push_back({PlanStep::Identity, i, a, -1});
      known[static_cast<std::size_t>(i)] = 1;
    }
  }

  int remaining = n;
  for (int m = 0; m < n; ++m)
    if (known[static_cast<std::size_t>(m)]) --remaining;

  while (remaining > 0) {
    bool progress = false;
    for (int m = 0; m < n && !progress; ++m) {
      if (known[static_cast<std::size_t>(m)]) continue;
      const int d = A.dagger[static_cast<std::size_t>(m)];
      if (d != m && known[static_cast<std::size_t>(d)]) {
        plan.push_back({PlanStep::Dagger, m, d, -1});
        known[static_cast<std::size_t>(m)] = 1;
        --remaining;
        progress = true;
        break;
      }
      for (int g = 0; g < n && !progress; ++g) {
        if (!known[static_cast<std::size_t>(g)]) continue;
        for (int f = 0; f < n; ++f) {
          if (!known[static_cast<std::size_t>(f)] || !A.composable(g, f)) continue;
          if (A.compose[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] != m)
            continue;
          plan.push_back({PlanStep::Composite, m, g, f});
          known[static_cast<std::size_t>(m)] = 1;
          --remaining;
          progress = true;
          break;
        }
      }
    }
    if (progress) continue;
    for (int m = 0; m < n; ++m) {
      if (known[static_cast<std::size_t>(m)]) continue;
      plan.push_back({PlanStep::Generator, m, -1, -1});
      known[static_cast<std::size_t>(m)] = 1;
      --remaining;
      break;
    }
  }
  return plan;
}

// Partial-assignment consistency: every fully-known relation must already
// hold. `fresh` limits the scan to pairs involving the newly set morphism.
bool consistent_after(const FinDaggerCategory& A, const FinDaggerCategory& B,
                      const std::vector<int>& obj_map,
                      const std::vector<int>& mor_map, int fresh) {
  const std::size_t m = static_cast<std::size_t>(fresh);
  const int img = mor_map[m];
  if (B.src(img) != obj_map[static_cast<std::size_t>(A.src(fresh))] ||
      B.tgt(img) != obj_map[static_cast<std::size_t>(A.tgt(fresh))])
    return false;
  const int d = A.dagger[m];
  if (mor_map[static_cast<std::size_t>(d)] >= 0 &&
      mor_map[static_cast<std::size_t>(d)] != B.dagger[static_cast<std::size_t>(img)])
    return false;
  const int n = static_cast<int>(A.morphisms.size());
  for (int o = 0; o < n; ++o) {
    const int oi = mor_map[static_cast<std::size_t>(o)];
    if (oi < 0) continue;
    if (A.composable(fresh, o)) {
      const int c = A.compose[m][static_cast<std::size_t>(o)];
      const int ci = mor_map[static_cast<std::size_t>(c)];
      if (ci >= 0 && B.compose[static_cast<std::size_t>(img)][static_cast<std::size_t>(oi)] != ci)
        return false;
    }
    if (A.composable(o, fresh)) {
      const int c = A.compose[static_cast<std::size_t>(o)][m];
      const int ci = mor_map[static_cast<std::size_t>(c)];
      if (ci >= 0 && B.compose[static_cast<std::size_t>(oi)][static_cast<std::size_t>(img)] != ci)
        return false;
    }
  }
  return true;
}

}  // namespace

DaggerFunctor validate_functor_indexed(const FinDaggerCategory& src,
                                       const FinDaggerCategory& tgt,
                                       std::vector<int> obj_map,
                                       std::vector<int> mor_map) {
  const int n_obj = static_cast<int>(src.objects.size());
  const int n_mor = static_cast<int>(src.morphisms.size());
  if (static_cast<int>(obj_map.size()) != n_obj ||
      static_cast<int>(mor_map.size()) != n_mor)
    throw ValidationError(ErrKind::DanglingReference, "incomplete functor maps");
  for (int a = 0; a < n_obj; ++a)
    if (obj_map[static_cast<std::size_t>(a)] < 0 ||
        obj_map[static_cast<std::size_t>(a)] >= static_cast<int>(tgt.objects.size()))
      throw ValidationError(ErrKind::DanglingReference,
                            "object image of " + src.objects[static_cast<std::size_t>(a)]);
  for (int m = 0; m < n_mor; ++m) {
    const int i = mor_map[static_cast<std::size_t>(m)];
    if (i < 0 || i >= static_cast<int>(tgt.morphisms.size()))
      throw ValidationError(ErrKind::DanglingReference,
                            "morphism image of " + src.mid(m));
    if (tgt.src(i) != obj_map[static_cast<std::size_t>(src.src(m))] ||
        tgt.tgt(i) != obj_map[static_cast<std::size_t>(src.tgt(m))])
      throw ValidationError(ErrKind::NotFunctorial,
                            "endpoints of " + src.mid(m) + " -> " + tgt.mid(i));
  }
  for (int a = 0; a < n_obj; ++a) {
    const int i = src.identity[static_cast<std::size_t>(a)];
    const int want = tgt.identity[static_cast<std::size_t>(obj_map[static_cast<std::size_t>(a)])];
    if (mor_map[static_cast<std::size_t>(i)] != want)
      throw ValidationError(ErrKind::NotFunctorial,
                            "identity of " + src.objects[static_cast<std::size_t>(a)]);
  }
  for (int g = 0; g < n_mor; ++g)
    for (int f = 0; f < n_mor; ++f) {
      if (!src.composable(g, f)) continue;
      const int gf = src.compose[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
      if (tgt.compose[static_cast<std::size_t>(mor_map[static_cast<std::size_t>(g)])]
                     [static_cast<std::size_t>(mor_map[static_cast<std::size_t>(f)])] !=
          mor_map[static_cast<std::size_t>(gf)])
        throw ValidationError(ErrKind::NotFunctorial,
                              pair_msg(src.mid(g), src.mid(f)));
    }
  for (int m = 0; m < n_mor; ++m)
    if (mor_map[static_cast<std::size_t>(src.dagger[static_cast<std::size_t>(m)])] !=
        tgt.dagger[static_cast<std::size_t>(mor_map[static_cast<std::size_t>(m)])])
      throw ValidationError(ErrKind::NotDaggerPreserving, src.mid(m));

  DaggerFunctor F;
  F.source = src;
  F.target = tgt;
  F.obj_map = std::move(obj_map);
  F.mor_map = std::move(mor_map);
  return F;
}

DaggerFunctor validate_functor(
    const FinDaggerCategory& src, const FinDaggerCategory& tgt,
    const std::map<std::string, std::string>& objects,
    const std::map<std::string, std::string>& morphisms) {
  std::vector<int> obj_map(src.objects.size(), -1);
  std::vector<int> mor_map(src.morphisms.size(), -1);
  for (const auto& [from, to] : objects) {
    const int a = src.object_index(from);
    const int b = tgt.object_index(to);
    if (a < 0 || b < 0)
      throw ValidationError(ErrKind::DanglingReference, pair_msg(from, to));
    obj_map[static_cast<std::size_t>(a)] = b;
  }
  for (const auto& [from, to] : morphisms) {
    const int m = src.morphism_index(from);
    const int i = tgt.morphism_index(to);
    if (m < 0 || i < 0)
      throw ValidationError(ErrKind::DanglingReference, pair_msg(from, to));
    mor_map[static_cast<std::size_t>(m)] = i;
  }
  return validate_functor_indexed(src, tgt, std::move(obj_map), std::move(mor_map));
}

DaggerFunctor identity_functor(const FinDaggerCategory& c) {
  DaggerFunctor F;
  F.source = c;
  F.target = c;
  F.obj_map.resize(c.objects.size());
  F.mor_map.resize(c.morphisms.size());
  for (std::size_t i = 0; i < F.obj_map.size(); ++i) F.obj_map[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < F.mor_map.size(); ++i) F.mor_map[i] = static_cast<int>(i);
  return F;
}

DaggerFunctor functor_compose(const DaggerFunctor& G, const DaggerFunctor& F) {
  if (!(F.target == G.source))
    throw ValidationError(ErrKind::WrongEndpoints, "functor composition");
  DaggerFunctor H;
  H.source = F.source;
  H.target = G.target;
  H.obj_map.resize(F.obj_map.size());
  H.mor_map.resize(F.mor_map.size());
  for (std::size_t a = 0; a < F.obj_map.size(); ++a)
    H.obj_map[a] = G.obj_map[static_cast<std::size_t>(F.obj_map[a])];
  for (std::size_t m = 0; m < F.mor_map.size(); ++m)
    H.mor_map[m] = G.mor_map[static_cast<std::size_t>(F.mor_map[m])];
  return H;
}

NatTrans validate_nat(const DaggerFunctor& F, const DaggerFunctor& G,
                      const std::vector<int>& components) {
  if (!(F.source == G.source) || !(F.target == G.target))
    throw ValidationError(ErrKind::WrongEndpoints, "natural transformation frame");
  const FinDaggerCategory& A = F.source;
  const FinDaggerCategory& B = F.target;
  if (components.size() != A.objects.size())
    throw ValidationError(ErrKind::DanglingReference, "component count");
  for (std::size_t a = 0; a < components.size(); ++a) {
    const int c = components[a];
    if (c < 0 || c >= static_cast<int>(B.morphisms.size()))
      throw ValidationError(ErrKind::DanglingReference, "component at " + A.objects[a]);
    if (B.src(c) != F.obj_map[a] || B.tgt(c) != G.obj_map[a])
      throw ValidationError(ErrKind::WrongEndpoints, "component at " + A.objects[a]);
  }
  for (int f = 0; f < static_cast<int>(A.morphisms.size()); ++f) {
    const std::size_t sa = static_cast<std::size_t>(A.src(f));
    const std::size_t sb = static_cast<std::size_t>(A.tgt(f));
    const int lhs = B.comp(G.mor_map[static_cast<std::size_t>(f)], components[sa]);
    const int rhs = B.comp(components[sb], F.mor_map[static_cast<std::size_t>(f)]);
    if (lhs != rhs)
      throw ValidationError(ErrKind::NotNatural, A.mid(f));
  }
  NatTrans n;
  n.F = F;
  n.G = G;
  n.components = components;
  return n;
}

NatTrans identity_nat(const DaggerFunctor& F) {
  std::vector<int> comps(F.source.objects.size());
  for (std::size_t a = 0; a < comps.size(); ++a)
    comps[a] = F.target.identity[static_cast<std::size_t>(F.obj_map[a])];
  NatTrans n;
  n.F = F;
  n.G = F;
  n.components = std::move(comps);
  return n;
}

NatTrans nat_vcomp(const NatTrans& b, const NatTrans& a) {
  if (!a.G.same_maps(b.F))
    throw ValidationError(ErrKind::NotComposable, "vertical composition frame");
  std::vector<int> comps(a.components.size());
  for (std::size_t i = 0; i < comps.size(); ++i)
    comps[i] = a.F.target.comp(b.components[i], a.components[i]);
  NatTrans r;
  r.F = a.F;
  r.G = b.G;
  r.components = std::move(comps);
  return r;
}

NatTrans nat_hcomp(const NatTrans& s, const NatTrans& t) {
  // s: H => K (functors B -> C), t: F => G (functors A -> B).
  const DaggerFunctor& H = s.F;
  const DaggerFunctor& K = s.G;
  const DaggerFunctor& F = t.F;
  const DaggerFunctor& G = t.G;
  if (!(F.target == H.source))
    throw ValidationError(ErrKind::NotComposable, "horizontal composition frame");
  const FinDaggerCategory& C = H.target;
  std::vector<int> comps(F.source.objects.size());
  for (std::size_t a = 0; a < comps.size(); ++a) {
    const int ta = t.components[a];
    const int left = C.comp(s.components[static_cast<std::size_t>(G.obj_map[a])],
                            H.mor_map[static_cast<std::size_t>(ta)]);
    const int right = C.comp(K.mor_map[static_cast<std::size_t>(ta)],
                             s.components[static_cast<std::size_t>(F.obj_map[a])]);
    if (left != right)
      throw ValidationError(ErrKind::NotNatural, "interchange at " + F.source.objects[a]);
    comps[a] = left;
  }
  NatTrans r;
  r.F = functor_compose(H, F);
  r.G = functor_compose(K, G);
  r.components = std::move(comps);
  return r;
}

NatTrans nat_dagger(const NatTrans& a) {
  std::vector<int> comps(a.components.size());
  for (std::size_t i = 0; i < comps.size(); ++i)
    comps[i] = a.F.target.dagger[static_cast<std::size_t>(a.components[i])];
  NatTrans r;
  r.F = a.G;
  r.G = a.F;
  r.components = std::move(comps);
  return r;
}

NatTrans whisker_left(const DaggerFunctor& H, const NatTrans& a) {
  if (!(a.F.target == H.source))
    throw ValidationError(ErrKind::NotComposable, "left whisker frame");
  std::vector<int> comps(a.components.size());
  for (std::size_t i = 0; i < comps.size(); ++i)
    comps[i] = H.mor_map[static_cast<std::size_t>(a.components[i])];
  NatTrans r;
  r.F = functor_compose(H, a.F);
  r.G = functor_compose(H, a.G);
  r.components = std::move(comps);
  return r;
}

NatTrans whisker_right(const NatTrans& b, const DaggerFunctor& K) {
  if (!(K.target == b.F.source))
    throw ValidationError(ErrKind::NotComposable, "right whisker frame");
  std::vector<int> comps(K.source.objects.size());
  for (std::size_t a = 0; a < comps.size(); ++a)
    comps[a] = b.components[static_cast<std::size_t>(K.obj_map[a])];
  NatTrans r;
  r.F = functor_compose(b.F, K);
  r.G = functor_compose(b.G, K);
  r.components = std::move(comps);
  return r;
}

std::vector<DaggerFunctor> all_dagger_functors(const FinDaggerCategory& A,
                                               const FinDaggerCategory& B,
                                               std::uint64_t cap) {
  const int n_obj_a = static_cast<int>(A.objects.size());
  const int n_obj_b = static_cast<int>(B.objects.size());
  const int n_mor_a = static_cast<int>(A.morphisms.size());
  const auto plan = derivation_plan(A);

  std::vector<DaggerFunctor> out;
  std::vector<int> obj_map(static_cast<std::size_t>(n_obj_a), 0);
  std::vector<int> mor_map;
  std::uint64_t nodes = 0;

  auto bump = [&] {
    if (++nodes > cap) throw SearchSpaceTooLarge(cap);
  };

  // Extends mor_map along forced plan steps starting at `step`; returns the
  // index of the next generator step (or plan size) or -1 on contradiction.
  // `touched` collects morphisms assigned here so they can be rolled back.
  auto extend_forced = [&](std::size_t step, std::vector<int>& touched) -> std::int64_t {
    for (; step < plan.size(); ++step) {
      const PlanStep& ps = plan[step];
      int img = -1;
      switch (ps.kind) {
        case PlanStep::Identity:
          img = B.identity[static_cast<std::size_t>(obj_map[static_cast<std::size_t>(ps.arg1)])];
          break;
        case PlanStep::Dagger:
          img = B.dagger[static_cast<size_t>(mor_map[static_cast<std::size_t>(ps.arg1)])];
          break;
        case PlanStep::Composite: {
          const int gi = mor_map[static_cast<std::size_t>(ps.arg1)];
          const int fi = mor_map[static_cast<std::size_t>(ps.arg2)];
          if (!B.composable(gi, fi)) return -1;
          img = B.compose[static_cast<std::size_t>(gi)][static_cast<std::size_t>(fi)];
          break;
        }
        case PlanStep::Generator:
          return static_cast<std::int64_t>(step);
      }
      mor_map[static_cast<std::size_t>(ps.mor)] = img;
      touched.push_back(ps.mor);
      if (!consistent_after(A, B, obj_map, mor_map, ps.mor)) return -1;
    }
    return static_cast<std::int64_t>(plan.size());
  };

  std::function<void(std::size_t)> search = [&](std::size_t step) {
    std::vector<int> touched;
    const std::int64_t next = extend_forced(step, touched);
    if (next < 0) {
      for (int m : touched) mor_map[static_cast<std::size_t>(m)] = -1;
      return;
    }
    if (static_cast<std::size_t>(next) == plan.size()) {
      out.push_back(validate_functor_indexed(A, B, obj_map, mor_map));
      for (int m : touched) mor_map[static_cast<std::size_t>(m)] = -1;
      return;
    }
    const PlanStep& gen = plan[static_cast<std::size_t>(next)];
    const int sa = obj_map[static_cast<std::size_t>(A.src(gen.mor))];
    const int ta = obj_map[static_cast<std::size_t>(A.tgt(gen.mor))];
    for (int cand = 0; cand < static_cast<int>(B.morphisms.size()); ++cand) {
      if (B.src(cand) != sa || B.tgt(cand) != ta) continue;
      bump();
      mor_map[static_cast<std::size_t>(gen.mor)] = cand;
      if (consistent_after(A, B, obj_map, mor_map, gen.mor))
        search(static_cast<std::size_t>(next) + 1);
      mor_map[static_cast<std::size_t>(gen.mor)] = -1;
    }
    for (int m : touched) mor_map[static_cast<std::size_t>(m)] = -1;
  };

  std::function<void(int)> pick_obj = [&](int a) {
    if (a == n_obj_a) {
      mor_map.assign(static_cast<std::size_t>(n_mor_a), -1);
      search(0);
      return;
    }
    for (int b = 0; b < n_obj_b; ++b) {
      bump();
      obj_map[static_cast<std::size_t>(a)] = b;
      pick_obj(a + 1);
    }
  };
  if (n_obj_a == 0) {
    mor_map.clear();
    out.push_back(validate_functor_indexed(A, B, obj_map, mor_map));
  } else {
    pick_obj(0);
  }
  return out;
}

std::vector<NatTrans> all_nats(const DaggerFunctor& F, const DaggerFunctor& G) {
  const FinDaggerCategory& A = F.source;
  const FinDaggerCategory& B = F.target;
  const int n_obj = static_cast<int>(A.objects.size());
  std::vector<std::vector<int>> candidates(static_cast<std::size_t>(n_obj));
  for (int a = 0; a < n_obj; ++a)
    candidates[static_cast<std::size_t>(a)] =
        B.hom(F.obj_map[static_cast<std::size_t>(a)], G.obj_map[static_cast<std::size_t>(a)]);

  std::vector<NatTrans> out;
  std::vector<int> comps(static_cast<std::size_t>(n_obj), -1);
  std::function<void(int)> rec = [&](int a) {
    if (a == n_obj) {
      for (int f = 0; f < static_cast<int>(A.morphisms.size()); ++f) {
        const std::size_t sa = static_cast<std::size_t>(A.src(f));
        const std::size_t sb = static_cast<std::size_t>(A.tgt(f));
        if (B.comp(G.mor_map[static_cast<std::size_t>(f)], comps[sa]) !=
            B.comp(comps[sb], F.mor_map[static_cast<std::size_t>(f)]))
          return;
      }
      NatTrans n;
      n.F = F;
      n.G = G;
      n.components = comps;
      out.push_back(std::move(n));
      return;
    }
    for (int c : candidates[static_cast<std::size_t>(a)]) {
      comps[static_cast<std::size_t>(a)] = c;
      rec(a + 1);
    }
  };
  rec(0);
  return out;
}

int HomCategoryResult::functor_index(const DaggerFunctor& F) const {
  for (std::size_t i = 0; i < functors.size(); ++i)
    if (functors[i].same_maps(F)) return static_cast<int>(i);
  return -1;
}

int HomCategoryResult::nat_index(const NatTrans& n) const {
  for (std::size_t i = 0; i < nats.size(); ++i)
    if (nats[i].same_components(n)) return static_cast<int>(i);
  return -1;
}

HomCategoryResult hom_category(const FinDaggerCategory& A,
                               const FinDaggerCategory& D, std::uint64_t cap) {
  HomCategoryResult res;
  res.functors = all_dagger_functors(A, D, cap);

  auto pad = [](int i, std::size_t total) {
    std::string s = std::to_string(i);
    const std::size_t width = std::to_string(total == 0 ? 0 : total - 1).size();
    while (s.size() < width) s.insert(s.begin(), '0');
    return s;
  };

  std::vector<std::pair<int, int>> frames;  // nat index -> (F, G)
  for (std::size_t i = 0; i < res.functors.size(); ++i)
    for (std::size_t j = 0; j < res.functors.size(); ++j) {
      auto ns = all_nats(res.functors[i], res.functors[j]);
      for (auto& n : ns) {
        res.nats.push_back(std::move(n));
        frames.push_back({static_cast<int>(i), static_cast<int>(j)});
      }
    }

  CategoryDescription d;
  d.name = "hom(" + A.name + ", " + D.name + ")";
  for (std::size_t i = 0; i < res.functors.size(); ++i)
    d.objects.push_back("F" + pad(static_cast<int>(i), res.functors.size()));
  for (std::size_t k = 0; k < res.nats.size(); ++k)
    d.morphisms.push_back({"n" + pad(static_cast<int>(k), res.nats.size()),
                           d.objects[static_cast<std::size_t>(frames[k].first)],
                           d.objects[static_cast<std::size_t>(frames[k].second)]});

  auto find_nat = [&](const NatTrans& n) {
    const int k = res.nat_index(n);
    if (k < 0)
      throw ValidationError(ErrKind::InternalClosureFailure,
                            "natural transformation escapes enumeration");
    return static_cast<std::size_t>(k);
  };

  for (std::size_t i = 0; i < res.functors.size(); ++i) {
    const auto idn = identity_nat(res.functors[i]);
    d.identities[d.objects[i]] = d.morphisms[find_nat(idn)].id;
  }
  for (std::size_t k = 0; k < res.nats.size(); ++k) {
    d.dagger[d.morphisms[k].id] = d.morphisms[find_nat(nat_dagger(res.nats[k]))].id;
    for (std::size_t l = 0; l < res.nats.size(); ++l) {
      if (frames[l].second != frames[k].first) continue;
      const auto v = nat_vcomp(res.nats[k], res.nats[l]);
      d.composition.push_back({d.morphisms[k].id, d.morphisms[l].id,
                               d.morphisms[find_nat(v)].id});
    }
  }
  res.cat = validate_category(d);
  return res;
}

}  // namespace daggercat
