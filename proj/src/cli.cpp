#include <chrono>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

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

namespace daggercat::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void input_fail(const std::string& what) {
  throw ValidationError(ErrKind::DanglingReference, what);
}

// Reads one input file, records (path, hash) in the report, parses JSON.
json load_input(io::Report& rep, const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) input_fail("cannot read " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  const std::string bytes = buf.str();
  rep.inputs.emplace_back(path, io::fnv1a(bytes));
  try {
    return json::parse(bytes);
  } catch (const json::parse_error& e) {
    input_fail(path + ": " + e.what());
  }
}

FrobeniusMonad monad_of_json(const json& j) {
  const io::MonadInput in = io::parse_monad(j);
  FinDaggerCategory base = validate_category(in.category);
  DaggerFunctor T =
      validate_functor(base, base, in.functor_objects, in.functor_morphisms);
  auto components = [&](const std::map<std::string, std::string>& tab,
                        const char* what) {
    std::vector<int> v;
    v.reserve(base.objects.size());
    for (const auto& obj : base.objects) {
      auto it = tab.find(obj);
      if (it == tab.end())
        input_fail(std::string(what) + " has no component at object " + obj);
      const int m = base.morphism_index(it->second);
      if (m < 0)
        input_fail(std::string(what) + " at " + obj + ": unknown morphism " +
                   it->second);
      v.push_back(m);
    }
    return v;
  };
  const std::vector<int> mu = components(in.mu, "mu");
  const std::vector<int> eta = components(in.eta, "eta");
  return validate_monad(base, T, mu, eta);
}

oracle::OracleMonad oracle_monad_of(const FrobeniusMonad& m) {
  oracle::OracleMonad om;
  om.T = {m.T.obj_map, m.T.mor_map};
  om.mu = m.mu.components;
  om.eta = m.eta.components;
  om.frobenius = m.frobenius;
  return om;
}

FinDagger2Category two_category_of_json(const json& j) {
  FinDagger2Category K = build_2category(io::parse_2category(j));
  validate_2category(K);
  return K;
}

int obj_in(const FinDaggerCategory& h, const std::string& id,
           const std::string& what) {
  const int i = h.object_index(id);
  if (i < 0) input_fail(what + ": unknown 1-cell " + id + " in " + h.name);
  return i;
}

int mor_in(const FinDaggerCategory& h, const std::string& id,
           const std::string& what) {
  const int i = h.morphism_index(id);
  if (i < 0) input_fail(what + ": unknown 2-cell " + id + " in " + h.name);
  return i;
}

int cell0_in(const FinDagger2Category& K, const std::string& id,
             const std::string& what) {
  const int i = K.cell0_index(id);
  if (i < 0) input_fail(what + ": unknown 0-cell " + id);
  return i;
}

std::string want_string(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_string())
    input_fail(std::string("expected string field '") + key + "'");
  return j.at(key).get<std::string>();
}

const json& want_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    input_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

Monad2 monad2_of(const FinDagger2Category& K, const json& j,
                 const std::string& what) {
  Monad2 m;
  m.cell0 = cell0_in(K, want_string(j, "cell0"), what);
  const FinDaggerCategory& h = K.hom(m.cell0, m.cell0);
  m.t = obj_in(h, want_string(j, "t"), what);
  m.mu = mor_in(h, want_string(j, "mu"), what);
  m.eta = mor_in(h, want_string(j, "eta"), what);
  return m;
}

FEMObjectWitness witness_of(const FinDagger2Category& K, int D, const json& j,
                            const std::string& what) {
  FEMObjectWitness w;
  w.E = cell0_in(K, want_string(j, "E"), what);
  w.u = obj_in(K.hom(w.E, D), want_string(j, "u"), what);
  w.xi = mor_in(K.hom(w.E, D), want_string(j, "xi"), what);
  w.f_t = obj_in(K.hom(D, w.E), want_string(j, "f_t"), what);
  w.eps_t = mor_in(K.hom(w.E, w.E), want_string(j, "eps_t"), what);
  return w;
}

Adjunction2 adjunction2_of(const FinDagger2Category& K, const json& j,
                           const std::string& what) {
  Adjunction2 a;
  a.a0 = cell0_in(K, want_string(j, "a0"), what);
  a.b0 = cell0_in(K, want_string(j, "b0"), what);
  a.f = obj_in(K.hom(a.a0, a.b0), want_string(j, "f"), what);
  a.u = obj_in(K.hom(a.b0, a.a0), want_string(j, "u"), what);
  a.eta = mor_in(K.hom(a.a0, a.a0), want_string(j, "eta"), what);
  a.eps = mor_in(K.hom(a.b0, a.b0), want_string(j, "eps"), what);
  return a;
}

struct LaxBundle {
  FinDagger2Category K;
  FinDagger2Category L;
  DaggerLaxFunctor F;
};

// Resolves a parsed lax functor description into dense index tables.
// `b` is filled in place so the source/target pointers stay valid.
void resolve_lax(const io::LaxFunctorInput& in, LaxBundle& b) {
  b.K = build_2category(in.source);
  validate_2category(b.K);
  b.L = build_2category(in.target);
  validate_2category(b.L);
  const int n = b.K.n0();
  b.F.source = &b.K;
  b.F.target = &b.L;

  b.F.map0.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    auto it = in.map0.find(b.K.cells0[static_cast<std::size_t>(a)]);
    if (it == in.map0.end())
      input_fail("map0 missing 0-cell " +
                 b.K.cells0[static_cast<std::size_t>(a)]);
    b.F.map0[static_cast<std::size_t>(a)] = cell0_in(b.L, it->second, "map0");
  }

  b.F.map1.assign(static_cast<std::size_t>(n * n), {});
  b.F.map2.assign(static_cast<std::size_t>(n * n), {});
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      const FinDaggerCategory& hk = b.K.hom(a, c);
      const FinDaggerCategory& hl = b.L.hom(b.F.map0[static_cast<std::size_t>(a)],
                                            b.F.map0[static_cast<std::size_t>(c)]);
      const std::string key = b.K.cells0[static_cast<std::size_t>(a)] + "|" +
                              b.K.cells0[static_cast<std::size_t>(c)];
      auto it = in.hom_maps.find(key);
      if (it == in.hom_maps.end()) input_fail("hom_maps missing " + key);
      auto& omap = b.F.map1[static_cast<std::size_t>(a * n + c)];
      auto& mmap = b.F.map2[static_cast<std::size_t>(a * n + c)];
      for (const auto& obj : hk.objects) {
        auto oi = it->second.first.find(obj);
        if (oi == it->second.first.end())
          input_fail("hom_maps[" + key + "] missing 1-cell " + obj);
        omap.push_back(obj_in(hl, oi->second, "hom_maps[" + key + "]"));
      }
      for (const auto& mor : hk.morphisms) {
        auto mi = it->second.second.find(mor.id);
        if (mi == it->second.second.end())
          input_fail("hom_maps[" + key + "] missing 2-cell " + mor.id);
        mmap.push_back(mor_in(hl, mi->second, "hom_maps[" + key + "]"));
      }
    }
  }

  b.F.gamma.assign(static_cast<std::size_t>(n * n * n), {});
  for (int a = 0; a < n; ++a)
    for (int bb = 0; bb < n; ++bb)
      for (int c = 0; c < n; ++c)
        b.F.gamma[static_cast<std::size_t>(b.K.tidx(a, bb, c))].assign(
            b.K.hom(bb, c).objects.size() * b.K.hom(a, bb).objects.size(), -1);
  for (const auto& row : in.gamma) {
    const int a = cell0_in(b.K, row[0], "gamma");
    const int bb = cell0_in(b.K, row[1], "gamma");
    const int c = cell0_in(b.K, row[2], "gamma");
    const int g = obj_in(b.K.hom(bb, c), row[3], "gamma");
    const int f = obj_in(b.K.hom(a, bb), row[4], "gamma");
    const FinDaggerCategory& hl = b.L.hom(b.F.map0[static_cast<std::size_t>(a)],
                                          b.F.map0[static_cast<std::size_t>(c)]);
    const int r = mor_in(hl, row[5], "gamma");
    const std::size_t slot = static_cast<std::size_t>(
        g * static_cast<int>(b.K.hom(a, bb).objects.size()) + f);
    auto& tab = b.F.gamma[static_cast<std::size_t>(b.K.tidx(a, bb, c))];
    if (tab[slot] != -1)
      throw ValidationError(ErrKind::DuplicateId,
                            "gamma listed twice for (" + row[0] + "," +
                                row[1] + "," + row[2] + "," + row[3] + "," +
                                row[4] + ")");
    tab[slot] = r;
  }
  for (int a = 0; a < n; ++a)
    for (int bb = 0; bb < n; ++bb)
      for (int c = 0; c < n; ++c) {
        const auto& tab =
            b.F.gamma[static_cast<std::size_t>(b.K.tidx(a, bb, c))];
        for (std::size_t s = 0; s < tab.size(); ++s)
          if (tab[s] == -1)
            throw ValidationError(
                ErrKind::MissingComposite,
                "gamma missing an entry over (" +
                    b.K.cells0[static_cast<std::size_t>(a)] + "," +
                    b.K.cells0[static_cast<std::size_t>(bb)] + "," +
                    b.K.cells0[static_cast<std::size_t>(c)] + ")");
      }

  b.F.delta.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    const std::string& id = b.K.cells0[static_cast<std::size_t>(a)];
    auto it = in.delta.find(id);
    if (it == in.delta.end()) input_fail("delta missing 0-cell " + id);
    const int fa = b.F.map0[static_cast<std::size_t>(a)];
    b.F.delta[static_cast<std::size_t>(a)] =
        mor_in(b.L.hom(fa, fa), it->second, "delta");
  }
}

ordered_json two_category_to_json(const FinDagger2Category& K) {
  ordered_json j;
  j["name"] = K.name;
  j["cells0"] = K.cells0;
  j["homs"] = ordered_json::object();
  const int n = K.n0();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      j["homs"][K.cells0[static_cast<std::size_t>(a)] + "|" +
                K.cells0[static_cast<std::size_t>(b)]] =
          io::category_to_json(K.hom(a, b));
  j["id1"] = ordered_json::object();
  for (int a = 0; a < n; ++a)
    j["id1"][K.cells0[static_cast<std::size_t>(a)]] =
        K.hom(a, a).objects[static_cast<std::size_t>(K.id1(a))];
  auto rows = [&](auto&& value_of, bool x_is_mor, bool y_is_mor) {
    ordered_json arr = ordered_json::array();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          const FinDaggerCategory& hab = K.hom(a, b);
          const FinDaggerCategory& hbc = K.hom(b, c);
          const FinDaggerCategory& hac = K.hom(a, c);
          const int nx = x_is_mor ? static_cast<int>(hbc.morphisms.size())
                                  : static_cast<int>(hbc.objects.size());
          const int ny = y_is_mor ? static_cast<int>(hab.morphisms.size())
                                  : static_cast<int>(hab.objects.size());
          for (int x = 0; x < nx; ++x)
            for (int y = 0; y < ny; ++y) {
              const auto [res, res_is_mor] = value_of(a, b, c, x, y);
              arr.push_back(
                  {K.cells0[static_cast<std::size_t>(a)],
                   K.cells0[static_cast<std::size_t>(b)],
                   K.cells0[static_cast<std::size_t>(c)],
                   x_is_mor ? hbc.mid(x)
                            : hbc.objects[static_cast<std::size_t>(x)],
                   y_is_mor ? hab.mid(y)
                            : hab.objects[static_cast<std::size_t>(y)],
                   res_is_mor ? hac.mid(res)
                              : hac.objects[static_cast<std::size_t>(res)]});
            }
        }
    return arr;
  };
  j["comp1"] = rows(
      [&](int a, int b, int c, int g, int f) {
        return std::pair<int, bool>(K.comp1(a, b, c, g, f), false);
      },
      false, false);
  j["lwhisker"] = rows(
      [&](int a, int b, int c, int h, int al) {
        return std::pair<int, bool>(K.lwhisk(a, b, c, h, al), true);
      },
      false, true);
  j["rwhisker"] = rows(
      [&](int a, int b, int c, int be, int f) {
        return std::pair<int, bool>(K.rwhisk(a, b, c, be, f), true);
      },
      true, false);
  if (K.has_explicit_hcomp())
    j["hcomp"] = rows(
        [&](int a, int b, int c, int be, int al) {
          return std::pair<int, bool>(K.hcomp(a, b, c, be, al), true);
        },
        true, true);
  return j;
}

std::string frobenius_witness(const FrobeniusMonad& m) {
  const FinDaggerCategory& C = m.base;
  for (std::size_t d = 0; d < C.objects.size(); ++d) {
    const int td = m.T.obj_map[d];
    const int mu_d = m.mu.components[d];
    const int mu_td = m.mu.components[static_cast<std::size_t>(td)];
    const int lhs =
        C.comp(mu_td, m.T.mor_map[static_cast<std::size_t>(
                   C.dagger[static_cast<std::size_t>(mu_d)])]);
    const int rhs = C.comp(m.T.mor_map[static_cast<std::size_t>(mu_d)],
                           C.dagger[static_cast<std::size_t>(mu_td)]);
    if (lhs != rhs)
      return "Frobenius law fails at object " + C.objects[d] + ": " +
             C.mid(lhs) + " != " + C.mid(rhs);
  }
  return "Frobenius law holds";
}

std::string pairs_dagger_witness(const FinDagger2Category& K, const Monad2& s,
                                 const FEMObjectWitness& ws, const Monad2& t,
                                 const FEMObjectWitness& wt,
                                 const PairsCorrespondence& pc) {
  const FinDaggerCategory& homA = K.hom(s.cell0, t.cell0);
  const FinDaggerCategory& homE = K.hom(ws.E, wt.E);
  auto find = [&](int from, int to, int alpha) {
    for (std::size_t k = 0; k < pc.cell_pairs.size(); ++k)
      if (pc.cell_pairs[k][0] == from && pc.cell_pairs[k][1] == to &&
          pc.cell_pairs[k][2] == alpha)
        return static_cast<int>(k);
    return -1;
  };
  for (std::size_t k = 0; k < pc.cell_pairs.size(); ++k) {
    const auto& cp = pc.cell_pairs[k];
    const int dalpha = homA.dagger[static_cast<std::size_t>(cp[2])];
    const int kk = find(cp[1], cp[0], dalpha);
    if (kk < 0)
      return "dagger of 2-cell " + homA.mid(cp[2]) +
             " has no image in the correspondence";
    const int expect = homE.dagger[static_cast<std::size_t>(pc.abar[k])];
    if (pc.abar[static_cast<std::size_t>(kk)] != expect)
      return "correspondence breaks the dagger at 2-cell " + homA.mid(cp[2]) +
             ": " + homA.mid(dalpha) + " maps to " +
             homE.mid(pc.abar[static_cast<std::size_t>(kk)]) + ", expected " +
             homE.mid(expect);
  }
  return "dagger preserved";
}

ordered_json enumeration_to_json(const oracle::EnumerationReport& r) {
  return r.to_json();
}

struct AdjChoice {
  FrobeniusMonad m;
  FEMCategoryResult fem;
  KleisliResult kl;
  bool use_kleisli = true;

  const Adjunction& adj() const { return use_kleisli ? kl.adj : fem.adj; }
};

AdjChoice adjunction_choice(const json& monad_json, const std::string& kind) {
  AdjChoice ch;
  ch.m = monad_of_json(monad_json);
  ch.fem = build_fem_category(ch.m);
  ch.kl = build_kleisli(ch.m);
  if (kind == "kleisli") {
    ch.use_kleisli = true;
  } else if (kind == "fem") {
    ch.use_kleisli = false;
  } else {
    input_fail("--adjunction must be 'kleisli' or 'fem', got " + kind);
  }
  return ch;
}

ordered_json functor_to_json(const DaggerFunctor& N) {
  ordered_json j;
  j["objects"] = ordered_json::object();
  for (std::size_t i = 0; i < N.source.objects.size(); ++i)
    j["objects"][N.source.objects[i]] =
        N.target.objects[static_cast<std::size_t>(N.obj_map[i])];
  j["morphisms"] = ordered_json::object();
  for (std::size_t i = 0; i < N.source.morphisms.size(); ++i)
    j["morphisms"][N.source.mid(static_cast<int>(i))] =
        N.target.mid(N.mor_map[i]);
  return j;
}

struct Options {
  std::uint64_t cap = kDefaultSearchCap;
  int parallel = 1;
  std::string golden_dir = "tests/golden";
  bool no_timing = false;

  std::string file1;
  std::string file2;
  std::string arg_category;
  std::string arg_monad;
  std::string carrier;
  std::string delta;
  std::string adjunction = "kleisli";
};

// Each handler fills verdict/witnesses/result and returns the exit code.
int dispatch(const std::string& cmd, const Options& opt, io::Report& rep) {
  if (cmd == "validate category") {
    const FinDaggerCategory C =
        validate_category(io::parse_category(load_input(rep, opt.file1)));
    ordered_json r;
    r["name"] = C.name;
    r["objects"] = C.objects.size();
    r["morphisms"] = C.morphisms.size();
    int unitaries = 0;
    for (std::size_t m = 0; m < C.morphisms.size(); ++m)
      if (is_unitary(C, static_cast<int>(m))) ++unitaries;
    r["unitary_morphisms"] = unitaries;
    rep.result = r;
    return 0;
  }

  if (cmd == "validate functor") {
    const io::FunctorInput in = io::parse_functor(load_input(rep, opt.file1));
    const FinDaggerCategory src = validate_category(in.source);
    const FinDaggerCategory tgt = validate_category(in.target);
    validate_functor(src, tgt, in.objects, in.morphisms);
    ordered_json r;
    r["source"] = src.name;
    r["target"] = tgt.name;
    rep.result = r;
    return 0;
  }

  if (cmd == "validate monad") {
    const FrobeniusMonad m = monad_of_json(load_input(rep, opt.file1));
    ordered_json r;
    r["base"] = m.base.name;
    r["frobenius"] = m.frobenius;
    rep.result = r;
    return 0;
  }

  if (cmd == "validate 2category") {
    const FinDagger2Category K =
        two_category_of_json(load_input(rep, opt.file1));
    ordered_json r;
    r["name"] = K.name;
    r["cells0"] = K.cells0;
    r["explicit_hcomp"] = K.has_explicit_hcomp();
    rep.result = r;
    return 0;
  }

  if (cmd == "validate laxfunctor") {
    const io::LaxFunctorInput in =
        io::parse_lax_functor(load_input(rep, opt.file1));
    LaxBundle b;
    resolve_lax(in, b);
    validate_lax_functor(b.K, b.L, b.F);
    ordered_json r;
    r["source"] = b.K.name;
    r["target"] = b.L.name;
    rep.result = r;
    return 0;
  }

  if (cmd == "enumerate monads") {
    const FinDaggerCategory C =
        validate_category(io::parse_category(load_input(rep, opt.file1)));
    rep.result = enumeration_to_json(oracle::monads_report(C, opt.cap));
    return 0;
  }

  if (cmd == "enumerate functors") {
    const FinDaggerCategory A =
        validate_category(io::parse_category(load_input(rep, opt.file1)));
    const FinDaggerCategory B =
        validate_category(io::parse_category(load_input(rep, opt.file2)));
    rep.result = enumeration_to_json(oracle::functors_report(A, B, opt.cap));
    return 0;
  }

  if (cmd == "enumerate algebras") {
    const FrobeniusMonad m = monad_of_json(load_input(rep, opt.file1));
    rep.result = enumeration_to_json(
        oracle::algebras_report(m.base, oracle_monad_of(m)));
    return 0;
  }

  if (cmd == "build fem") {
    const FrobeniusMonad m = monad_of_json(load_input(rep, opt.file1));
    const FEMCategoryResult fem = build_fem_category(m);
    ordered_json r;
    r["category"] = io::category_to_json(fem.fem_cat);
    r["algebras"] = ordered_json::array();
    for (const auto& alg : fem.algebras) {
      ordered_json a;
      a["carrier"] = m.base.objects[static_cast<std::size_t>(alg.carrier)];
      a["delta"] = m.base.mid(alg.structure);
      r["algebras"].push_back(a);
    }
    rep.result = r;
    return 0;
  }

  if (cmd == "build kleisli") {
    const FrobeniusMonad m = monad_of_json(load_input(rep, opt.file1));
    const KleisliResult kl = build_kleisli(m);
    ordered_json r;
    r["category"] = io::category_to_json(kl.kl_cat);
    rep.result = r;
    return 0;
  }

  if (cmd == "build dfmnd" || cmd == "build fk-completion" ||
      cmd == "build fem-completion") {
    const FinDagger2Category K =
        two_category_of_json(load_input(rep, opt.file1));
    ordered_json r;
    if (cmd == "build dfmnd") {
      const Dfmnd2Result d = build_dfmnd(K);
      r["two_category"] = two_category_to_json(d.cat);
    } else if (cmd == "build fk-completion") {
      const CompletionResult c = build_fk_completion(K);
      r["two_category"] = two_category_to_json(c.cat);
    } else {
      const CompletionResult c = build_fem_completion(K);
      r["two_category"] = two_category_to_json(c.cat);
    }
    rep.result = r;
    return 0;
  }

  if (cmd == "check frobenius") {
    const FrobeniusMonad m = monad_of_json(load_input(rep, opt.file1));
    ordered_json r;
    r["frobenius"] = m.frobenius;
    rep.result = r;
    if (!m.frobenius) {
      rep.witnesses.push_back(frobenius_witness(m));
      return 1;
    }
    return 0;
  }

  if (cmd == "check fem-algebra") {
    const FrobeniusMonad m = monad_of_json(load_input(rep, opt.file1));
    const int carrier = m.base.object_index(opt.carrier);
    if (carrier < 0) input_fail("unknown carrier object " + opt.carrier);
    const int delta = m.base.morphism_index(opt.delta);
    if (delta < 0) input_fail("unknown structure morphism " + opt.delta);
    const bool em = is_em_algebra(m, carrier, delta);
    const bool fem = em && is_fem_algebra(m, carrier, delta);
    ordered_json r;
    r["em"] = em;
    r["fem"] = fem;
    rep.result = r;
    if (!fem) {
      rep.witnesses.push_back(
          "(" + opt.carrier + ", " + opt.delta + ") fails the " +
          (em ? "Frobenius compatibility" : "algebra") + " law for " +
          m.base.name);
      return 1;
    }
    return 0;
  }

  if (cmd == "check th1") {
    const FinDaggerCategory A = validate_category(
        io::parse_category(load_input(rep, opt.arg_category)));
    const FrobeniusMonad m = monad_of_json(load_input(rep, opt.arg_monad));
    const CheckOutcome oc = check_fem_representability(A, m, opt.cap);
    if (!oc.ok) {
      rep.witnesses.push_back(oc.witness);
      return 1;
    }
    return 0;
  }

  if (cmd == "check fk-universal") {
    const FinDaggerCategory X = validate_category(
        io::parse_category(load_input(rep, opt.arg_category)));
    const FrobeniusMonad m = monad_of_json(load_input(rep, opt.arg_monad));
    const CheckOutcome oc = check_fk_universal(m, X, opt.cap);
    if (!oc.ok) {
      rep.witnesses.push_back(oc.witness);
      return 1;
    }
    return 0;
  }

  if (cmd == "check comparison") {
    const AdjChoice ch =
        adjunction_choice(load_input(rep, opt.arg_monad), opt.adjunction);
    const DaggerFunctor N = comparison_functor(ch.adj(), ch.fem);
    ordered_json r;
    r["comparison"] = functor_to_json(N);
    rep.result = r;
    return 0;
  }

  if (cmd == "check monadic") {
    const AdjChoice ch =
        adjunction_choice(load_input(rep, opt.arg_monad), opt.adjunction);
    const bool ok = is_monadic(ch.adj(), ch.fem, opt.cap);
    ordered_json r;
    r["monadic"] = ok;
    rep.result = r;
    if (!ok) {
      std::string objs;
      for (const auto& o : ch.fem.fem_cat.objects) {
        if (!objs.empty()) objs += ", ";
        objs += o;
      }
      rep.witnesses.push_back(
          "comparison into the algebra category (objects " + objs +
          ") admits no dagger quasi-inverse");
      return 1;
    }
    return 0;
  }

  if (cmd == "check fem-object") {
    const json j = load_input(rep, opt.file1);
    const FinDagger2Category K =
        two_category_of_json(want_field(j, "two_category"));
    const Monad2 m = monad2_of(K, want_field(j, "monad"), "monad");
    const FEMObjectWitness w =
        witness_of(K, m.cell0, want_field(j, "witness"), "witness");
    const CheckOutcome oc = fem_object_check(K, m, w);
    if (!oc.ok) {
      rep.witnesses.push_back(oc.witness);
      return 1;
    }
    return 0;
  }

  if (cmd == "check universal2") {
    const json j = load_input(rep, opt.file1);
    const FinDagger2Category K =
        two_category_of_json(want_field(j, "two_category"));
    const Adjunction2 adj =
        adjunction2_of(K, want_field(j, "adjunction"), "adjunction");
    const CheckOutcome adj_ok = check_adjunction2(K, adj);
    if (!adj_ok.ok) {
      rep.witnesses.push_back(adj_ok.witness);
      return 1;
    }
    const Monad2 m = monad_from_adjunction2(K, adj);
    const FEMObjectWitness w =
        witness_of(K, m.cell0, want_field(j, "witness"), "witness");
    const int n = universal2_check(K, adj, w);
    ordered_json r;
    r["mediating"] =
        K.hom(adj.b0, w.E).objects[static_cast<std::size_t>(n)];
    rep.result = r;
    return 0;
  }

  if (cmd == "check eta-commutation") {
    const json j = load_input(rep, opt.file1);
    const FinDagger2Category K =
        two_category_of_json(want_field(j, "two_category"));
    const Monad2 m = monad2_of(K, want_field(j, "monad"), "monad");
    const CheckOutcome oc = eta_commutation_check(K, m);
    if (!oc.ok) {
      rep.witnesses.push_back(oc.witness);
      return 1;
    }
    return 0;
  }

  if (cmd == "check pairs") {
    const json j = load_input(rep, opt.file1);
    const FinDagger2Category K =
        two_category_of_json(want_field(j, "two_category"));
    const Monad2 s =
        monad2_of(K, want_field(j, "source_monad"), "source_monad");
    const FEMObjectWitness ws = witness_of(
        K, s.cell0, want_field(j, "source_witness"), "source_witness");
    const Monad2 t =
        monad2_of(K, want_field(j, "target_monad"), "target_monad");
    const FEMObjectWitness wt = witness_of(
        K, t.cell0, want_field(j, "target_witness"), "target_witness");
    const PairsCorrespondence pc = fem_pairs_correspondence(K, s, ws, t, wt);
    ordered_json r;
    r["morphisms"] = pc.morphisms.size();
    r["cells"] = pc.cell_pairs.size();
    r["dagger_preserving"] = pc.dagger_preserving;
    rep.result = r;
    if (!pc.dagger_preserving) {
      rep.witnesses.push_back(pairs_dagger_witness(K, s, ws, t, wt, pc));
      return 1;
    }
    return 0;
  }

  if (cmd == "check lax-limit") {
    const json j = load_input(rep, opt.file1);
    const io::LaxFunctorInput in =
        io::parse_lax_functor(want_field(j, "lax_functor"));
    LaxBundle b;
    resolve_lax(in, b);
    validate_lax_functor(b.K, b.L, b.F);
    const int E = cell0_in(b.L, want_string(j, "E"), "E");
    const json& pj = want_field(j, "pi");
    const json& alphas = want_field(pj, "alpha");
    const json& taus = want_field(pj, "tau");
    DaggerLaxNat pi;
    const int n = b.K.n0();
    pi.alpha.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
      const std::string& id = b.K.cells0[static_cast<std::size_t>(a)];
      if (!alphas.contains(id)) input_fail("pi.alpha missing 0-cell " + id);
      pi.alpha[static_cast<std::size_t>(a)] =
          obj_in(b.L.hom(E, b.F.map0[static_cast<std::size_t>(a)]),
                 want_string(alphas, id.c_str()), "pi.alpha");
    }
    pi.tau.assign(static_cast<std::size_t>(n * n), {});
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        const FinDaggerCategory& hk = b.K.hom(a, c);
        const std::string key = b.K.cells0[static_cast<std::size_t>(a)] + "|" +
                                b.K.cells0[static_cast<std::size_t>(c)];
        if (!taus.contains(key)) input_fail("pi.tau missing hom " + key);
        const json& row = taus.at(key);
        auto& out = pi.tau[static_cast<std::size_t>(a * n + c)];
        for (const auto& f : hk.objects) {
          if (!row.contains(f)) input_fail("pi.tau[" + key + "] missing " + f);
          out.push_back(
              mor_in(b.L.hom(E, b.F.map0[static_cast<std::size_t>(c)]),
                     want_string(row, f.c_str()), "pi.tau[" + key + "]"));
        }
      }
    const CheckOutcome oc = check_dagger_lax_limit(b.K, b.L, b.F, E, pi);
    if (!oc.ok) {
      rep.witnesses.push_back(oc.witness);
      return 1;
    }
    return 0;
  }

  if (cmd == "oracle regen-golden") {
    const oracle::EnumerationReport r =
        oracle::monads_report(fixtures::rel2(), opt.cap);
    const std::string path = opt.golden_dir + "/rel2_monads.json";
    std::ofstream f(path, std::ios::binary);
    if (!f) input_fail("cannot write " + path);
    f << r.dump();
    ordered_json res;
    res["written"] = ordered_json::array({path});
    res["count"] = r.count;
    rep.result = res;
    return 0;
  }

  input_fail("unknown command " + cmd);
}

}  // namespace

int run(const std::vector<std::string>& args, std::string& out,
        std::string& err) {
  CLI::App app{"finite dagger category toolkit"};
  app.name("daggercat");
  app.fallthrough(true);
  app.require_subcommand(1);

  Options opt;
  app.add_option("--max-search", opt.cap,
                 "candidate cap forwarded to every enumeration");
  app.add_option("--parallel", opt.parallel, "worker threads (1 = serial)");
  app.add_option("--golden-dir", opt.golden_dir,
                 "directory holding golden enumeration reports");
  app.add_flag("--no-timing", opt.no_timing,
               "omit the timing field from the report");

  std::string cmd;

  auto leaf = [&](CLI::App* parent, const std::string& name,
                  const std::string& desc) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->callback([&cmd, parent, name] {
      cmd = parent->get_name() + " " + name;
    });
    return sub;
  };

  CLI::App* validate =
      app.add_subcommand("validate", "structural and law validation");
  validate->require_subcommand(1);
  leaf(validate, "category", "dagger category axioms")
      ->add_option("file", opt.file1, "category JSON")
      ->required();
  leaf(validate, "functor", "dagger functor laws")
      ->add_option("file", opt.file1, "functor JSON")
      ->required();
  leaf(validate, "monad", "monad laws plus the Frobenius flag")
      ->add_option("file", opt.file1, "monad JSON")
      ->required();
  leaf(validate, "2category", "dagger 2-category coherence")
      ->add_option("file", opt.file1, "2-category JSON")
      ->required();
  leaf(validate, "laxfunctor", "dagger lax functor coherence")
      ->add_option("file", opt.file1, "lax functor JSON")
      ->required();

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "oracle-side exhaustive enumeration");
  enumerate->require_subcommand(1);
  leaf(enumerate, "monads", "all dagger Frobenius monad candidates")
      ->add_option("file", opt.file1, "category JSON")
      ->required();
  {
    CLI::App* sub = leaf(enumerate, "functors", "all dagger functors A -> B");
    sub->add_option("source", opt.file1, "category JSON")->required();
    sub->add_option("target", opt.file2, "category JSON")->required();
  }
  leaf(enumerate, "algebras", "all algebras of a monad")
      ->add_option("file", opt.file1, "monad JSON")
      ->required();

  CLI::App* build = app.add_subcommand("build", "derived constructions");
  build->require_subcommand(1);
  leaf(build, "fem", "category of Frobenius-compatible algebras")
      ->add_option("file", opt.file1, "monad JSON")
      ->required();
  leaf(build, "kleisli", "Kleisli category with its canonical dagger")
      ->add_option("file", opt.file1, "monad JSON")
      ->required();
  leaf(build, "dfmnd", "2-category of dagger Frobenius monads")
      ->add_option("file", opt.file1, "2-category JSON")
      ->required();
  leaf(build, "fk-completion", "Kleisli-flavoured completion")
      ->add_option("file", opt.file1, "2-category JSON")
      ->required();
  leaf(build, "fem-completion", "algebra-flavoured completion")
      ->add_option("file", opt.file1, "2-category JSON")
      ->required();

  CLI::App* check = app.add_subcommand("check", "mathematical properties");
  check->require_subcommand(1);
  leaf(check, "frobenius", "Frobenius law of a monad")
      ->add_option("file", opt.file1, "monad JSON")
      ->required();
  {
    CLI::App* sub = leaf(check, "fem-algebra",
                         "Frobenius compatibility of one algebra");
    sub->add_option("file", opt.file1, "monad JSON")->required();
    sub->add_option("--carrier", opt.carrier, "carrier object id")
        ->required();
    sub->add_option("--delta", opt.delta, "structure morphism id")
        ->required();
  }
  {
    CLI::App* sub =
        leaf(check, "th1", "representability of the algebra construction");
    sub->add_option("--arg-category", opt.arg_category, "category JSON")
        ->required();
    sub->add_option("--monad", opt.arg_monad, "monad JSON")->required();
  }
  {
    CLI::App* sub = leaf(check, "fk-universal",
                         "hom-level universal property of Kleisli");
    sub->add_option("--arg-category", opt.arg_category, "category JSON")
        ->required();
    sub->add_option("--monad", opt.arg_monad, "monad JSON")->required();
  }
  {
    CLI::App* sub =
        leaf(check, "comparison", "canonical comparison functor");
    sub->add_option("--monad", opt.arg_monad, "monad JSON")->required();
    sub->add_option("--adjunction", opt.adjunction, "kleisli or fem");
  }
  {
    CLI::App* sub =
        leaf(check, "monadic", "comparison functor is a dagger equivalence");
    sub->add_option("--monad", opt.arg_monad, "monad JSON")->required();
    sub->add_option("--adjunction", opt.adjunction, "kleisli or fem");
  }
  leaf(check, "fem-object", "algebra object universal property")
      ->add_option("file", opt.file1, "problem JSON")
      ->required();
  leaf(check, "universal2", "mediating 1-cell existence and uniqueness")
      ->add_option("file", opt.file1, "problem JSON")
      ->required();
  leaf(check, "eta-commutation", "unit commutation 2-cell equation")
      ->add_option("file", opt.file1, "problem JSON")
      ->required();
  leaf(check, "pairs", "monad morphisms as 1-cell pairs")
      ->add_option("file", opt.file1, "problem JSON")
      ->required();
  leaf(check, "lax-limit", "dagger lax limit presentation")
      ->add_option("file", opt.file1, "problem JSON")
      ->required();

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "golden file upkeep");
  oracle_cmd->require_subcommand(1);
  leaf(oracle_cmd, "regen-golden", "rewrite the persisted golden reports");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("daggercat");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out += app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out += app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err += std::string(e.what()) + "\n";
    return 2;
  }

  set_parallelism(opt.parallel);

  io::Report rep;
  rep.command = cmd;
  rep.verdict = "pass";
  int code = 0;
  const auto start = std::chrono::steady_clock::now();
  try {
    code = dispatch(cmd, opt, rep);
    if (code != 0) rep.verdict = "fail";
  } catch (const ValidationError& e) {
    const bool input = is_input_error(e.kind());
    rep.verdict = input ? "error" : "fail";
    rep.witnesses.push_back(std::string(to_string(e.kind())) + ": " +
                            e.witness());
    code = input ? 2 : 1;
  } catch (const SearchSpaceTooLarge& e) {
    rep.verdict = "error";
    rep.witnesses.push_back(e.what());
    code = 2;
  }
  const auto stop = std::chrono::steady_clock::now();
  rep.timing_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();

  out += rep.dump(!opt.no_timing);

  err += rep.command + ": " + rep.verdict + "\n";
  for (const auto& w : rep.witnesses) err += "  witness: " + w + "\n";
  return code;
}

}  // namespace daggercat::cli
