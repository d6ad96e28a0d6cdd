#include "daggercat/json_io.hpp"

#include <fstream>
#include <sstream>

#include "daggercat/errors.hpp"

namespace daggercat::io {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void bad_input(const std::string& what) {
  throw ValidationError(ErrKind::DanglingReference, what);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    bad_input(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string str_of(const json& j, const std::string& where) {
  if (!j.is_string()) bad_input(where + " must be a string");
  return j.get<std::string>();
}

std::map<std::string, std::string> str_map(const json& j,
                                           const std::string& where) {
  if (!j.is_object()) bad_input(where + " must be an object");
  std::map<std::string, std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it)
    out[it.key()] = str_of(it.value(), where + "." + it.key());
  return out;
}

}  // namespace

CategoryDescription parse_category(const nlohmann::json& j) {
  CategoryDescription d;
  d.name = j.is_object() && j.contains("name")
               ? str_of(j.at("name"), "name")
               : std::string("cat");
  const json& objs = field(j, "objects");
  if (!objs.is_array()) bad_input("objects must be an array");
  for (const auto& o : objs) d.objects.push_back(str_of(o, "object"));

  const json& mors = field(j, "morphisms");
  if (!mors.is_array()) bad_input("morphisms must be an array");
  for (const auto& m : mors) {
    if (m.is_array() && m.size() == 3) {
      d.morphisms.push_back({str_of(m[0], "morphism id"),
                             str_of(m[1], "morphism src"),
                             str_of(m[2], "morphism tgt")});
    } else if (m.is_object()) {
      d.morphisms.push_back({str_of(field(m, "id"), "morphism id"),
                             str_of(field(m, "src"), "morphism src"),
                             str_of(field(m, "tgt"), "morphism tgt")});
    } else {
      bad_input("each morphism must be [id, src, tgt] or {id, src, tgt}");
    }
  }

  for (const auto& [k, v] : str_map(field(j, "identities"), "identities"))
    d.identities[k] = v;

  const json& comp = field(j, "composition");
  if (!comp.is_array()) bad_input("composition must be an array");
  for (const auto& row : comp) {
    if (!row.is_array() || row.size() != 3)
      bad_input("composition rows must be [g, f, gf]");
    d.composition.push_back({str_of(row[0], "composition g"),
                             str_of(row[1], "composition f"),
                             str_of(row[2], "composition gf")});
  }

  for (const auto& [k, v] : str_map(field(j, "dagger"), "dagger"))
    d.dagger[k] = v;
  return d;
}

nlohmann::ordered_json category_to_json(const FinDaggerCategory& C) {
  const CategoryDescription d = describe(C);
  ordered_json j;
  j["name"] = d.name;
  j["objects"] = d.objects;
  j["morphisms"] = ordered_json::array();
  for (const auto& m : d.morphisms)
    j["morphisms"].push_back({m.id, m.src, m.tgt});
  j["identities"] = ordered_json::object();
  for (const auto& [k, v] : d.identities) j["identities"][k] = v;
  j["composition"] = ordered_json::array();
  for (const auto& row : d.composition)
    j["composition"].push_back({row[0], row[1], row[2]});
  j["dagger"] = ordered_json::object();
  for (const auto& [k, v] : d.dagger) j["dagger"][k] = v;
  return j;
}

MonadInput parse_monad(const nlohmann::json& j) {
  MonadInput in;
  in.category = parse_category(field(j, "category"));
  const json& T = field(j, "endofunctor");
  in.functor_objects = str_map(field(T, "objects"), "endofunctor.objects");
  in.functor_morphisms =
      str_map(field(T, "morphisms"), "endofunctor.morphisms");
  in.mu = str_map(field(j, "mu"), "mu");
  in.eta = str_map(field(j, "eta"), "eta");
  return in;
}

FunctorInput parse_functor(const nlohmann::json& j) {
  FunctorInput in;
  in.source = parse_category(field(j, "source"));
  in.target = parse_category(field(j, "target"));
  in.objects = str_map(field(j, "objects"), "objects");
  in.morphisms = str_map(field(j, "morphisms"), "morphisms");
  return in;
}

namespace {

std::vector<std::array<std::string, 6>> six_rows(const json& j,
                                                 const std::string& where) {
  if (!j.is_array()) bad_input(where + " must be an array");
  std::vector<std::array<std::string, 6>> out;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != 6)
      bad_input(where + " rows must have six entries");
    std::array<std::string, 6> r;
    for (std::size_t i = 0; i < 6; ++i) r[i] = str_of(row[i], where);
    out.push_back(r);
  }
  return out;
}

std::pair<std::string, std::string> split_hom_key(const std::string& key) {
  const auto bar = key.find('|');
  if (bar == std::string::npos)
    bad_input("hom keys must look like \"A|B\": " + key);
  return {key.substr(0, bar), key.substr(bar + 1)};
}

}  // namespace

TwoCategoryDescription parse_2category(const nlohmann::json& j) {
  TwoCategoryDescription d;
  d.name = j.is_object() && j.contains("name")
               ? str_of(j.at("name"), "name")
               : std::string("2cat");
  const json& cells = field(j, "cells0");
  if (!cells.is_array()) bad_input("cells0 must be an array");
  for (const auto& c : cells) d.cells0.push_back(str_of(c, "0-cell"));

  const json& homs = field(j, "homs");
  if (!homs.is_object()) bad_input("homs must be an object");
  for (auto it = homs.begin(); it != homs.end(); ++it)
    d.homs[split_hom_key(it.key())] = parse_category(it.value());

  for (const auto& [k, v] : str_map(field(j, "id1"), "id1")) d.id1[k] = v;
  d.comp1 = six_rows(field(j, "comp1"), "comp1");
  d.lwhisker = six_rows(field(j, "lwhisker"), "lwhisker");
  d.rwhisker = six_rows(field(j, "rwhisker"), "rwhisker");
  if (j.contains("hcomp")) d.hcomp = six_rows(j.at("hcomp"), "hcomp");
  return d;
}

LaxFunctorInput parse_lax_functor(const nlohmann::json& j) {
  LaxFunctorInput in;
  in.source = parse_2category(field(j, "source"));
  in.target = parse_2category(field(j, "target"));
  in.map0 = str_map(field(j, "map0"), "map0");
  const json& hm = field(j, "hom_maps");
  if (!hm.is_object()) bad_input("hom_maps must be an object");
  for (auto it = hm.begin(); it != hm.end(); ++it) {
    split_hom_key(it.key());  // shape check
    in.hom_maps[it.key()] = {
        str_map(field(it.value(), "objects"), "hom_maps.objects"),
        str_map(field(it.value(), "morphisms"), "hom_maps.morphisms")};
  }
  in.gamma = six_rows(field(j, "gamma"), "gamma");
  in.delta = str_map(field(j, "delta"), "delta");
  return in;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 1099511628211ull;
  }
  return h;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) bad_input("cannot read " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    bad_input(path + ": " + e.what());
  }
}

std::string Report::dump(bool with_timing) const {
  ordered_json j;
  j["command"] = command;
  j["inputs"] = ordered_json::array();
  for (const auto& [path, hash] : inputs) {
    ordered_json entry;
    entry["path"] = path;
    entry["fnv1a"] = hash;
    j["inputs"].push_back(entry);
  }
  j["verdict"] = verdict;
  j["witnesses"] = witnesses;
  j["result"] = result;
  if (with_timing) j["timing_ms"] = timing_ms;
  return j.dump(2) + "\n";
}

}  // namespace daggercat::io
