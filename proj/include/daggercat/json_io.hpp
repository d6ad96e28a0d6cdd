#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "daggercat/fincat.hpp"
#include "daggercat/monad.hpp"
#include "daggercat/two_cat.hpp"

namespace daggercat::io {

// Wire formats. Parsing reports malformed input as ValidationError with a
// structural kind (exit code 2 territory); mathematical law failures are
// left to the validators.

CategoryDescription parse_category(const nlohmann::json& j);
nlohmann::ordered_json category_to_json(const FinDaggerCategory& C);

// {"category": <path or inline>, "endofunctor": {objects, morphisms},
//  "mu": {...}, "eta": {...}}
struct MonadInput {
  CategoryDescription category;
  std::map<std::string, std::string> functor_objects;
  std::map<std::string, std::string> functor_morphisms;
  std::map<std::string, std::string> mu;
  std::map<std::string, std::string> eta;
};
MonadInput parse_monad(const nlohmann::json& j);

struct FunctorInput {
  CategoryDescription source;
  CategoryDescription target;
  std::map<std::string, std::string> objects;
  std::map<std::string, std::string> morphisms;
};
FunctorInput parse_functor(const nlohmann::json& j);

TwoCategoryDescription parse_2category(const nlohmann::json& j);

struct LaxFunctorInput {
  TwoCategoryDescription source;
  TwoCategoryDescription target;
  std::map<std::string, std::string> map0;
  // hom_maps["A|B"] = {objects: {...}, morphisms: {...}}
  std::map<std::string, std::pair<std::map<std::string, std::string>,
                                  std::map<std::string, std::string>>>
      hom_maps;
  // rows [a, b, c, g, f, two-cell id in the target hom]
  std::vector<std::array<std::string, 6>> gamma;
  std::map<std::string, std::string> delta;
};
LaxFunctorInput parse_lax_functor(const nlohmann::json& j);

std::uint64_t fnv1a(const std::string& bytes);

nlohmann::json load_json_file(const std::string& path);

// Uniform CLI report. timing_ms is excluded from byte-level comparisons by
// emitting it last and allowing callers to strip it.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::uint64_t>> inputs;  // path, hash
  std::string verdict;  // "pass" | "fail" | "error"
  std::vector<std::string> witnesses;
  nlohmann::ordered_json result;  // payload, may be null
  double timing_ms = 0.0;

  std::string dump(bool with_timing = true) const;
};

}  // namespace daggercat::io

namespace daggercat::cli {
// Full CLI entry point; argv-style arguments excluding the program name.
// Returns the process exit code (0 pass, 1 law failure, 2 input error).
int run(const std::vector<std::string>& args, std::string& out,
        std::string& err);
}  // namespace daggercat::cli
