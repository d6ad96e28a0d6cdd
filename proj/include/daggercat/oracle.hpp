#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "daggercat/fincat.hpp"

namespace daggercat::oracle {

// Ground-truth enumerations and naive re-evaluations of every law. All the
// verdict logic in this module is written directly against the raw tables
// and shares nothing with the main validators, so agreement between the two
// is meaningful evidence.

struct EnumerationReport {
  std::string space;
  std::uint64_t count = 0;
  nlohmann::ordered_json items = nlohmann::ordered_json::array();

  nlohmann::ordered_json to_json() const;
  std::string dump() const;  // stable, newline-terminated
};

struct OracleFunctor {
  std::vector<int> obj_map;
  std::vector<int> mor_map;
  bool operator==(const OracleFunctor&) const = default;
};

struct OracleMonad {
  OracleFunctor T;
  std::vector<int> mu;   // per object
  std::vector<int> eta;  // per object
  bool frobenius = false;
  bool operator==(const OracleMonad&) const = default;
};

struct OracleAlgebra {
  int carrier = -1;
  int delta = -1;
  bool fem = false;
};

struct OracleMonadMorphism {
  OracleFunctor F;          // base(s-monad) -> base(t-monad)
  std::vector<int> sigma;   // per object of the source base
};

// Independent axiom evaluation of a raw description (no exceptions, no
// sorting; just a verdict).
bool naive_check_category(const CategoryDescription& desc);

// Frobenius flag evaluated pointwise from tables.
bool naive_frobenius(const FinDaggerCategory& base, const OracleFunctor& T,
                     const std::vector<int>& mu);

std::vector<OracleFunctor> enumerate_dagger_functors(
    const FinDaggerCategory& A, const FinDaggerCategory& B,
    std::uint64_t cap = 10'000'000);

std::vector<std::vector<int>> enumerate_nat(const FinDaggerCategory& A,
                                            const FinDaggerCategory& B,
                                            const OracleFunctor& F,
                                            const OracleFunctor& G);

std::vector<OracleMonad> enumerate_monads(const FinDaggerCategory& C,
                                          std::uint64_t cap = 10'000'000);

std::vector<OracleAlgebra> enumerate_algebras(const FinDaggerCategory& base,
                                              const OracleMonad& m);

// Morphisms of Frobenius monads (F, sigma): (A,s) -> (D,t); sigma is a
// natural family T.F => F.S subject to the two multiplication squares and
// the unit triangle.
std::vector<OracleMonadMorphism> enumerate_monad_morphisms(
    const FinDaggerCategory& A, const OracleMonad& s,
    const FinDaggerCategory& D, const OracleMonad& t,
    std::uint64_t cap = 10'000'000);

// Dagger isomorphism search (exact table iso, dagger preserved); returns
// the object and morphism bijections of the first hit in search order.
std::optional<std::pair<std::vector<int>, std::vector<int>>> iso_search_dagger(
    const FinDaggerCategory& C, const FinDaggerCategory& D,
    std::uint64_t cap = 10'000'000);

// Report builders (used for golden files and the CLI).
EnumerationReport monads_report(const FinDaggerCategory& C,
                                std::uint64_t cap = 10'000'000);
EnumerationReport functors_report(const FinDaggerCategory& A,
                                  const FinDaggerCategory& B,
                                  std::uint64_t cap = 10'000'000);
EnumerationReport algebras_report(const FinDaggerCategory& base,
                                  const OracleMonad& m);

}  // namespace daggercat::oracle
