#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace daggercat {

// Every law violation names the first offending tuple so failures are
// reproducible; the kind tells callers (and the CLI) how to classify it.
enum class ErrKind {
  // structural problems in raw descriptions
  DanglingReference,
  DuplicateId,
  MissingComposite,
  SpuriousComposite,
  // category laws
  CompositeWrongEndpoints,
  NonAssociative,
  BadIdentity,
  DaggerWrongEndpoints,
  DaggerNotInvolutive,
  DaggerNotFunctorial,
  // functors and naturals
  NotFunctorial,
  NotDaggerPreserving,
  NotNatural,
  WrongEndpoints,
  NotComposable,
  UnknownMorphism,
  // monads
  NotDaggerEndofunctor,
  AssocFail,
  UnitFail,
  NotFrobenius,
  InternalClosureFailure,
  MonadMismatch,
  NoComparison,
  NonUnique,
  // 2-categories
  Assoc1Fail,
  Unit1Fail,
  WhiskerFail,
  InterchangeFail,
  DaggerHorizontalFail,
  EtaCommutationRequired,
  MissingWitness,
  // lax functors
  SourceNotTerminal,
  LaxCoherenceFail,
  FrobeniusAxiomFail,
  HomMapNotDagger,
  CoherenceFail,
  // generic check failure with witness
  CheckFailed,
};

std::string_view to_string(ErrKind k);

// True for malformed-input kinds (as opposed to genuine law failures);
// the CLI maps these to exit code 2.
bool is_input_error(ErrKind k);

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ErrKind kind, std::string witness);
  ErrKind kind() const { return kind_; }
  const std::string& witness() const { return witness_; }

 private:
  ErrKind kind_;
  std::string witness_;
};

class SearchSpaceTooLarge : public std::runtime_error {
 public:
  explicit SearchSpaceTooLarge(std::uint64_t cap);
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
};

// Result of a boolean mathematical check; carries the first failure found.
struct CheckOutcome {
  bool ok = true;
  std::string witness;

  explicit operator bool() const { return ok; }
  static CheckOutcome pass() { return {true, {}}; }
  static CheckOutcome fail(std::string w) { return {false, std::move(w)}; }
};

}  // namespace daggercat
