#include "daggercat/errors.hpp"

#include <cstdint>

namespace daggercat {

std::string_view to_string(ErrKind k) {
  switch (k) {
    case ErrKind::DanglingReference: return "DanglingReference";
    case ErrKind::DuplicateId: return "DuplicateId";
    case ErrKind::MissingComposite: return "MissingComposite";
    case ErrKind::SpuriousComposite: return "SpuriousComposite";
    case ErrKind::CompositeWrongEndpoints: return "CompositeWrongEndpoints";
    case ErrKind::NonAssociative: return "NonAssociative";
    case ErrKind::BadIdentity: return "BadIdentity";
    case ErrKind::DaggerWrongEndpoints: return "DaggerWrongEndpoints";
    case ErrKind::DaggerNotInvolutive: return "DaggerNotInvolutive";
    case ErrKind::DaggerNotFunctorial: return "DaggerNotFunctorial";
    case ErrKind::NotFunctorial: return "NotFunctorial";
    case ErrKind::NotDaggerPreserving: return "NotDaggerPreserving";
    case ErrKind::NotNatural: return "NotNatural";
    case ErrKind::WrongEndpoints: return "WrongEndpoints";
    case ErrKind::NotComposable: return "NotComposable";
    case ErrKind::UnknownMorphism: return "UnknownMorphism";
    case ErrKind::NotDaggerEndofunctor: return "NotDaggerEndofunctor";
    case ErrKind::AssocFail: return "AssocFail";
    case ErrKind::UnitFail: return "UnitFail";
    case ErrKind::NotFrobenius: return "NotFrobenius";
    case ErrKind::InternalClosureFailure: return "InternalClosureFailure";
    case ErrKind::MonadMismatch: return "MonadMismatch";
    case ErrKind::NoComparison: return "NoComparison";
    case ErrKind::NonUnique: return "NonUnique";
    case ErrKind::Assoc1Fail: return "Assoc1Fail";
    case ErrKind::Unit1Fail: return "Unit1Fail";
    case ErrKind::WhiskerFail: return "WhiskerFail";
    case ErrKind::InterchangeFail: return "InterchangeFail";
    case ErrKind::DaggerHorizontalFail: return "DaggerHorizontalFail";
    case ErrKind::EtaCommutationRequired: return "EtaCommutationRequired";
    case ErrKind::MissingWitness: return "MissingWitness";
    case ErrKind::SourceNotTerminal: return "SourceNotTerminal";
    case ErrKind::LaxCoherenceFail: return "LaxCoherenceFail";
    case ErrKind::FrobeniusAxiomFail: return "FrobeniusAxiomFail";
    case ErrKind::HomMapNotDagger: return "HomMapNotDagger";
    case ErrKind::CoherenceFail: return "CoherenceFail";
    case ErrKind::CheckFailed: return "CheckFailed";
  }
  return "Unknown";
}

bool is_input_error(ErrKind k) {
  switch (k) {
    case ErrKind::DanglingReference:
    case ErrKind::DuplicateId:
    case ErrKind::MissingComposite:
    case ErrKind::SpuriousComposite:
    case ErrKind::UnknownMorphism:
      return true;
    default:
      return false;
  }
}

ValidationError::ValidationError(ErrKind kind, std::string witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + witness),
      kind_(kind),
      witness_(std::move(witness)) {}

SearchSpaceTooLarge::SearchSpaceTooLarge(std::uint64_t cap)
    : std::runtime_error("search space exceeds cap " + std::to_string(cap)),
      cap_(cap) {}

}  // namespace daggercat
