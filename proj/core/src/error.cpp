#include "semikit/error.hpp"

namespace semikit {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::DimensionMismatch: return "DimensionMismatch";
      case ErrorKind::OutOfRange: return "OutOfRange";
      case ErrorKind::InvalidName: return "InvalidName";
      case ErrorKind::ParseError: return "ParseError";
      case ErrorKind::BoundExceeded: return "BoundExceeded";
      case ErrorKind::SearchBoundExceeded: return "SearchBoundExceeded";
      case ErrorKind::EmptySubset: return "EmptySubset";
      case ErrorKind::NotSubsemiring: return "NotSubsemiring";
      case ErrorKind::NotBiIdeal: return "NotBiIdeal";
      case ErrorKind::NotCongruence: return "NotCongruence";
      case ErrorKind::NotEquivalence: return "NotEquivalence";
      case ErrorKind::NotQuasiSkewRing: return "NotQuasiSkewRing";
      case ErrorKind::NotQuasiCompletelyRegular:
        return "NotQuasiCompletelyRegular";
      case ErrorKind::DecompositionInvariantViolation:
        return "DecompositionInvariantViolation";
      case ErrorKind::PreconditionFailed: return "PreconditionFailed";
      case ErrorKind::MalformedWitness: return "MalformedWitness";
      case ErrorKind::InternalTheoremViolation:
        return "InternalTheoremViolation";
      case ErrorKind::UnknownTheoremId: return "UnknownTheoremId";
      case ErrorKind::UnknownClassName: return "UnknownClassName";
      case ErrorKind::MissingMap: return "MissingMap";
      case ErrorKind::OverlappingCarriers: return "OverlappingCarriers";
      case ErrorKind::NoProductWitness: return "NoProductWitness";
      case ErrorKind::DomainMismatch: return "DomainMismatch";
      case ErrorKind::NotInjective: return "NotInjective";
      case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
  }

  Error::Error(ErrorKind kind, std::string const& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        _kind(kind) {}

  bool is_input_error(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::DecompositionInvariantViolation:
      case ErrorKind::MalformedWitness:
      case ErrorKind::InternalTheoremViolation:
        return false;
      default:
        return true;
    }
  }

}  // namespace semikit
