#ifndef SEMIKIT_ERROR_HPP_
#define SEMIKIT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace semikit {

  enum class ErrorKind {
    DimensionMismatch,
    OutOfRange,
    InvalidName,
    ParseError,
    BoundExceeded,
    SearchBoundExceeded,
    EmptySubset,
    NotSubsemiring,
    NotBiIdeal,
    NotCongruence,
    NotEquivalence,
    NotQuasiSkewRing,
    NotQuasiCompletelyRegular,
    DecompositionInvariantViolation,
    PreconditionFailed,
    MalformedWitness,
    InternalTheoremViolation,
    UnknownTheoremId,
    UnknownClassName,
    MissingMap,
    OverlappingCarriers,
    NoProductWitness,
    DomainMismatch,
    NotInjective,
    IoError,
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  // Every failure raised by the toolkit. The kind is machine readable, the
  // message is meant for humans and already names the offending elements.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& message);

    [[nodiscard]] ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  // Input errors (exit 2 at the command line) versus findings that indicate
  // a contradiction with a proven theorem.
  [[nodiscard]] bool is_input_error(ErrorKind kind) noexcept;

}  // namespace semikit

#endif  // SEMIKIT_ERROR_HPP_
