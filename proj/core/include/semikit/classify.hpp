#ifndef SEMIKIT_CLASSIFY_HPP_
#define SEMIKIT_CLASSIFY_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "semikit/kernel.hpp"

namespace semikit {

  enum class SemiringClass : std::size_t {
    AdditivelyRegular,
    AdditivelyInverse,
    AdditivelyQuasiInverse,
    CompletelyRegular,
    QuasiCompletelyRegular,
    QuasiCompletelyInverse,
    StronglyAdditivelyQuasiInverse,
    StronglyAdditivelyQuasiCompletelyInverse,
    GeneralizedClifford,
    SkewRing,
    QuasiSkewRing,
    BLattice,
    CompletelySimple,
    CompletelyArchimedean,
  };

  inline constexpr std::size_t kNumClasses = 14;

  inline constexpr std::array<SemiringClass, kNumClasses> kAllClasses = {
      SemiringClass::AdditivelyRegular,
      SemiringClass::AdditivelyInverse,
      SemiringClass::AdditivelyQuasiInverse,
      SemiringClass::CompletelyRegular,
      SemiringClass::QuasiCompletelyRegular,
      SemiringClass::QuasiCompletelyInverse,
      SemiringClass::StronglyAdditivelyQuasiInverse,
      SemiringClass::StronglyAdditivelyQuasiCompletelyInverse,
      SemiringClass::GeneralizedClifford,
      SemiringClass::SkewRing,
      SemiringClass::QuasiSkewRing,
      SemiringClass::BLattice,
      SemiringClass::CompletelySimple,
      SemiringClass::CompletelyArchimedean,
  };

  // Kebab-case key, e.g. "quasi-skew-ring".
  std::string_view class_name(SemiringClass c) noexcept;
  // Short tag used in corpus manifests, e.g. "QSR".
  std::string_view class_tag(SemiringClass c) noexcept;
  // Accepts the key or the tag; UnknownClassName otherwise.
  SemiringClass parse_class_name(std::string_view name);

  struct Verdict {
    bool        holds = false;
    std::string evidence;
  };

  struct ClassReport {
    std::array<Verdict, kNumClasses> verdicts;

    [[nodiscard]] Verdict const& operator[](SemiringClass c) const {
      return verdicts[static_cast<std::size_t>(c)];
    }
    [[nodiscard]] bool holds(SemiringClass c) const {
      return (*this)[c].holds;
    }
  };

  // Every verdict from its definition. Throws InternalTheoremViolation if
  // the verdicts break a known implication.
  ClassReport classify(FiniteSemiring const& s);

  // One definitional predicate, with evidence.
  Verdict evaluate_class(FiniteSemiring const& s, SemiringClass c);
  bool    has_class(FiniteSemiring const& s, SemiringClass c);

  bool is_additively_quasi_inverse(FiniteSemiring const& s);
  bool is_quasi_completely_regular(FiniteSemiring const& s);
  bool is_completely_simple(FiniteSemiring const& s);
  // NotQuasiCompletelyRegular unless s is quasi completely regular.
  bool is_completely_archimedean(FiniteSemiring const& s);

  // Some m >= 1 with m u = m v; decided on the joint orbit of (m u, m v).
  bool has_common_multiple(FiniteSemiring const& s, Element u, Element v);

  enum class TheoremId { QSR3, QCR5, QCI5, SAQCI3, HJEQ };

  inline constexpr std::array<TheoremId, 5> kAllTheorems = {TheoremId::QSR3,
                                                            TheoremId::QCR5,
                                                            TheoremId::QCI5,
                                                            TheoremId::SAQCI3,
                                                            TheoremId::HJEQ};

  std::string_view theorem_name(TheoremId id) noexcept;
  TheoremId        parse_theorem_id(std::string_view name);

  struct ConditionVerdict {
    std::string label;        // "i", "ii", ...
    std::string description;  // what was evaluated
    bool        holds = false;
    std::string witness;
  };

  struct TheoremReport {
    std::string                   theorem;
    std::vector<ConditionVerdict> conditions;

    [[nodiscard]] bool agreement() const noexcept;
  };

  // Evaluates every listed condition independently.
  TheoremReport verify_equivalence(FiniteSemiring const& s, TheoremId id);

  // Strongly additively quasi completely inverse versus quasi completely
  // inverse with Reg+(S) and E+(S) ideals.
  TheoremReport verify_ideal_corollary(FiniteSemiring const& s);

  inline constexpr std::size_t kTheoremCongruenceBound = 8;

}  // namespace semikit

#endif  // SEMIKIT_CLASSIFY_HPP_
