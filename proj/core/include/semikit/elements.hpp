#ifndef SEMIKIT_ELEMENTS_HPP_
#define SEMIKIT_ELEMENTS_HPP_

#include <cstdint>
#include <optional>

#include "semikit/kernel.hpp"

namespace semikit {

  struct ElementClassification {
    Element element = 0;
    bool    additively_regular            = false;
    bool    additively_completely_regular = false;
    bool    completely_regular            = false;
    // Least n with na additively regular; always exists on a finite carrier.
    std::uint64_t additively_quasi_regular_index = 0;
    // Least n with na completely regular.
    std::optional<std::uint64_t> quasi_completely_regular_index;
    // The unique x with na + x = x + na, na + x + na = na, x + na + x = x
    // at that index.
    std::optional<Element> witness;
  };

  struct InverseSet {
    Element    element = 0;
    ElementSet inverses;
  };

  ElementSet additive_idempotents(FiniteSemiring const& s);

  // V+(a): all x with a + x + a = a and x + a + x = x.
  InverseSet additive_inverses(FiniteSemiring const& s, Element a);

  bool is_additively_regular(FiniteSemiring const& s, Element a);
  bool is_additively_completely_regular(FiniteSemiring const& s, Element a);
  bool is_completely_regular(FiniteSemiring const& s, Element a);

  // The unique additively completely regular witness of a, if any. Throws
  // MalformedWitness if the defining equations admit more than one x.
  std::optional<Element> completely_regular_witness(FiniteSemiring const& s,
                                                    Element               a);

  ElementClassification classify_element(FiniteSemiring const& s, Element a);

  ElementSet reg_plus(FiniteSemiring const& s);
  ElementSet cr_set(FiniteSemiring const& s);

  // pa for the least p with pa additively regular.
  Element first_regular_multiple(FiniteSemiring const& s, Element a);

  // The additive idempotent in the cycle of a, 2a, 3a, ...
  Element idempotent_power(FiniteSemiring const& s, Element a);

}  // namespace semikit

#endif  // SEMIKIT_ELEMENTS_HPP_
