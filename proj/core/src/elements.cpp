#include "semikit/elements.hpp"

#include "semikit/error.hpp"

namespace semikit {

  ElementSet additive_idempotents(FiniteSemiring const& s) {
    ElementSet out;
    for (Element e = 0; e < s.order(); ++e) {
      if (s.add(e, e) == e) {
        out.push_back(e);
      }
    }
    return out;
  }

  InverseSet additive_inverses(FiniteSemiring const& s, Element a) {
    InverseSet out{a, {}};
    for (Element x = 0; x < s.order(); ++x) {
      if (s.add(s.add(a, x), a) == a && s.add(s.add(x, a), x) == x) {
        out.inverses.push_back(x);
      }
    }
    return out;
  }

  bool is_additively_regular(FiniteSemiring const& s, Element a) {
    for (Element x = 0; x < s.order(); ++x) {
      if (s.add(s.add(a, x), a) == a) {
        return true;
      }
    }
    return false;
  }

  bool is_additively_completely_regular(FiniteSemiring const& s, Element a) {
    for (Element x = 0; x < s.order(); ++x) {
      if (s.add(s.add(a, x), a) == a && s.add(a, x) == s.add(x, a)) {
        return true;
      }
    }
    return false;
  }

  bool is_completely_regular(FiniteSemiring const& s, Element a) {
    for (Element x = 0; x < s.order(); ++x) {
      auto ax = s.add(a, x);
      if (s.add(ax, a) == a && ax == s.add(x, a) && s.mul(a, ax) == ax) {
        return true;
      }
    }
    return false;
  }

  std::optional<Element> completely_regular_witness(FiniteSemiring const& s,
                                                    Element               a) {
    std::optional<Element> found;
    for (Element x = 0; x < s.order(); ++x) {
      auto ax = s.add(a, x);
      if (s.add(ax, a) == a && ax == s.add(x, a)
          && s.add(s.add(x, a), x) == x) {
        if (found) {
          throw Error(ErrorKind::MalformedWitness,
                      "element " + s.name(a) + " has two witnesses "
                          + s.name(*found) + " and " + s.name(x));
        }
        found = x;
      }
    }
    return found;
  }

  ElementClassification classify_element(FiniteSemiring const& s, Element a) {
    ElementClassification out;
    out.element                       = a;
    out.additively_regular            = is_additively_regular(s, a);
    out.additively_completely_regular = is_additively_completely_regular(s, a);
    out.completely_regular            = is_completely_regular(s, a);

    auto orbit = cyclic_orbit(s, a, Op::Add);
    for (std::size_t k = 0; k < orbit.terms.size(); ++k) {
      auto na = orbit.terms[k];
      if (out.additively_quasi_regular_index == 0
          && is_additively_regular(s, na)) {
        out.additively_quasi_regular_index = k + 1;
      }
      if (!out.quasi_completely_regular_index
          && is_completely_regular(s, na)) {
        out.quasi_completely_regular_index = k + 1;
        out.witness = completely_regular_witness(s, na);
        if (!out.witness) {
          throw Error(ErrorKind::MalformedWitness,
                      "completely regular element " + s.name(na)
                          + " has no unique additive inverse");
        }
      }
    }
    if (out.additively_quasi_regular_index == 0) {
      // The cycle of a finite cyclic semigroup contains an idempotent.
      throw Error(ErrorKind::InternalTheoremViolation,
                  "no additively regular multiple of " + s.name(a));
    }
    return out;
  }

  ElementSet reg_plus(FiniteSemiring const& s) {
    ElementSet out;
    for (Element a = 0; a < s.order(); ++a) {
      if (is_additively_regular(s, a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  ElementSet cr_set(FiniteSemiring const& s) {
    ElementSet out;
    for (Element a = 0; a < s.order(); ++a) {
      if (is_completely_regular(s, a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  Element first_regular_multiple(FiniteSemiring const& s, Element a) {
    for (auto na : cyclic_orbit(s, a, Op::Add).terms) {
      if (is_additively_regular(s, na)) {
        return na;
      }
    }
    throw Error(ErrorKind::InternalTheoremViolation,
                "no additively regular multiple of " + s.name(a));
  }

  Element idempotent_power(FiniteSemiring const& s, Element a) {
    for (auto na : cyclic_orbit(s, a, Op::Add).terms) {
      if (s.add(na, na) == na) {
        return na;
      }
    }
    throw Error(ErrorKind::InternalTheoremViolation,
                "no idempotent multiple of " + s.name(a));
  }

}  // namespace semikit
