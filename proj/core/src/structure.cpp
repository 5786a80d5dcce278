#include "semikit/structure.hpp"

#include <algorithm>

#include "semikit/classify.hpp"
#include "semikit/elements.hpp"
#include "semikit/error.hpp"

namespace semikit {

  namespace {

    void require_nonempty(ElementSet const& i) {
      if (i.empty()) {
        throw Error(ErrorKind::EmptySubset, "subset must be nonempty");
      }
    }

    ElementSet lift(Subsemiring const& sub, ElementSet const& local) {
      ElementSet out;
      for (auto e : local) {
        out.push_back(sub.to_parent[e]);
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    // Subsemiring generated by the given elements.
    ElementSet closure(FiniteSemiring const& s, ElementSet seed) {
      auto in      = membership(seed, s.order());
      bool changed = true;
      while (changed) {
        changed = false;
        auto cur = seed;
        for (auto a : cur) {
          for (auto b : cur) {
            for (auto c : {s.add(a, b), s.mul(a, b)}) {
              if (!in[c]) {
                in[c] = 1;
                seed.push_back(c);
                changed = true;
              }
            }
          }
        }
      }
      std::sort(seed.begin(), seed.end());
      return seed;
    }

    bool every_element_has_multiple_in(FiniteSemiring const& s,
                                       ElementSet const&     r) {
      auto in = membership(r, s.order());
      for (Element a = 0; a < s.order(); ++a) {
        auto terms = cyclic_orbit(s, a, Op::Add).terms;
        if (std::none_of(
                terms.begin(), terms.end(), [&](Element x) { return in[x]; })) {
          return false;
        }
      }
      return true;
    }

    ElementSet h_class_of(FiniteSemiring const& s, Element e) {
      auto       h = green_plus(s, GreenKind::H);
      ElementSet out;
      for (Element a = 0; a < s.order(); ++a) {
        if (h.related(a, e)) {
          out.push_back(a);
        }
      }
      return out;
    }

    // r absorbs t under both operations on both sides.
    bool is_bi_ideal_within(FiniteSemiring const& s,
                            ElementSet const&     t,
                            ElementSet const&     r) {
      auto in = membership(r, s.order());
      for (auto a : r) {
        for (auto x : t) {
          if (!in[s.add(a, x)] || !in[s.add(x, a)] || !in[s.mul(a, x)]
              || !in[s.mul(x, a)]) {
            return false;
          }
        }
      }
      return true;
    }

    [[noreturn]] void invariant_violation(std::string const& what) {
      throw Error(ErrorKind::DecompositionInvariantViolation, what);
    }

  }  // namespace

  bool is_ideal(FiniteSemiring const& s, ElementSet const& i) {
    require_nonempty(i);
    auto in = membership(i, s.order());
    for (auto a : i) {
      for (auto b : i) {
        if (!in[s.add(a, b)]) {
          return false;
        }
      }
      for (Element x = 0; x < s.order(); ++x) {
        if (!in[s.mul(x, a)] || !in[s.mul(a, x)]) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_k_ideal(FiniteSemiring const& s, ElementSet const& i) {
    if (!is_ideal(s, i)) {
      return false;
    }
    auto in = membership(i, s.order());
    for (auto a : i) {
      for (Element x = 0; x < s.order(); ++x) {
        if ((in[s.add(a, x)] || in[s.add(x, a)]) && !in[x]) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_bi_ideal(FiniteSemiring const& s, ElementSet const& i) {
    require_nonempty(i);
    auto in = membership(i, s.order());
    for (auto a : i) {
      for (Element x = 0; x < s.order(); ++x) {
        if (!in[s.add(a, x)] || !in[s.add(x, a)] || !in[s.mul(a, x)]
            || !in[s.mul(x, a)]) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_skew_ring(FiniteSemiring const& s) {
    return reduct_kind(s, Op::Add).has(ReductFlag::Group);
  }

  bool is_skew_ring_subset(FiniteSemiring const& s, ElementSet const& set) {
    if (set.empty() || !is_closed(s, set)) {
      return false;
    }
    return is_skew_ring(subsemiring(s, set).semiring);
  }

  QuasiSkewRingReport quasi_skew_ring_check(FiniteSemiring const& s) {
    QuasiSkewRingReport report;
    auto const          idem = additive_idempotents(s);

    bool quasi_regular = true;
    for (Element a = 0; a < s.order() && quasi_regular; ++a) {
      auto terms    = cyclic_orbit(s, a, Op::Add).terms;
      quasi_regular = std::any_of(terms.begin(), terms.end(), [&](Element x) {
        return is_additively_regular(s, x);
      });
    }
    report.unique_idempotent = quasi_regular && idem.size() == 1;

    // A subskew-ring containing multiples of everything contains the
    // subsemiring generated by its zero, which then already works.
    for (auto e : idem) {
      auto r = closure(s, {e});
      if (is_skew_ring_subset(s, r) && every_element_has_multiple_in(s, r)) {
        report.skew_ring_core = true;
        report.core           = r;
        break;
      }
    }

    // A skew-ring bi-ideal with zero e contains e + H_e = H_e, and is
    // contained in H_e.
    for (auto e : idem) {
      auto h = h_class_of(s, e);
      if (is_bi_ideal(s, h) && is_skew_ring_subset(s, h)
          && every_element_has_multiple_in(s, h)) {
        report.nil_extension = true;
        report.kernel        = h;
        break;
      }
    }
    return report;
  }

  QuasiSkewRingReport quasi_skew_ring_check(FiniteSemiring const& s,
                                            ElementSet const&     t) {
    auto sub    = subsemiring(s, t);
    auto report = quasi_skew_ring_check(sub.semiring);
    if (report.core) {
      report.core = lift(sub, *report.core);
    }
    if (report.kernel) {
      report.kernel = lift(sub, *report.kernel);
    }
    return report;
  }

  ElementSet skew_ring_kernel(FiniteSemiring const& s) {
    auto report = quasi_skew_ring_check(s);
    if (!report.all()) {
      throw Error(ErrorKind::NotQuasiSkewRing,
                  "semiring is not a quasi skew-ring");
    }
    auto e = additive_idempotents(s).front();
    auto h = h_class_of(s, e);
    if (!is_closed(s, h)) {
      throw Error(ErrorKind::InternalTheoremViolation,
                  "H+-class " + format_set(s, h) + " is not closed");
    }
    return h;
  }

  ElementSet skew_ring_kernel(FiniteSemiring const& s, ElementSet const& t) {
    auto sub = subsemiring(s, t);
    return lift(sub, skew_ring_kernel(sub.semiring));
  }

  bool is_nil_extension(FiniteSemiring const& s, ElementSet const& i) {
    if (!is_bi_ideal(s, i)) {
      throw Error(ErrorKind::NotBiIdeal,
                  format_set(s, i) + " is not a bi-ideal");
    }
    return every_element_has_multiple_in(s, i);
  }

  Decomposition decompose_by(FiniteSemiring const& s,
                             Partition const&      p,
                             bool                  require_b_lattice) {
    Decomposition d;
    d.base      = s;
    d.partition = p;
    if (!is_compatible(s, p)) {
      invariant_violation("class partition " + format_partition(s, p)
                          + " is not a semiring congruence");
    }
    d.y = quotient(s, p);
    for (Element a = 0; a < d.y.order(); ++a) {
      if (d.y.add(a, a) != a || d.y.mul(a, a) != a) {
        invariant_violation("quotient is not an idempotent semiring at "
                            + d.y.name(a));
      }
    }
    if (require_b_lattice && !is_b_lattice(d.y)) {
      invariant_violation("quotient is not a b-lattice");
    }
    d.classes = p.blocks();
    for (auto const& t : d.classes) {
      auto report = quasi_skew_ring_check(s, t);
      if (!report.consistent()) {
        throw Error(ErrorKind::InternalTheoremViolation,
                    "quasi skew-ring characterisations disagree on "
                        + format_set(s, t));
      }
      if (!report.all()) {
        invariant_violation("class " + format_set(s, t)
                            + " is not a quasi skew-ring");
      }
      auto sub  = subsemiring(s, t);
      auto idem = additive_idempotents(sub.semiring);
      auto e    = sub.to_parent[idem.front()];
      auto r    = skew_ring_kernel(s, t);
      if (!contains(r, e) || !is_bi_ideal_within(s, t, r)) {
        invariant_violation("kernel " + format_set(s, r)
                            + " is not a bi-ideal of its class");
      }
      if (!is_skew_ring_subset(s, r)) {
        invariant_violation("kernel " + format_set(s, r)
                            + " is not a skew-ring");
      }
      ElementSet nil;
      std::set_difference(
          t.begin(), t.end(), r.begin(), r.end(), std::back_inserter(nil));
      d.idempotents.push_back(e);
      d.kernels.push_back(r);
      d.nil_parts.push_back(restrict_partial(s, nil));
      d.nil_sets.push_back(std::move(nil));
    }
    for (Element a = 0; a < s.order(); ++a) {
      for (Element b = 0; b < s.order(); ++b) {
        auto alpha = d.class_of(a), beta = d.class_of(b);
        if (d.class_of(s.add(a, b)) != d.y.add(alpha, beta)
            || d.class_of(s.mul(a, b)) != d.y.mul(alpha, beta)) {
          invariant_violation("class membership is not compatible at "
                              + s.name(a) + ", " + s.name(b));
        }
      }
    }
    return d;
  }

  Decomposition decompose(FiniteSemiring const& s) {
    for (Element a = 0; a < s.order(); ++a) {
      if (!classify_element(s, a).quasi_completely_regular_index) {
        throw Error(ErrorKind::NotQuasiCompletelyRegular,
                    "no multiple of " + s.name(a) + " is completely regular");
      }
    }
    auto h = green_star_plus(s, GreenKind::H);
    return decompose_by(s, h, is_additively_quasi_inverse(s));
  }

  PsiMap psi(FiniteSemiring const& s, Decomposition const& d) {
    auto idem = additive_idempotents(s);
    for (auto e : idem) {
      for (auto f : idem) {
        if (s.add(e, f) != s.add(f, e)) {
          throw Error(ErrorKind::PreconditionFailed,
                      "additive idempotents " + s.name(e) + " and "
                          + s.name(f) + " do not commute");
        }
      }
    }
    PsiMap map;
    auto   reg = membership(reg_plus(s), s.order());
    for (Element a = 0; a < s.order(); ++a) {
      auto alpha = d.class_of(a);
      auto image = s.add(a, d.idempotents[alpha]);
      if (!reg[image]) {
        throw Error(ErrorKind::InternalTheoremViolation,
                    "psi(" + s.name(a) + ") is not additively regular");
      }
      if (contains(d.kernels[alpha], a) && image != a) {
        throw Error(ErrorKind::InternalTheoremViolation,
                    "psi moves kernel element " + s.name(a));
      }
      map.image.push_back(image);
    }
    return map;
  }

  Partition psi_tilde(FiniteSemiring const& s, Decomposition const& d) {
    auto map = psi(s, d);
    auto p   = Partition::from_equivalence(
        s.order(), [&](Element a, Element b) { return map(a) == map(b); });
    auto reg = reg_plus(s);
    for (auto a : reg) {
      for (auto b : reg) {
        if (a != b && p.related(a, b)) {
          throw Error(ErrorKind::InternalTheoremViolation,
                      "psi identifies regular elements " + s.name(a) + " and "
                          + s.name(b));
        }
      }
    }
    return p;
  }

  bool check_psi_homomorphism(FiniteSemiring const& s,
                              Decomposition const&  d) {
    auto map = psi(s, d);
    for (Element a = 0; a < s.order(); ++a) {
      for (Element b = 0; b < s.order(); ++b) {
        if (map(s.add(a, b)) != s.add(map(a), map(b))
            || map(s.mul(a, b)) != s.mul(map(a), map(b))) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace semikit
