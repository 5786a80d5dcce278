#include "semikit/classify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

#include "semikit/elements.hpp"
#include "semikit/error.hpp"
#include "semikit/relations.hpp"
#include "semikit/structure.hpp"

namespace semikit {

  namespace {

    struct ClassInfo {
      SemiringClass    cls;
      std::string_view name;
      std::string_view tag;
    };

    constexpr std::array<ClassInfo, kNumClasses> kClassInfo = {{
        {SemiringClass::AdditivelyRegular, "additively-regular", "AR"},
        {SemiringClass::AdditivelyInverse, "additively-inverse", "AI"},
        {SemiringClass::AdditivelyQuasiInverse,
         "additively-quasi-inverse",
         "AQI"},
        {SemiringClass::CompletelyRegular, "completely-regular", "CR"},
        {SemiringClass::QuasiCompletelyRegular,
         "quasi-completely-regular",
         "QCR"},
        {SemiringClass::QuasiCompletelyInverse,
         "quasi-completely-inverse",
         "QCI"},
        {SemiringClass::StronglyAdditivelyQuasiInverse,
         "strongly-additively-quasi-inverse",
         "SAQI"},
        {SemiringClass::StronglyAdditivelyQuasiCompletelyInverse,
         "strongly-additively-quasi-completely-inverse",
         "SAQCI"},
        {SemiringClass::GeneralizedClifford, "generalized-clifford", "GC"},
        {SemiringClass::SkewRing, "skew-ring", "SR"},
        {SemiringClass::QuasiSkewRing, "quasi-skew-ring", "QSR"},
        {SemiringClass::BLattice, "b-lattice", "BL"},
        {SemiringClass::CompletelySimple, "completely-simple", "CS"},
        {SemiringClass::CompletelyArchimedean,
         "completely-archimedean",
         "CA"},
    }};

    Verdict yes(std::string evidence) {
      return {true, std::move(evidence)};
    }

    Verdict no(std::string evidence) {
      return {false, std::move(evidence)};
    }

    Verdict for_all(FiniteSemiring const&                s,
                    std::function<bool(Element)> const& pred,
                    std::string const&                  failure) {
      for (Element a = 0; a < s.order(); ++a) {
        if (!pred(a)) {
          return no(failure + " at " + s.name(a));
        }
      }
      return yes("all elements");
    }

    Verdict both(Verdict const& x, Verdict const& y) {
      if (!x.holds) {
        return x;
      }
      if (!y.holds) {
        return y;
      }
      if (x.evidence.find(y.evidence) != std::string::npos) {
        return x;
      }
      return yes(x.evidence + "; " + y.evidence);
    }

    bool has_multiple_with(FiniteSemiring const&                s,
                           Element                              a,
                           std::function<bool(Element)> const& pred) {
      auto terms = cyclic_orbit(s, a, Op::Add).terms;
      return std::any_of(terms.begin(), terms.end(), pred);
    }

    Verdict additively_quasi_regular(FiniteSemiring const& s) {
      return for_all(
          s,
          [&](Element a) {
            return has_multiple_with(
                s, a, [&](Element x) { return is_additively_regular(s, x); });
          },
          "no additively regular multiple");
    }

    Verdict idempotents_commute(FiniteSemiring const& s) {
      auto idem = additive_idempotents(s);
      for (auto e : idem) {
        for (auto f : idem) {
          if (s.add(e, f) != s.add(f, e)) {
            return no(s.name(e) + "+" + s.name(f) + " != " + s.name(f) + "+"
                      + s.name(e));
          }
        }
      }
      return yes("E+ = " + format_set(s, idem) + " commutes");
    }

    Verdict single_block(FiniteSemiring const& s,
                         Partition const&      p,
                         std::string const&    what) {
      if (p.num_blocks() == 1) {
        return yes(what + " is universal");
      }
      return no(what + " classes " + format_partition(s, p));
    }

    Verdict compute(FiniteSemiring const& s, SemiringClass c) {
      switch (c) {
        case SemiringClass::AdditivelyRegular:
          return for_all(
              s,
              [&](Element a) { return is_additively_regular(s, a); },
              "not additively regular");
        case SemiringClass::AdditivelyInverse:
          return for_all(
              s,
              [&](Element a) {
                return additive_inverses(s, a).inverses.size() == 1;
              },
              "no unique additive inverse");
        case SemiringClass::AdditivelyQuasiInverse:
          return for_all(
              s,
              [&](Element a) {
                return has_multiple_with(s, a, [&](Element x) {
                  return additive_inverses(s, x).inverses.size() == 1;
                });
              },
              "no multiple with a unique additive inverse");
        case SemiringClass::CompletelyRegular:
          return for_all(
              s,
              [&](Element a) { return is_completely_regular(s, a); },
              "not completely regular");
        case SemiringClass::QuasiCompletelyRegular:
          return for_all(
              s,
              [&](Element a) {
                return has_multiple_with(s, a, [&](Element x) {
                  return is_completely_regular(s, x);
                });
              },
              "no completely regular multiple");
        case SemiringClass::QuasiCompletelyInverse:
          return both(compute(s, SemiringClass::QuasiCompletelyRegular),
                      compute(s, SemiringClass::AdditivelyQuasiInverse));
        case SemiringClass::StronglyAdditivelyQuasiInverse:
          return both(additively_quasi_regular(s), idempotents_commute(s));
        case SemiringClass::StronglyAdditivelyQuasiCompletelyInverse:
          return both(
              compute(s, SemiringClass::QuasiCompletelyRegular),
              compute(s, SemiringClass::StronglyAdditivelyQuasiInverse));
        case SemiringClass::GeneralizedClifford: {
          auto v = both(compute(s, SemiringClass::CompletelyRegular),
                        compute(s, SemiringClass::AdditivelyInverse));
          if (!v.holds) {
            return v;
          }
          auto idem = additive_idempotents(s);
          if (!is_k_ideal(s, idem)) {
            return no("E+ = " + format_set(s, idem) + " is not a k-ideal");
          }
          return yes("E+ = " + format_set(s, idem) + " is a k-ideal");
        }
        case SemiringClass::SkewRing:
          return is_skew_ring(s) ? yes("additive reduct is a group")
                                 : no("additive reduct is "
                                      + to_string(reduct_kind(s, Op::Add)));
        case SemiringClass::QuasiSkewRing: {
          auto r = quasi_skew_ring_check(s);
          if (r.skew_ring_core) {
            return yes("core " + format_set(s, *r.core));
          }
          return no("no subskew-ring holds a multiple of every element");
        }
        case SemiringClass::BLattice: {
          auto add = reduct_kind(s, Op::Add);
          auto mul = reduct_kind(s, Op::Mul);
          if (!add.has(ReductFlag::Semilattice)) {
            return no("additive reduct is " + to_string(add));
          }
          if (!mul.has(ReductFlag::Band)) {
            return no("multiplicative reduct is " + to_string(mul));
          }
          return yes("semilattice + band");
        }
        case SemiringClass::CompletelySimple:
          return both(compute(s, SemiringClass::CompletelyRegular),
                      single_block(s, green_plus(s, GreenKind::J), "J+"));
        case SemiringClass::CompletelyArchimedean:
          return both(
              compute(s, SemiringClass::QuasiCompletelyRegular),
              single_block(s, green_star_plus(s, GreenKind::J), "J*+"));
      }
      throw Error(ErrorKind::UnknownClassName, "unhandled class");
    }

    void check_implications(ClassReport const& r) {
      using C = SemiringClass;
      std::pair<C, C> const implications[] = {
          {C::SkewRing, C::QuasiSkewRing},
          {C::SkewRing, C::GeneralizedClifford},
          {C::StronglyAdditivelyQuasiCompletelyInverse,
           C::QuasiCompletelyInverse},
          {C::QuasiCompletelyInverse, C::QuasiCompletelyRegular},
          {C::CompletelyRegular, C::QuasiCompletelyRegular},
          {C::CompletelyRegular, C::AdditivelyRegular},
          {C::GeneralizedClifford, C::CompletelyRegular},
          {C::GeneralizedClifford, C::AdditivelyInverse},
          {C::AdditivelyInverse, C::AdditivelyRegular},
          {C::AdditivelyInverse, C::AdditivelyQuasiInverse},
          {C::BLattice, C::CompletelyRegular},
          {C::CompletelySimple, C::CompletelyRegular},
          {C::CompletelySimple, C::CompletelyArchimedean},
          {C::CompletelyArchimedean, C::QuasiCompletelyRegular},
      };
      for (auto [from, to] : implications) {
        if (r.holds(from) && !r.holds(to)) {
          throw Error(ErrorKind::InternalTheoremViolation,
                      std::string(class_name(from)) + " holds but "
                          + std::string(class_name(to)) + " does not");
        }
      }
    }

    // Classes of the unique partition into blocks with one idempotent each:
    // a and b share a block iff their multiples reach the same idempotent.
    Partition idempotent_power_partition(FiniteSemiring const& s) {
      std::vector<std::size_t> ids;
      for (Element a = 0; a < s.order(); ++a) {
        ids.push_back(idempotent_power(s, a));
      }
      return Partition(std::move(ids));
    }

    // Every block is closed and a quasi skew-ring.
    Verdict blocks_are_quasi_skew_rings(FiniteSemiring const& s,
                                        Partition const&      p) {
      for (auto const& block : p.blocks()) {
        if (!is_closed(s, block)) {
          return no(format_set(s, block) + " is not closed");
        }
        if (!has_class(subsemiring(s, block).semiring,
                       SemiringClass::QuasiSkewRing)) {
          return no(format_set(s, block) + " is not a quasi skew-ring");
        }
      }
      return yes("classes " + format_partition(s, p));
    }

    Verdict idempotent_quotient(FiniteSemiring const& s,
                                Partition const&      p,
                                bool                  b_lattice) {
      if (!is_compatible(s, p)) {
        return no(format_partition(s, p) + " is not a congruence");
      }
      auto y = quotient(s, p);
      for (Element a = 0; a < y.order(); ++a) {
        if (y.add(a, a) != a || y.mul(a, a) != a) {
          return no("quotient is not idempotent at " + y.name(a));
        }
      }
      if (b_lattice && !is_b_lattice(y)) {
        return no("quotient is not a b-lattice");
      }
      return yes("quotient of order " + std::to_string(y.order()));
    }

    Verdict b_lattice_of_completely_archimedean(FiniteSemiring const& s) {
      std::vector<Partition> candidates;
      if (s.order() <= kTheoremCongruenceBound) {
        for (auto& c : enumerate_congruences(s, kTheoremCongruenceBound)) {
          candidates.push_back(std::move(c.partition));
        }
      } else {
        candidates.push_back(green_star_plus(s, GreenKind::J));
      }
      for (auto const& p : candidates) {
        if (!is_compatible(s, p) || !is_b_lattice(quotient(s, p))) {
          continue;
        }
        bool ok = true;
        for (auto const& block : p.blocks()) {
          auto sub = subsemiring(s, block).semiring;
          if (!is_quasi_completely_regular(sub)
              || green_star_plus(sub, GreenKind::J).num_blocks() != 1) {
            ok = false;
            break;
          }
        }
        if (ok) {
          return yes("congruence " + format_partition(s, p));
        }
      }
      return no("no b-lattice congruence with completely Archimedean "
                "classes");
    }

    ConditionVerdict condition(std::string label,
                               std::string description,
                               Verdict     v) {
      return {std::move(label),
              std::move(description),
              v.holds,
              std::move(v.evidence)};
    }

    Verdict pairs_have_common_multiple(FiniteSemiring const& s,
                                       ElementSet const&     lhs,
                                       ElementSet const&     rhs) {
      for (auto a : lhs) {
        for (auto f : rhs) {
          if (!has_common_multiple(s, s.add(a, f), s.add(f, a))) {
            return no("no m with m(" + s.name(a) + "+" + s.name(f) + ") = m("
                      + s.name(f) + "+" + s.name(a) + ")");
          }
        }
      }
      return yes("all pairs");
    }

  }  // namespace

  std::string_view class_name(SemiringClass c) noexcept {
    return kClassInfo[static_cast<std::size_t>(c)].name;
  }

  std::string_view class_tag(SemiringClass c) noexcept {
    return kClassInfo[static_cast<std::size_t>(c)].tag;
  }

  SemiringClass parse_class_name(std::string_view name) {
    for (auto const& info : kClassInfo) {
      if (info.name == name || info.tag == name) {
        return info.cls;
      }
    }
    throw Error(ErrorKind::UnknownClassName,
                "unknown class name '" + std::string(name) + "'");
  }

  Verdict evaluate_class(FiniteSemiring const& s, SemiringClass c) {
    return compute(s, c);
  }

  bool has_class(FiniteSemiring const& s, SemiringClass c) {
    return compute(s, c).holds;
  }

  ClassReport classify(FiniteSemiring const& s) {
    ClassReport report;
    for (auto c : kAllClasses) {
      report.verdicts[static_cast<std::size_t>(c)] = compute(s, c);
    }
    check_implications(report);
    return report;
  }

  bool is_additively_quasi_inverse(FiniteSemiring const& s) {
    return has_class(s, SemiringClass::AdditivelyQuasiInverse);
  }

  bool is_quasi_completely_regular(FiniteSemiring const& s) {
    return has_class(s, SemiringClass::QuasiCompletelyRegular);
  }

  bool is_completely_simple(FiniteSemiring const& s) {
    return has_class(s, SemiringClass::CompletelySimple);
  }

  bool is_completely_archimedean(FiniteSemiring const& s) {
    if (!is_quasi_completely_regular(s)) {
      throw Error(ErrorKind::NotQuasiCompletelyRegular,
                  "complete Archimedean-ness needs a quasi completely "
                  "regular semiring");
    }
    return has_class(s, SemiringClass::CompletelyArchimedean);
  }

  bool has_common_multiple(FiniteSemiring const& s, Element u, Element v) {
    std::set<std::pair<Element, Element>> seen;
    Element                               x = u, y = v;
    while (seen.emplace(x, y).second) {
      if (x == y) {
        return true;
      }
      x = s.add(x, u);
      y = s.add(y, v);
    }
    return false;
  }

  std::string_view theorem_name(TheoremId id) noexcept {
    switch (id) {
      case TheoremId::QSR3: return "QSR3";
      case TheoremId::QCR5: return "QCR5";
      case TheoremId::QCI5: return "QCI5";
      case TheoremId::SAQCI3: return "SAQCI3";
      case TheoremId::HJEQ: return "HJEQ";
    }
    return "?";
  }

  TheoremId parse_theorem_id(std::string_view name) {
    for (auto id : kAllTheorems) {
      if (theorem_name(id) == name) {
        return id;
      }
    }
    throw Error(ErrorKind::UnknownTheoremId,
                "unknown theorem id '" + std::string(name) + "'");
  }

  bool TheoremReport::agreement() const noexcept {
    return std::all_of(conditions.begin(), conditions.end(), [&](auto& c) {
      return c.holds == conditions.front().holds;
    });
  }

  TheoremReport verify_equivalence(FiniteSemiring const& s, TheoremId id) {
    using C = SemiringClass;
    TheoremReport report;
    report.theorem = theorem_name(id);
    auto& out      = report.conditions;
    switch (id) {
      case TheoremId::QSR3: {
        auto q = quasi_skew_ring_check(s);
        out.push_back(condition(
            "i",
            "additively quasi regular with exactly one additive idempotent",
            q.unique_idempotent
                ? yes("E+ = " + format_set(s, additive_idempotents(s)))
                : no("E+ = " + format_set(s, additive_idempotents(s)))));
        out.push_back(condition(
            "ii",
            "quasi skew-ring",
            q.skew_ring_core ? yes("core " + format_set(s, *q.core))
                             : no("no subskew-ring core")));
        out.push_back(condition(
            "iii",
            "nil-extension of a skew-ring",
            q.nil_extension ? yes("kernel " + format_set(s, *q.kernel))
                            : no("no skew-ring bi-ideal kernel")));
        break;
      }
      case TheoremId::QCR5: {
        auto forced = idempotent_power_partition(s);
        out.push_back(condition("i",
                                "quasi completely regular",
                                compute(s, C::QuasiCompletelyRegular)));
        out.push_back(condition(
            "ii",
            "every H*+-class is a quasi skew-ring",
            blocks_are_quasi_skew_rings(s, green_star_plus(s, GreenKind::H))));
        out.push_back(condition("iii",
                                "disjoint union of quasi skew-rings",
                                blocks_are_quasi_skew_rings(s, forced)));
        out.push_back(
            condition("iv",
                      "b-lattice of completely Archimedean semirings",
                      b_lattice_of_completely_archimedean(s)));
        out.push_back(
            condition("v",
                      "idempotent semiring of quasi skew-rings",
                      both(blocks_are_quasi_skew_rings(s, forced),
                           idempotent_quotient(s, forced, false))));
        break;
      }
      case TheoremId::QCI5: {
        auto qcr    = compute(s, C::QuasiCompletelyRegular);
        auto idem   = additive_idempotents(s);
        auto forced = idempotent_power_partition(s);
        out.push_back(condition(
            "i", "quasi completely inverse", compute(s, C::QuasiCompletelyInverse)));
        out.push_back(condition(
            "ii",
            "QCR and m(a+f) = m(f+a) for all a, f in E+",
            both(qcr, pairs_have_common_multiple(s, all_elements(s.order()), idem))));
        out.push_back(condition(
            "iii",
            "QCR and m(e+f) = m(f+e) for all e, f in E+",
            both(qcr, pairs_have_common_multiple(s, idem, idem))));
        Verdict swap = yes("all pairs");
        {
          auto h = green_star_plus(s, GreenKind::H);
          for (Element a = 0; a < s.order() && swap.holds; ++a) {
            for (Element b = 0; b < s.order() && swap.holds; ++b) {
              if (!h.related(s.add(a, b), s.add(b, a))) {
                swap = no(s.name(a) + "+" + s.name(b) + " not H*+ "
                          + s.name(b) + "+" + s.name(a));
              }
            }
          }
        }
        out.push_back(condition(
            "iv", "QCR and (a+b) H*+ (b+a) for all a, b", both(qcr, swap)));
        out.push_back(condition(
            "v",
            "b-lattice of quasi skew-rings",
            both(blocks_are_quasi_skew_rings(s, forced),
                 idempotent_quotient(s, forced, true))));
        break;
      }
      case TheoremId::SAQCI3: {
        auto    qcr = compute(s, C::QuasiCompletelyRegular);
        auto    reg = reg_plus(s);
        Verdict reg_inverse =
            no("Reg+ = " + format_set(s, reg) + " is not a subsemiring");
        if (is_closed(s, reg)) {
          auto sub = subsemiring(s, reg).semiring;
          reg_inverse =
              reduct_kind(sub, Op::Add).has(ReductFlag::Inverse)
                  ? yes("Reg+ = " + format_set(s, reg))
                  : no("Reg+ = " + format_set(s, reg)
                       + " is not additively inverse");
        }
        auto    idem = additive_idempotents(s);
        Verdict idem_closed = yes("E+ closed under +");
        for (auto e : idem) {
          for (auto f : idem) {
            if (idem_closed.holds && !contains(idem, s.add(e, f))) {
              idem_closed = no(s.name(e) + "+" + s.name(f) + " not in E+");
            }
          }
        }
        out.push_back(condition(
            "i",
            "strongly additively quasi completely inverse",
            compute(s, C::StronglyAdditivelyQuasiCompletelyInverse)));
        out.push_back(condition(
            "ii",
            "QCR and Reg+ an additive inverse subsemiring",
            both(qcr, reg_inverse)));
        out.push_back(condition(
            "iii",
            "QCI and e+f in E+ for all e, f in E+",
            both(compute(s, C::QuasiCompletelyInverse), idem_closed)));
        break;
      }
      case TheoremId::HJEQ: {
        auto h = green_star_plus(s, GreenKind::H);
        auto j = green_star_plus(s, GreenKind::J);
        out.push_back(condition(
            "i", "quasi completely inverse", compute(s, C::QuasiCompletelyInverse)));
        out.push_back(condition(
            "ii",
            "additively quasi regular and H*+ = J*+",
            both(additively_quasi_regular(s),
                 h == j ? yes("H*+ = J*+ = " + format_partition(s, h))
                        : no("H*+ = " + format_partition(s, h) + ", J*+ = "
                             + format_partition(s, j)))));
        break;
      }
    }
    return report;
  }

  TheoremReport verify_ideal_corollary(FiniteSemiring const& s) {
    using C = SemiringClass;
    TheoremReport report;
    report.theorem = "IDEAL";
    auto reg       = reg_plus(s);
    auto idem      = additive_idempotents(s);
    report.conditions.push_back(condition(
        "i",
        "strongly additively quasi completely inverse",
        compute(s, C::StronglyAdditivelyQuasiCompletelyInverse)));
    Verdict ideals = yes("Reg+ and E+ are ideals");
    if (!is_ideal(s, reg)) {
      ideals = no("Reg+ = " + format_set(s, reg) + " is not an ideal");
    } else if (!is_ideal(s, idem)) {
      ideals = no("E+ = " + format_set(s, idem) + " is not an ideal");
    }
    report.conditions.push_back(
        condition("ii",
                  "QCI with Reg+ and E+ ideals",
                  both(compute(s, C::QuasiCompletelyInverse), ideals)));
    return report;
  }

}  // namespace semikit
