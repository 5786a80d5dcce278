#include "semikit/kernel.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <utility>

#include "semikit/error.hpp"

namespace semikit {

  OpTable::OpTable(std::size_t order, std::vector<Element> entries)
      : _order(order), _entries(std::move(entries)) {
    if (_entries.size() != _order * _order) {
      throw Error(ErrorKind::DimensionMismatch,
                  "table of order " + std::to_string(_order) + " needs "
                      + std::to_string(_order * _order) + " entries, got "
                      + std::to_string(_entries.size()));
    }
    for (std::size_t i = 0; i < _entries.size(); ++i) {
      if (_entries[i] >= _order) {
        throw Error(ErrorKind::OutOfRange,
                    "entry at row " + std::to_string(i / _order) + ", column "
                        + std::to_string(i % _order) + " is "
                        + std::to_string(_entries[i]) + ", exceeds "
                        + std::to_string(_order - 1));
      }
    }
  }

  bool is_valid_name(std::string_view name) noexcept {
    if (name.empty()) {
      return false;
    }
    return std::none_of(name.begin(), name.end(), [](char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0 || c == '#';
    });
  }

  FiniteSemiring::FiniteSemiring(std::vector<std::string> names,
                                 OpTable                  add,
                                 OpTable                  mul)
      : _names(std::move(names)), _add(std::move(add)), _mul(std::move(mul)) {
    if (_add.order() != _mul.order() || _add.order() != _names.size()) {
      throw Error(ErrorKind::DimensionMismatch,
                  "carrier has " + std::to_string(_names.size())
                      + " elements but tables have orders "
                      + std::to_string(_add.order()) + " and "
                      + std::to_string(_mul.order()));
    }
    std::set<std::string_view> seen;
    for (auto const& nm : _names) {
      if (!is_valid_name(nm)) {
        throw Error(ErrorKind::InvalidName,
                    "element name '" + nm + "' is empty or has whitespace");
      }
      if (!seen.insert(nm).second) {
        throw Error(ErrorKind::InvalidName,
                    "duplicate element name '" + nm + "'");
      }
    }
  }

  std::optional<Element> FiniteSemiring::find(std::string_view name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    if (it == _names.end()) {
      return std::nullopt;
    }
    return static_cast<Element>(it - _names.begin());
  }

  Element PartialSemiring::apply(Op op, Element a, Element b) const noexcept {
    if (a == kUndefined || b == kUndefined) {
      return kUndefined;
    }
    auto const& t = op == Op::Add ? add : mul;
    return t[a * order() + b];
  }

  namespace {

    void record_once(std::vector<LawFailure>& out,
                     std::vector<bool>&       seen,
                     std::size_t              law,
                     char const*              name,
                     Element                  a,
                     Element                  b,
                     Element                  c) {
      if (!seen[law]) {
        seen[law] = true;
        out.push_back({name, {a, b, c}});
      }
    }

    constexpr char const* kLawNames[] = {"add-associativity",
                                         "mul-associativity",
                                         "left-distributivity",
                                         "right-distributivity"};

    // Failures are collected per law during the scan and then emitted in
    // the fixed law order above.
    ValidationReport sorted(std::vector<LawFailure> failures) {
      ValidationReport report;
      for (auto const* law : kLawNames) {
        for (auto& f : failures) {
          if (f.law == law) {
            report.failures.push_back(std::move(f));
          }
        }
      }
      return report;
    }

  }  // namespace

  ValidationReport validate_semiring(FiniteSemiring const& s) {
    auto const              n = static_cast<Element>(s.order());
    std::vector<LawFailure> failures;
    std::vector<bool>       seen(4, false);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        for (Element c = 0; c < n; ++c) {
          if (s.add(s.add(a, b), c) != s.add(a, s.add(b, c))) {
            record_once(failures, seen, 0, kLawNames[0], a, b, c);
          }
          if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c))) {
            record_once(failures, seen, 1, kLawNames[1], a, b, c);
          }
          if (s.mul(a, s.add(b, c)) != s.add(s.mul(a, b), s.mul(a, c))) {
            record_once(failures, seen, 2, kLawNames[2], a, b, c);
          }
          if (s.mul(s.add(b, c), a) != s.add(s.mul(b, a), s.mul(c, a))) {
            record_once(failures, seen, 3, kLawNames[3], a, b, c);
          }
        }
      }
    }
    return sorted(std::move(failures));
  }

  ValidationReport validate_semiring(std::vector<std::string> names,
                                     OpTable const&           add,
                                     OpTable const&           mul) {
    return validate_semiring(FiniteSemiring(std::move(names), add, mul));
  }

  ValidationReport validate_partial(PartialSemiring const& p) {
    auto const n = p.order();
    if (p.add.size() != n * n || p.mul.size() != n * n) {
      throw Error(ErrorKind::DimensionMismatch,
                  "partial tables must have " + std::to_string(n * n)
                      + " cells");
    }
    for (auto const* t : {&p.add, &p.mul}) {
      for (auto v : *t) {
        if (v != kUndefined && v >= n) {
          throw Error(ErrorKind::OutOfRange,
                      "partial table entry " + std::to_string(v)
                          + " exceeds " + std::to_string(n - 1));
        }
      }
    }
    std::vector<LawFailure> failures;
    std::vector<bool>       seen(4, false);
    auto assoc = [&](Op op, Element a, Element b, Element c) {
      Element lhs = p.apply(op, p.apply(op, a, b), c);
      Element rhs = p.apply(op, a, p.apply(op, b, c));
      return lhs == rhs;  // both undefined, or both defined and equal
    };
    auto distrib = [&](Element lhs, Element rhs) {
      return lhs == kUndefined || rhs == kUndefined || lhs == rhs;
    };
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        for (Element c = 0; c < n; ++c) {
          if (!assoc(Op::Add, a, b, c)) {
            record_once(failures, seen, 0, kLawNames[0], a, b, c);
          }
          if (!assoc(Op::Mul, a, b, c)) {
            record_once(failures, seen, 1, kLawNames[1], a, b, c);
          }
          if (!distrib(p.apply(Op::Mul, a, p.apply(Op::Add, b, c)),
                       p.apply(Op::Add,
                               p.apply(Op::Mul, a, b),
                               p.apply(Op::Mul, a, c)))) {
            record_once(failures, seen, 2, kLawNames[2], a, b, c);
          }
          if (!distrib(p.apply(Op::Mul, p.apply(Op::Add, b, c), a),
                       p.apply(Op::Add,
                               p.apply(Op::Mul, b, a),
                               p.apply(Op::Mul, c, a)))) {
            record_once(failures, seen, 3, kLawNames[3], a, b, c);
          }
        }
      }
    }
    return sorted(std::move(failures));
  }

  ReductFlags reduct_kind(FiniteSemiring const& s, Op which) {
    auto const  n = static_cast<Element>(s.order());
    auto const& t = s.table(which);
    ReductFlags flags;
    auto        set = [&](ReductFlag f) {
      flags.bits |= static_cast<unsigned>(f);
    };

    bool band = true;
    bool comm = true;
    for (Element a = 0; a < n; ++a) {
      band = band && t(a, a) == a;
      for (Element b = 0; b < n; ++b) {
        comm = comm && t(a, b) == t(b, a);
      }
    }
    if (band) {
      set(ReductFlag::Band);
      if (comm) {
        set(ReductFlag::Semilattice);
      }
    }

    std::optional<Element> identity;
    for (Element e = 0; e < n && !identity; ++e) {
      bool ok = true;
      for (Element a = 0; a < n && ok; ++a) {
        ok = t(e, a) == a && t(a, e) == a;
      }
      if (ok) {
        identity = e;
      }
    }
    if (identity) {
      bool group = true;
      for (Element a = 0; a < n && group; ++a) {
        bool inv = false;
        for (Element x = 0; x < n && !inv; ++x) {
          inv = t(a, x) == *identity && t(x, a) == *identity;
        }
        group = inv;
      }
      if (group) {
        set(ReductFlag::Group);
      }
    }

    bool inverse = true;
    for (Element a = 0; a < n && inverse; ++a) {
      std::size_t count = 0;
      for (Element x = 0; x < n; ++x) {
        if (t(t(a, x), a) == a && t(t(x, a), x) == x) {
          ++count;
        }
      }
      inverse = count == 1;
    }
    if (inverse) {
      set(ReductFlag::Inverse);
    }
    if (flags.bits == 0) {
      set(ReductFlag::Plain);
    }
    return flags;
  }

  std::string to_string(ReductFlags flags) {
    std::string out;
    auto        add = [&](ReductFlag f, char const* name) {
      if (flags.has(f)) {
        out += out.empty() ? "" : ",";
        out += name;
      }
    };
    add(ReductFlag::Group, "GROUP");
    add(ReductFlag::Band, "BAND");
    add(ReductFlag::Semilattice, "SEMILATTICE");
    add(ReductFlag::Inverse, "INVERSE");
    add(ReductFlag::Plain, "PLAIN");
    return out;
  }

  bool is_b_lattice(FiniteSemiring const& s) {
    return reduct_kind(s, Op::Add).has(ReductFlag::Semilattice)
           && reduct_kind(s, Op::Mul).has(ReductFlag::Band);
  }

  Element CyclicOrbit::at(std::uint64_t k) const noexcept {
    if (k <= terms.size()) {
      return terms[k - 1];
    }
    return terms[tail + (k - 1 - tail) % period];
  }

  CyclicOrbit cyclic_orbit(FiniteSemiring const& s, Element a, Op which) {
    CyclicOrbit       orbit;
    std::vector<long> position(s.order(), -1);
    Element           x = a;
    while (position[x] < 0) {
      position[x] = static_cast<long>(orbit.terms.size());
      orbit.terms.push_back(x);
      x = s.apply(which, x, a);
    }
    orbit.tail   = static_cast<std::size_t>(position[x]);
    orbit.period = orbit.terms.size() - orbit.tail;
    return orbit;
  }

  Element repeat(FiniteSemiring const& s,
                 Element               a,
                 std::uint64_t         k,
                 Op                    which) {
    if (k == 0) {
      throw Error(ErrorKind::OutOfRange, "repeat count must be positive");
    }
    if (a >= s.order()) {
      throw Error(ErrorKind::OutOfRange, "element index out of range");
    }
    return cyclic_orbit(s, a, which).at(k);
  }

  ElementSet all_elements(std::size_t n) {
    ElementSet out(n);
    std::iota(out.begin(), out.end(), Element{0});
    return out;
  }

  bool contains(ElementSet const& set, Element e) noexcept {
    return std::binary_search(set.begin(), set.end(), e);
  }

  std::vector<char> membership(ElementSet const& set, std::size_t n) {
    std::vector<char> in(n, 0);
    for (auto e : set) {
      in.at(e) = 1;
    }
    return in;
  }

  bool is_closed(FiniteSemiring const& s, ElementSet const& set) {
    auto in = membership(set, s.order());
    for (auto a : set) {
      for (auto b : set) {
        if (!in[s.add(a, b)] || !in[s.mul(a, b)]) {
          return false;
        }
      }
    }
    return true;
  }

  std::string format_elements(FiniteSemiring const&       s,
                              std::span<Element const> elements) {
    std::string out;
    for (auto e : elements) {
      out += out.empty() ? "" : " ";
      out += s.name(e);
    }
    return out;
  }

  std::string format_set(FiniteSemiring const& s, ElementSet const& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
      out += i == 0 ? "" : ",";
      out += s.name(set[i]);
    }
    return out + "}";
  }

  Subsemiring subsemiring(FiniteSemiring const& s, ElementSet const& set) {
    if (set.empty()) {
      throw Error(ErrorKind::EmptySubset, "subsemiring of an empty subset");
    }
    if (!is_closed(s, set)) {
      throw Error(ErrorKind::NotSubsemiring,
                  format_set(s, set) + " is not closed under + and ·");
    }
    std::vector<Element> local(s.order(), kUndefined);
    for (std::size_t i = 0; i < set.size(); ++i) {
      local[set[i]] = static_cast<Element>(i);
    }
    auto const               m = set.size();
    std::vector<std::string> names;
    std::vector<Element>     add(m * m), mul(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      names.push_back(s.name(set[i]));
      for (std::size_t j = 0; j < m; ++j) {
        add[i * m + j] = local[s.add(set[i], set[j])];
        mul[i * m + j] = local[s.mul(set[i], set[j])];
      }
    }
    return {FiniteSemiring(std::move(names),
                           OpTable(m, std::move(add)),
                           OpTable(m, std::move(mul))),
            set};
  }

  PartialSemiring restrict_partial(FiniteSemiring const& s,
                                   ElementSet const&     set) {
    std::vector<Element> local(s.order(), kUndefined);
    for (std::size_t i = 0; i < set.size(); ++i) {
      local[set[i]] = static_cast<Element>(i);
    }
    auto const      m = set.size();
    PartialSemiring p;
    p.add.resize(m * m);
    p.mul.resize(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      p.names.push_back(s.name(set[i]));
      for (std::size_t j = 0; j < m; ++j) {
        p.add[i * m + j] = local[s.add(set[i], set[j])];
        p.mul[i * m + j] = local[s.mul(set[i], set[j])];
      }
    }
    return p;
  }

  FiniteSemiring permute(FiniteSemiring const&     s,
                         std::span<Element const> perm) {
    auto const n = s.order();
    if (perm.size() != n) {
      throw Error(ErrorKind::DimensionMismatch,
                  "permutation length differs from the carrier order");
    }
    std::vector<std::string> names(n);
    std::vector<Element>     add(n * n), mul(n * n);
    for (Element a = 0; a < n; ++a) {
      names[perm[a]] = s.name(a);
      for (Element b = 0; b < n; ++b) {
        add[perm[a] * n + perm[b]] = perm[s.add(a, b)];
        mul[perm[a] * n + perm[b]] = perm[s.mul(a, b)];
      }
    }
    return FiniteSemiring(std::move(names),
                          OpTable(n, std::move(add)),
                          OpTable(n, std::move(mul)));
  }

}  // namespace semikit
