#ifndef SEMIKIT_KERNEL_HPP_
#define SEMIKIT_KERNEL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace semikit {

  // Dense index into a carrier [0, n).
  using Element = std::uint32_t;

  inline constexpr Element kUndefined = 0xFFFFFFFFu;

  // Sorted, duplicate free list of elements.
  using ElementSet = std::vector<Element>;

  enum class Op { Add, Mul };

  // n x n Cayley table, row = left operand.
  class OpTable {
   public:
    OpTable() = default;
    OpTable(std::size_t order, std::vector<Element> entries);

    [[nodiscard]] std::size_t order() const noexcept {
      return _order;
    }
    [[nodiscard]] Element operator()(Element a, Element b) const noexcept {
      return _entries[a * _order + b];
    }
    [[nodiscard]] std::span<Element const> entries() const noexcept {
      return _entries;
    }

    bool operator==(OpTable const&) const = default;

   private:
    std::size_t          _order = 0;
    std::vector<Element> _entries;
  };

  // A finite carrier with named elements and two Cayley tables. The
  // constructor checks shape only; the semiring laws are checked by
  // validate_semiring so that broken tables can still be reported on.
  class FiniteSemiring {
   public:
    FiniteSemiring() = default;
    FiniteSemiring(std::vector<std::string> names, OpTable add, OpTable mul);

    [[nodiscard]] std::size_t order() const noexcept {
      return _names.size();
    }
    [[nodiscard]] std::string const& name(Element e) const {
      return _names.at(e);
    }
    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    [[nodiscard]] std::optional<Element> find(std::string_view name) const;

    [[nodiscard]] Element add(Element a, Element b) const noexcept {
      return _add(a, b);
    }
    [[nodiscard]] Element mul(Element a, Element b) const noexcept {
      return _mul(a, b);
    }
    [[nodiscard]] Element apply(Op op, Element a, Element b) const noexcept {
      return op == Op::Add ? _add(a, b) : _mul(a, b);
    }
    [[nodiscard]] OpTable const& add_table() const noexcept {
      return _add;
    }
    [[nodiscard]] OpTable const& mul_table() const noexcept {
      return _mul;
    }
    [[nodiscard]] OpTable const& table(Op op) const noexcept {
      return op == Op::Add ? _add : _mul;
    }

    // Same tables; names are ignored.
    [[nodiscard]] bool same_tables(FiniteSemiring const& that) const noexcept {
      return _add == that._add && _mul == that._mul;
    }

   private:
    std::vector<std::string> _names;
    OpTable                  _add;
    OpTable                  _mul;
  };

  // Cayley tables whose cells may be kUndefined.
  struct PartialSemiring {
    std::vector<std::string> names;
    std::vector<Element>     add;
    std::vector<Element>     mul;

    [[nodiscard]] std::size_t order() const noexcept {
      return names.size();
    }
    [[nodiscard]] Element apply(Op op, Element a, Element b) const noexcept;
  };

  struct LawFailure {
    std::string          law;
    std::vector<Element> witness;
  };

  struct ValidationReport {
    std::vector<LawFailure> failures;

    [[nodiscard]] bool verdict() const noexcept {
      return failures.empty();
    }
  };

  // Checks associativity of both operations and both distributive laws.
  // Reports the first witness per law in row-major (a, b, c) order.
  ValidationReport validate_semiring(FiniteSemiring const& s);

  // Convenience overload for raw tables; throws DimensionMismatch/OutOfRange.
  ValidationReport validate_semiring(std::vector<std::string> names,
                                     OpTable const&           add,
                                     OpTable const&           mul);

  // Partial laws: one grouping of an associative product is defined iff
  // the other is, and then they agree; distributive laws must agree
  // whenever both sides are defined.
  ValidationReport validate_partial(PartialSemiring const& p);

  enum class ReductFlag : unsigned {
    Group       = 1u << 0,
    Band        = 1u << 1,
    Semilattice = 1u << 2,
    Inverse     = 1u << 3,
    Plain       = 1u << 4,
  };

  struct ReductFlags {
    unsigned bits = 0;

    [[nodiscard]] bool has(ReductFlag f) const noexcept {
      return (bits & static_cast<unsigned>(f)) != 0;
    }
    bool operator==(ReductFlags const&) const = default;
  };

  ReductFlags reduct_kind(FiniteSemiring const& s, Op which);
  std::string to_string(ReductFlags flags);

  bool is_b_lattice(FiniteSemiring const& s);

  // The sequence a, 2a, 3a, ... (or a, a^2, ...) up to its first repeat.
  // terms[k-1] is the k-th power; terms[tail..] is the cycle.
  struct CyclicOrbit {
    std::vector<Element> terms;
    std::size_t          tail   = 0;
    std::size_t          period = 0;

    [[nodiscard]] Element at(std::uint64_t k) const noexcept;
  };

  CyclicOrbit cyclic_orbit(FiniteSemiring const& s, Element a, Op which);

  // k-fold sum (or product) of a, k >= 1, by cycle detection.
  Element repeat(FiniteSemiring const& s,
                 Element               a,
                 std::uint64_t         k,
                 Op                    which);

  // Helpers on element sets.
  ElementSet         all_elements(std::size_t n);
  bool               contains(ElementSet const& set, Element e) noexcept;
  std::vector<char>  membership(ElementSet const& set, std::size_t n);
  bool               is_closed(FiniteSemiring const& s, ElementSet const& set);
  std::string        format_set(FiniteSemiring const& s, ElementSet const& set);
  std::string        format_elements(FiniteSemiring const&       s,
                                     std::span<Element const> elements);

  // A closed subset materialised as its own semiring, with the embedding.
  struct Subsemiring {
    FiniteSemiring       semiring;
    std::vector<Element> to_parent;
  };

  // Throws EmptySubset / NotSubsemiring.
  Subsemiring subsemiring(FiniteSemiring const& s, ElementSet const& set);

  // Partial structure on a subset: a cell is defined iff the result lies in
  // the subset.
  PartialSemiring restrict_partial(FiniteSemiring const& s,
                                   ElementSet const&     set);

  // Relabels the carrier: element i of s becomes perm[i].
  FiniteSemiring permute(FiniteSemiring const&     s,
                         std::span<Element const> perm);

  bool is_valid_name(std::string_view name) noexcept;

}  // namespace semikit

#endif  // SEMIKIT_KERNEL_HPP_
