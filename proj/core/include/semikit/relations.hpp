#ifndef SEMIKIT_RELATIONS_HPP_
#define SEMIKIT_RELATIONS_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "semikit/kernel.hpp"

namespace semikit {

  // An equivalence on [0, n), stored as a restricted growth string: block
  // ids are dense and numbered in order of first appearance.
  class Partition {
   public:
    Partition() = default;
    explicit Partition(std::vector<std::size_t> block_ids);

    static Partition identity(std::size_t n);
    static Partition universal(std::size_t n);
    // Builds the partition of an equivalence given as a predicate. The
    // predicate is trusted to be an equivalence.
    static Partition from_equivalence(
        std::size_t                                 n,
        std::function<bool(Element, Element)> const& related);

    [[nodiscard]] std::size_t order() const noexcept {
      return _ids.size();
    }
    [[nodiscard]] std::size_t block(Element e) const {
      return _ids.at(e);
    }
    [[nodiscard]] std::size_t num_blocks() const noexcept {
      return _num_blocks;
    }
    [[nodiscard]] bool related(Element a, Element b) const {
      return _ids.at(a) == _ids.at(b);
    }
    [[nodiscard]] std::vector<std::size_t> const& ids() const noexcept {
      return _ids;
    }
    [[nodiscard]] std::vector<ElementSet> blocks() const;
    // Every block of *this lies inside a block of coarser.
    [[nodiscard]] bool refines(Partition const& coarser) const;

    bool operator==(Partition const&) const = default;

   private:
    std::vector<std::size_t> _ids;
    std::size_t              _num_blocks = 0;
  };

  std::string format_partition(FiniteSemiring const& s, Partition const& p);

  struct Congruence {
    Partition partition;
    bool      is_semiring_congruence = false;
  };

  enum class GreenKind { L, R, H, D, J };

  GreenKind   parse_green_kind(std::string const& text);
  char        to_char(GreenKind kind) noexcept;

  // Green's relations of (S, +), computed from principal ideals of S^1.
  Partition green_plus(FiniteSemiring const& s, GreenKind kind);

  // a ~ b iff pa ~ qb under the unstarred relation, p and q least with pa,
  // qb additively regular. D is L* composed with R*; NotEquivalence if that
  // composition is not transitive.
  Partition green_star_plus(FiniteSemiring const& s, GreenKind kind);

  // Compatible with both tables.
  bool is_compatible(FiniteSemiring const& s, Partition const& p);
  Congruence make_congruence(FiniteSemiring const& s, Partition p);

  inline constexpr std::size_t kDefaultCongruenceBound = 6;

  // All semiring congruences, finest first (by number of blocks, then by
  // restricted growth string). BoundExceeded above the bound.
  std::vector<Congruence> enumerate_congruences(
      FiniteSemiring const& s,
      std::size_t           bound = kDefaultCongruenceBound);

  // Restriction to E+(S) is the identity.
  bool is_idempotent_separating(FiniteSemiring const& s, Congruence const& c);

  // Throws NotBiIdeal unless i is a bi-ideal.
  Congruence rees_congruence(FiniteSemiring const& s, ElementSet const& i);

  // Block tables; NotCongruence if c is not compatible. Block names are the
  // member names in braces.
  FiniteSemiring quotient(FiniteSemiring const& s, Congruence const& c);
  FiniteSemiring quotient(FiniteSemiring const& s, Partition const& p);

}  // namespace semikit

#endif  // SEMIKIT_RELATIONS_HPP_
