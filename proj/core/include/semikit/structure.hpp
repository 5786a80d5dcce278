#ifndef SEMIKIT_STRUCTURE_HPP_
#define SEMIKIT_STRUCTURE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "semikit/kernel.hpp"
#include "semikit/relations.hpp"

namespace semikit {

  // All three throw EmptySubset on an empty subset.
  bool is_ideal(FiniteSemiring const& s, ElementSet const& i);
  bool is_k_ideal(FiniteSemiring const& s, ElementSet const& i);
  bool is_bi_ideal(FiniteSemiring const& s, ElementSet const& i);

  // (S, +) is a group.
  bool is_skew_ring(FiniteSemiring const& s);
  // The subset is closed under both operations and a group under +.
  bool is_skew_ring_subset(FiniteSemiring const& s, ElementSet const& set);

  // The three equivalent characterisations of a quasi skew-ring, each
  // evaluated on its own:
  //   unique_idempotent  additively quasi regular with |E+| = 1
  //   skew_ring_core     some subskew-ring contains a multiple of every
  //                      element
  //   nil_extension      nil-extension of a skew-ring bi-ideal
  struct QuasiSkewRingReport {
    bool                      unique_idempotent = false;
    bool                      skew_ring_core    = false;
    bool                      nil_extension     = false;
    std::optional<ElementSet> core;    // witness for skew_ring_core
    std::optional<ElementSet> kernel;  // witness for nil_extension

    [[nodiscard]] bool all() const noexcept {
      return unique_idempotent && skew_ring_core && nil_extension;
    }
    [[nodiscard]] bool consistent() const noexcept {
      return unique_idempotent == skew_ring_core
             && skew_ring_core == nil_extension;
    }
  };

  QuasiSkewRingReport quasi_skew_ring_check(FiniteSemiring const& s);
  // On a closed subset, reported in the parent's element indices.
  QuasiSkewRingReport quasi_skew_ring_check(FiniteSemiring const& s,
                                            ElementSet const&     t);

  // H+-class of the unique additive idempotent; NotQuasiSkewRing otherwise.
  ElementSet skew_ring_kernel(FiniteSemiring const& s);
  ElementSet skew_ring_kernel(FiniteSemiring const& s, ElementSet const& t);

  // Every element has a multiple in the bi-ideal i; NotBiIdeal otherwise.
  bool is_nil_extension(FiniteSemiring const& s, ElementSet const& i);

  // Block alpha of the partition is T_alpha; alpha is also the index of the
  // corresponding element of the quotient y.
  struct Decomposition {
    FiniteSemiring               base;
    Partition                    partition;
    FiniteSemiring               y;
    std::vector<ElementSet>      classes;
    std::vector<ElementSet>      kernels;
    std::vector<Element>         idempotents;
    std::vector<ElementSet>      nil_sets;
    std::vector<PartialSemiring> nil_parts;

    [[nodiscard]] std::size_t size() const noexcept {
      return classes.size();
    }
    [[nodiscard]] Element class_of(Element a) const {
      return static_cast<Element>(partition.block(a));
    }
    [[nodiscard]] bool in_kernel(Element a) const {
      return contains(kernels[class_of(a)], a);
    }
    // alpha <= beta iff alpha + beta = beta in y.
    [[nodiscard]] bool leq(Element alpha, Element beta) const {
      return y.add(alpha, beta) == beta;
    }
  };

  // Decomposition by H*+. Throws NotQuasiCompletelyRegular, or
  // DecompositionInvariantViolation naming the failed invariant.
  Decomposition decompose(FiniteSemiring const& s);

  // Decomposition along a given partition whose blocks must be quasi
  // skew-rings and whose quotient must be an idempotent semiring (a b-lattice
  // when require_b_lattice is set).
  Decomposition decompose_by(FiniteSemiring const& s,
                             Partition const&      p,
                             bool                  require_b_lattice);

  // a -> a + e_alpha for a in T_alpha.
  struct PsiMap {
    std::vector<Element> image;

    [[nodiscard]] Element operator()(Element a) const {
      return image.at(a);
    }
  };

  // PreconditionFailed if two additive idempotents do not commute.
  PsiMap    psi(FiniteSemiring const& s, Decomposition const& d);
  Partition psi_tilde(FiniteSemiring const& s, Decomposition const& d);
  bool      check_psi_homomorphism(FiniteSemiring const& s,
                                   Decomposition const&  d);

}  // namespace semikit

#endif  // SEMIKIT_STRUCTURE_HPP_
