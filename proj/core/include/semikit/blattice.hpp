#ifndef SEMIKIT_BLATTICE_HPP_
#define SEMIKIT_BLATTICE_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semikit/classify.hpp"
#include "semikit/kernel.hpp"
#include "semikit/structure.hpp"

namespace semikit {

  using IndexPair = std::pair<Element, Element>;

  // Components are indexed by the elements of y; a map for (alpha, beta)
  // sends local indices of component alpha to local indices of component
  // beta. alpha <= beta means alpha + beta = beta in y. Omitted maps
  // (alpha, alpha) are taken to be the identity.
  struct StrongBLatticeSpec {
    FiniteSemiring                                 y;
    std::vector<FiniteSemiring>                    components;
    std::map<IndexPair, std::vector<Element>>      maps;
  };

  struct SpecFailure {
    std::string          condition;  // "injective", "homomorphism", "1", ...
    std::vector<Element> indices;    // alpha, beta[, gamma]
    std::string          witness;
  };

  struct SpecReport {
    std::vector<SpecFailure> failures;

    [[nodiscard]] bool verdict() const noexcept {
      return failures.empty();
    }
  };

  // Throws MissingMap, OverlappingCarriers, OutOfRange.
  SpecReport validate_spec(StrongBLatticeSpec const& spec);

  // Carrier is the concatenation of the components in the order of y.
  // PreconditionFailed if the spec is invalid; NoProductWitness if a
  // product has no preimage; InternalTheoremViolation if the result is not
  // a semiring.
  FiniteSemiring compose(StrongBLatticeSpec const& spec);

  // All maps are indexed by comparable pairs of classes of a decomposition
  // and store global element indices of the base semiring, kUndefined
  // outside the domain.
  using MapFamily = std::map<IndexPair, std::vector<Element>>;

  struct StructureMaps {
    MapFamily theta;   // on kernels R_alpha
    MapFamily varphi;  // on nil parts S_alpha, only where S_alpha is nonempty
    MapFamily phi;     // piecewise union on T_alpha
  };

  // Throws DomainMismatch or NotInjective.
  StructureMaps build_phi(Decomposition const& d,
                          MapFamily const&     theta,
                          MapFamily const&     varphi);

  // theta and varphi read off a family on the classes; nothing is checked,
  // so corrupted families can still be judged by the conditions.
  StructureMaps split_phi(Decomposition const& d, MapFamily const& phi);

  // Structure conditions in order, labelled "i", "ii" (each varphi is a
  // monomorphism), "ii.1" to "ii.5" and "iii". PreconditionFailed unless s
  // is strongly additively quasi completely inverse and d decomposes s.
  std::vector<ConditionVerdict> check_main_theorem_conditions(
      FiniteSemiring const& s,
      Decomposition const&  d,
      StructureMaps const&  m);

  struct StrongBLatticeCheck {
    bool        reproduces = false;  // a strong b-lattice family whose sum
                                     // and product laws give back s
    bool        conditions = false;  // conjunction of the main conditions
    std::string witness;             // first failure, if any

    [[nodiscard]] bool agreement() const noexcept {
      return reproduces == conditions;
    }
  };

  StrongBLatticeCheck verify_strong_blattice(FiniteSemiring const& s,
                                             Decomposition const&  d,
                                             StructureMaps const&  m);

  inline constexpr std::size_t kStructureSearchBound = 8;

  // First family (pairs in order, elements ascending, candidates
  // ascending) for which s is a strong b-lattice over d. Kernel images are
  // forced to a + e_beta. PreconditionFailed unless s is strongly
  // additively quasi completely inverse; SearchBoundExceeded above the
  // bound.
  std::optional<StructureMaps> search_structure_maps(
      FiniteSemiring const& s,
      Decomposition const&  d,
      std::size_t           bound = kStructureSearchBound);
  std::optional<StructureMaps> search_structure_maps(
      FiniteSemiring const& s,
      std::size_t           bound = kStructureSearchBound);

  // Generalized Clifford versus strong b-lattice of skew-rings.
  TheoremReport check_generalized_clifford_theorem(
      FiniteSemiring const& s,
      std::size_t           bound = kStructureSearchBound);

  // The spec read off a decomposition and a family on it; component
  // element names are kept.
  StrongBLatticeSpec spec_from(Decomposition const& d, MapFamily const& phi);

  // .sbl: `blattice:` and an .srt block for y, one `component <name>:`
  // block per element of y, then `map <alpha> <beta>:` blocks of
  // `x -> y` lines.
  StrongBLatticeSpec parse_sbl(std::string_view   text,
                               std::string const& source = "<input>");
  StrongBLatticeSpec read_sbl(std::filesystem::path const& path);
  std::string        to_sbl(StrongBLatticeSpec const& spec);

}  // namespace semikit

#endif  // SEMIKIT_BLATTICE_HPP_
