#ifndef SEMIKIT_ENUMERATE_HPP_
#define SEMIKIT_ENUMERATE_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "semikit/classify.hpp"
#include "semikit/kernel.hpp"

namespace semikit {

  // Row-major addition table followed by the multiplication table, one byte
  // per entry, under the carrier permutation that minimises the encoding.
  struct CanonicalForm {
    std::size_t               order = 0;
    std::vector<std::uint8_t> bytes;

    auto operator<=>(CanonicalForm const&) const = default;
  };

  inline constexpr std::size_t kCanonicalBound = 8;
  inline constexpr std::size_t kFullEnumerationBound = 4;
  inline constexpr std::size_t kSamplingBound = 6;

  // BoundExceeded above kCanonicalBound.
  CanonicalForm canonical_form(FiniteSemiring const& s);
  // The canonical representative with elements named 0, 1, ...
  FiniteSemiring from_canonical(CanonicalForm const& form);
  // 16 hex digits of a 64-bit FNV-1a digest of the form.
  std::string canonical_hash(CanonicalForm const& form);

  // Associative n x n tables over [0, n), all labellings, in lexicographic
  // order. BoundExceeded above kFullEnumerationBound.
  std::vector<std::vector<std::uint8_t>> labelled_semigroups(std::size_t n);

  // Worker count: SEMIKIT_WORKERS if set and positive, else the hardware
  // concurrency.
  std::size_t worker_count();

  // One representative per isomorphism class, sorted by canonical form.
  // BoundExceeded above kFullEnumerationBound. The unfiltered corpus is
  // memoised per order.
  std::vector<FiniteSemiring> enumerate_semirings(
      std::size_t                  n,
      std::optional<SemiringClass> filter = std::nullopt);

  // Up to count pairwise non-isomorphic semirings of order n, found by
  // randomised backtracking from the seed and sorted by canonical form.
  // BoundExceeded above kSamplingBound.
  std::vector<FiniteSemiring> sample_semirings(
      std::size_t                  n,
      std::size_t                  count,
      std::uint64_t                seed,
      std::optional<SemiringClass> filter = std::nullopt);

  // Comma separated class tags that hold, or "-".
  std::string class_flags(FiniteSemiring const& s);

  // `<hash> <order> <flags>` per semiring.
  std::string manifest(std::vector<FiniteSemiring> const& corpus);

  // <dir>/<hash>.srt for each member plus <dir>/manifest.txt.
  void write_corpus(std::filesystem::path const&       dir,
                    std::vector<FiniteSemiring> const& corpus);
  // Members in manifest order.
  std::vector<FiniteSemiring> read_corpus(std::filesystem::path const& dir);

  struct ImplicationQuery {
    SemiringClass premise;
    SemiringClass conclusion;
    std::size_t   max_order = 0;
  };

  // First semiring in (order, canonical form) order satisfying the premise
  // but not the conclusion.
  std::optional<FiniteSemiring> find_counterexample(ImplicationQuery const& q);

}  // namespace semikit

#endif  // SEMIKIT_ENUMERATE_HPP_
