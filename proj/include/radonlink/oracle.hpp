#pragma once

#include <cstddef>
#include <vector>

#include "radonlink/certificate.hpp"
#include "radonlink/configuration.hpp"

namespace radonlink {

/// Unordered pair of disjoint subsets, stored with first < second
/// lexicographically.
struct SubsetPair {
  IndexSet first;
  IndexSet second;

  friend auto operator<=>(const SubsetPair&, const SubsetPair&) = default;
};

/// Canonical form of {a, b}: both sorted, smaller one first.
SubsetPair make_pair_canonical(IndexSet a, IndexSet b);

struct EnumerationOptions {
  /// Brute force refuses larger dimensions unless this is raised.
  std::size_t max_n = 8;
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  std::size_t jobs = 1;
};

/// Every qualifying subset pair, canonically sorted.
struct EnumerationReport {
  ParityCase parity_case = ParityCase::even;
  std::vector<SubsetPair> pairs;
  /// Number of candidate pairs examined.
  std::size_t candidates = 0;

  std::size_t count() const noexcept { return pairs.size(); }
  bool count_is_odd() const noexcept { return pairs.size() % 2 == 1; }
  bool contains(const SubsetPair& p) const;
};

/// n odd: all splits of the n+3 points into two (n+3)/2-point halves whose
/// simplices are linked.
EnumerationReport enumerate_odd(const Configuration& c, const EnumerationOptions& options = {});

/// n even: all pairs of disjoint (n+2)/2-point subsets whose open simplices
/// intersect.
EnumerationReport enumerate_even(const Configuration& c, const EnumerationOptions& options = {});

/// Dispatches on the parity of n.
EnumerationReport enumerate_pairs(const Configuration& c, const EnumerationOptions& options = {});

}  // namespace radonlink
