#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "radonlink/combinatorics.hpp"
#include "radonlink/linalg.hpp"

namespace radonlink {

class Configuration;

enum class ParityCase { even, odd };

/// Affine combination Σ coefficients[k] · A_{indices[k]}.
struct Combination {
  IndexSet indices;
  std::vector<Rational> coefficients;

  /// Throws ValidationError on an index out of range or a length mismatch.
  Vec evaluate(const Configuration& c) const;

  friend bool operator==(const Combination&, const Combination&) = default;
};

/// Common point of two simplices with barycentric coordinates in each.
struct InteriorWitness {
  Vec point;
  Combination first;
  Combination second;

  friend bool operator==(const InteriorWitness&, const InteriorWitness&) = default;
};

/// A point where a facet of one simplex meets the interior of the other.
struct Piercing {
  Vec point;
  Combination facet;
  Combination simplex;

  friend bool operator==(const Piercing&, const Piercing&) = default;
};

/// Witness that conv(first) and conv(second) are linked: their intersection
/// is a segment whose endpoints are `first_boundary.point` (on ∂first,
/// inside second) and `second_boundary.point` (on ∂second, inside first).
struct LinkingWitness {
  IndexSet first;
  IndexSet second;
  Piercing first_boundary;
  Piercing second_boundary;
  /// Claimed number of facets of `first` piercing the interior of `second`,
  /// and the reverse. Linked simplices have exactly 1 in each direction.
  std::size_t first_into_second = 1;
  std::size_t second_into_first = 1;

  friend bool operator==(const LinkingWitness&, const LinkingWitness&) = default;
};

struct Certificate {
  std::variant<InteriorWitness, LinkingWitness> witness;

  bool is_linking() const noexcept { return std::holds_alternative<LinkingWitness>(witness); }

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Two disjoint index subsets plus the evidence for them.
///
/// `first` and `second` are sorted, and `first` is the lexicographically
/// smaller one. For the odd case the roles found by the sweep (the subset
/// positive at x¹ and the subset negative at x²) are kept inside the
/// linking witness.
struct PartitionResult {
  ParityCase parity = ParityCase::even;
  IndexSet first;
  IndexSet second;
  Certificate certificate;

  friend bool operator==(const PartitionResult&, const PartitionResult&) = default;
};

}  // namespace radonlink
