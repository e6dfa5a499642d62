#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "radonlink/certificate.hpp"
#include "radonlink/configuration.hpp"

namespace radonlink {

/// Result of intersecting conv(first) with conv(second) through their
/// common affine combination.
struct PierceResult {
  bool exists = false;
  /// Present iff exists.
  std::optional<Vec> point;
  /// Some coefficient on the first (resp. second) side is zero.
  bool first_on_boundary = false;
  bool second_on_boundary = false;
  /// Barycentric coordinates of the unique common affine point, when the
  /// affine hulls meet in exactly one point; empty otherwise.
  std::vector<Rational> first_coefficients;
  std::vector<Rational> second_coefficients;
};

/// Does the open simplex conv(a) meet the open simplex conv(b)?
///
/// Requires disjoint nonempty index sets with |a| + |b| ≤ n + 2. Solves
/// Σ λ_i A_i = Σ μ_j A_j, Σ λ = Σ μ = 1 exactly; exists iff that solution is
/// unique and every λ, μ is strictly positive. Throws GeneralPositionError
/// when the solutions form a line (only possible for degenerate input).
PierceResult interior_intersection(const Configuration& c, const IndexSet& a, const IndexSet& b);

/// Does the closed facet conv(facet) meet the open simplex conv(simplex)?
///
/// n odd, |facet| = (n+1)/2, |simplex| = (n+3)/2. A meeting point with a zero
/// coefficient on either side would put n+1 points in a hyperplane, so it
/// raises GeneralPositionError rather than being counted.
PierceResult pierce(const Configuration& c, const IndexSet& facet, const IndexSet& simplex);

struct LinkReport {
  /// Number of facets of conv(a) piercing the interior of conv(b).
  std::size_t a_boundary_into_b = 0;
  /// Number of facets of conv(b) piercing the interior of conv(a).
  std::size_t b_boundary_into_a = 0;
  bool linked = false;
};

/// Piercing counts in both directions for two (n+3)/2-point simplices
/// (n odd). linked iff ∂conv(a) meets int conv(b) in exactly one point.
/// Throws TheoremViolation if the two directions disagree on that verdict.
LinkReport link_report(const Configuration& c, const IndexSet& a, const IndexSet& b);

bool linked(const Configuration& c, const IndexSet& a, const IndexSet& b);

struct VerificationReport {
  bool ok = true;
  /// First failed clause, empty when ok.
  std::string failed_clause;
};

/// Re-derives every claim of `r` against `c` by exact recomputation.
/// Structurally malformed results (index out of range, wrong coefficient
/// counts, wrong point length) throw ValidationError.
VerificationReport check_certificate(const Configuration& c, const PartitionResult& r);

bool verify_certificate(const Configuration& c, const PartitionResult& r);

}  // namespace radonlink
