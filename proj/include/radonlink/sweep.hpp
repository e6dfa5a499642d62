#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "radonlink/certificate.hpp"
#include "radonlink/configuration.hpp"

namespace radonlink {

/// Basis u, v of the 2-dimensional solution plane of
/// Σ x_i A_i = 0, Σ x_i = 0. A point of the plane is s·u + t·v.
struct PlaneBasis {
  Vec u;
  Vec v;
};

/// Coordinate i restricted to the plane is the linear form s·a + t·b; its
/// zero set is the line ℓ_i.
struct LineNormal {
  std::size_t index = 0;
  Rational a;
  Rational b;
};

enum class Sign : std::int8_t { negative = -1, zero = 0, positive = 1 };
using SignPattern = std::vector<Sign>;

std::size_t count_sign(const SignPattern& pattern, Sign which);

/// (s, t) coordinates of a direction in the plane, relative to (u, v).
struct Direction {
  Rational s;
  Rational t;

  friend bool operator==(const Direction&, const Direction&) = default;
};

/// Strict counterclockwise order of nonzero directions, starting at the
/// positive s-axis (inclusive). Exact: half-plane test, then the sign of the
/// 2×2 cross determinant.
bool angularly_before(const Direction& lhs, const Direction& rhs);

/// A direction on exactly one line ℓ_i and the sign of every coordinate
/// there.
struct Crossing {
  std::size_t line = 0;
  Direction direction;
  SignPattern pattern;
};

/// All 2(n+3) crossings of the unit circle with the lines, in angular
/// order, and the sign pattern of each open sector. sectors[k] lies between
/// crossings[k] and crossings[(k+1) mod size].
struct SweepOrder {
  std::vector<Crossing> crossings;
  std::vector<SignPattern> sectors;
};

/// Throws GeneralPositionError unless `c` is in general position.
PlaneBasis compute_plane(const Configuration& c);

/// Throws TheoremViolation on a zero normal or two proportional normals.
std::vector<LineNormal> line_normals(const PlaneBasis& basis);

SweepOrder sweep(const std::vector<LineNormal>& normals);

/// s·u + t·v.
Vec plane_point(const PlaneBasis& basis, const Direction& d);

/// Common point of conv{A_i : x_i > 0} and conv{A_i : x_i < 0} for a
/// nonzero solution x of the homogeneous system, with both barycentric
/// coordinate lists (all strictly positive, each summing to 1).
struct LemmaPoint {
  Vec point;
  Combination plus;
  Combination minus;
};

/// Throws InvalidWitnessError if `solution` is zero or does not solve the
/// system of `c`.
LemmaPoint lemma_intersection_point(const Configuration& c, const Vec& solution);

/// n even: two disjoint (n+2)/2-point subsets whose open simplices meet,
/// taken from the first crossing in sweep order with (n+2)/2 positive and
/// (n+2)/2 negative coordinates.
PartitionResult find_even_partition(const Configuration& c);

/// n odd: two complementary (n+3)/2-point subsets spanning linked
/// simplices, taken from the first circularly adjacent crossing pair x¹, x²
/// where x¹ has (n+3)/2 positive coordinates and x² has (n+3)/2 negative
/// ones.
PartitionResult find_odd_partition(const Configuration& c);

/// Dispatches on the parity of n.
PartitionResult find_partition(const Configuration& c);

}  // namespace radonlink
