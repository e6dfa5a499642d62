#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "radonlink/combinatorics.hpp"
#include "radonlink/linalg.hpp"

namespace radonlink {

/// n+3 points A_1, …, A_{n+3} in R^n with exact coordinates.
///
/// Construction checks only the shape. General position is a separate,
/// checkable property so that degenerate inputs stay representable.
class Configuration {
 public:
  /// Throws DimensionError unless n ≥ 1, there are exactly n+3 points and
  /// every point has length n.
  Configuration(std::size_t dimension, std::vector<Vec> points);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return points_.size(); }
  const Vec& point(std::size_t i) const { return points_.at(i); }
  const std::vector<Vec>& points() const noexcept { return points_; }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::size_t dimension_;
  std::vector<Vec> points_;
};

struct GeneralPositionReport {
  bool ok = true;
  /// Lexicographically first (n+1)-subset lying in a hyperplane; present
  /// iff !ok. Strictly increasing, 0-based.
  std::optional<IndexSet> violation;
};

/// Homogenized point matrix: (n+1)×(n+3), column i is A_i followed by 1.
/// Its null space is the solution set of Σ x_i A_i = 0, Σ x_i = 0.
Mat build_system(const Configuration& c);

/// General position via the (n+1)×(n+1) minors of build_system: no n+1
/// points lie in a common hyperplane.
GeneralPositionReport check_general_position(const Configuration& c);

/// General position via difference vectors: for every (n+1)-subset
/// B_0 < … < B_n the vectors B_k − B_0 are linearly independent. Same
/// contract as check_general_position, computed by rank instead of
/// determinants.
GeneralPositionReport check_general_position_by_differences(const Configuration& c);

/// Throws GeneralPositionError naming the violating subset unless `c` is in
/// general position.
void require_general_position(const Configuration& c);

}  // namespace radonlink
