#include "radonlink/configuration.hpp"

#include <string>

#include "radonlink/errors.hpp"

namespace radonlink {

Configuration::Configuration(std::size_t dimension, std::vector<Vec> points)
    : dimension_(dimension), points_(std::move(points)) {
  if (dimension_ == 0) throw DimensionError("dimension must be positive");
  if (points_.size() != dimension_ + 3) {
    throw DimensionError("expected " + std::to_string(dimension_ + 3) + " points in R^" + std::to_string(dimension_) +
                         ", got " + std::to_string(points_.size()));
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].size() != dimension_) {
      throw DimensionError("point " + std::to_string(i + 1) + " has " + std::to_string(points_[i].size()) +
                           " coordinates, expected " + std::to_string(dimension_));
    }
  }
}

Mat build_system(const Configuration& c) {
  const std::size_t n = c.dimension();
  Mat m(n + 1, c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t r = 0; r < n; ++r) m(r, i) = c.point(i)[r];
    m(n, i) = 1;
  }
  return m;
}

GeneralPositionReport check_general_position(const Configuration& c) {
  const Mat system = build_system(c);
  GeneralPositionReport report;
  for_each_combination(c.size(), c.dimension() + 1, [&](const IndexSet& subset) {
    if (determinant(system.select_columns(subset)) != 0) return true;
    report.ok = false;
    report.violation = subset;
    return false;
  });
  return report;
}

GeneralPositionReport check_general_position_by_differences(const Configuration& c) {
  const std::size_t n = c.dimension();
  GeneralPositionReport report;
  for_each_combination(c.size(), n + 1, [&](const IndexSet& subset) {
    const Vec& base = c.point(subset[0]);
    Mat differences(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
      const Vec d = c.point(subset[k]) - base;
      for (std::size_t r = 0; r < n; ++r) differences(r, k - 1) = d[r];
    }
    if (rank(differences) == n) return true;
    report.ok = false;
    report.violation = subset;
    return false;
  });
  return report;
}

void require_general_position(const Configuration& c) {
  const GeneralPositionReport report = check_general_position(c);
  if (report.ok) return;
  throw GeneralPositionError(*report.violation, "points " + format_index_set(*report.violation) +
                                                    " lie in a common hyperplane (not in general position)");
}

}  // namespace radonlink
