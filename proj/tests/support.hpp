#pragma once

// Shared fixtures and independent oracles for the test suites.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "radonlink/configuration.hpp"
#include "radonlink/generator.hpp"
#include "radonlink/linalg.hpp"
#include "radonlink/rational.hpp"

namespace radonlink::testing {

/// 1-based literal → 0-based IndexSet.
inline IndexSet idx(std::initializer_list<std::size_t> one_based) {
  IndexSet out;
  for (auto i : one_based) out.push_back(i - 1);
  return out;
}

inline Rational q(const char* text) { return parse_rational(text); }

inline Configuration line_points(std::initializer_list<long> xs) {
  std::vector<Vec> pts;
  for (long x : xs) pts.push_back(Vec{Rational(x)});
  return Configuration(1, std::move(pts));
}

inline Configuration from_ints(std::size_t n, const std::vector<std::vector<long>>& rows) {
  std::vector<Vec> pts;
  for (const auto& row : rows) {
    Vec p(row.size());
    for (std::size_t r = 0; r < row.size(); ++r) p[r] = Rational(row[r]);
    pts.push_back(std::move(p));
  }
  return Configuration(n, std::move(pts));
}

inline Configuration random_config(std::size_t n, std::uint64_t seed, std::int64_t bound = 100) {
  GenSpec spec;
  spec.n = n;
  spec.seed = seed;
  spec.bound = bound;
  return gen_random(spec);
}

/// Leibniz expansion; exponential, for small matrices only.
inline Rational leibniz_determinant(const Mat& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rational total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (perm[i] > perm[j]) ++inversions;
      }
    }
    Rational term = inversions % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Radon oracle: the n+2 points of a ∪ b have a one-dimensional affine
/// dependence w; the open simplices conv(a), conv(b) meet iff w is strictly
/// positive on a and strictly negative on b (or the reverse). Requires
/// |a| + |b| = n + 2 and general position.
inline bool radon_oracle_intersect(const Configuration& c, const IndexSet& a, const IndexSet& b) {
  IndexSet all = a;
  all.insert(all.end(), b.begin(), b.end());
  const Mat system = build_system(c).select_columns(all);
  const auto kernel = null_space_basis(system);
  if (kernel.size() != 1) return false;
  const Vec& w = kernel[0];
  auto sign_at = [&](std::size_t k) { return sgn(w[k]); };
  const int first = sign_at(0);
  if (first == 0) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (sign_at(k) != first) return false;
  }
  for (std::size_t k = a.size(); k < all.size(); ++k) {
    if (sign_at(k) != -first) return false;
  }
  return true;
}

/// Radon-oracle linking count: facets of a whose relative interior meets
/// int conv(b).
inline std::size_t radon_oracle_piercings(const Configuration& c, const IndexSet& a, const IndexSet& b) {
  std::size_t hits = 0;
  for (std::size_t drop = 0; drop < a.size(); ++drop) {
    IndexSet facet;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (k != drop) facet.push_back(a[k]);
    }
    if (radon_oracle_intersect(c, facet, b)) ++hits;
  }
  return hits;
}

/// Sign of the orientation determinant of d+1 points in R^d.
inline int orientation(const std::vector<Vec>& pts) {
  const std::size_t d = pts.size() - 1;
  Mat m(d, d);
  for (std::size_t k = 1; k <= d; ++k) {
    for (std::size_t r = 0; r < d; ++r) m(r, k - 1) = pts[k][r] - pts[0][r];
  }
  return sgn(leibniz_determinant(m));
}

/// Orientation oracle for n = 3: does segment pq cross the open triangle abc?
inline bool segment_crosses_triangle(const Vec& p, const Vec& qq, const Vec& a, const Vec& b, const Vec& c) {
  const int sp = orientation({a, b, c, p});
  const int sq = orientation({a, b, c, qq});
  if (sp == 0 || sq == 0 || sp == sq) return false;
  const int e1 = orientation({p, qq, a, b});
  const int e2 = orientation({p, qq, b, c});
  const int e3 = orientation({p, qq, c, a});
  return e1 != 0 && e1 == e2 && e2 == e3;
}

/// Orientation oracle for n = 3: triangles a, b linked iff exactly one edge
/// of a crosses the open triangle b.
inline bool triangles_linked_by_orientation(const Configuration& c, const IndexSet& a, const IndexSet& b) {
  std::size_t crossings = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const Vec& p = c.point(a[i]);
    const Vec& r = c.point(a[(i + 1) % 3]);
    if (segment_crosses_triangle(p, r, c.point(b[0]), c.point(b[1]), c.point(b[2]))) ++crossings;
  }
  return crossings == 1;
}

/// Orientation oracle for n = 2: do the open segments ab and cd cross?
inline bool segments_cross(const Vec& a, const Vec& b, const Vec& c, const Vec& d) {
  const int o1 = orientation({a, b, c});
  const int o2 = orientation({a, b, d});
  const int o3 = orientation({c, d, a});
  const int o4 = orientation({c, d, b});
  return o1 * o2 < 0 && o3 * o4 < 0;
}

/// Interval oracle for n = 1: segments [a0,a1] and [b0,b1] are linked iff
/// their endpoints interleave.
inline bool intervals_interleave(const Configuration& c, const IndexSet& a, const IndexSet& b) {
  Rational a0 = c.point(a[0])[0], a1 = c.point(a[1])[0];
  Rational b0 = c.point(b[0])[0], b1 = c.point(b[1])[0];
  if (a1 < a0) std::swap(a0, a1);
  if (b1 < b0) std::swap(b0, b1);
  const bool b0_in_a = a0 < b0 && b0 < a1;
  const bool b1_in_a = a0 < b1 && b1 < a1;
  return b0_in_a != b1_in_a;
}

/// Floating-point angle of a direction, for test-side ordering only.
inline double angle_of(const Rational& s, const Rational& t) {
  double a = std::atan2(t.get_d(), s.get_d());
  if (a < 0) a += 2 * M_PI;
  return a;
}

}  // namespace radonlink::testing
