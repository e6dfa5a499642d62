#include "radonlink/generator.hpp"

#include <limits>
#include <string>

#include "radonlink/errors.hpp"

namespace radonlink {

std::int64_t SeededStream::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(engine_());
  const std::uint64_t range = span + 1;
  // Largest multiple of `range` that fits; draws at or above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % range);
}

Configuration gen_random(const GenSpec& spec, std::size_t max_attempts) {
  if (spec.n == 0) throw ValidationError("dimension must be positive");
  if (spec.bound < 0) throw ValidationError("coordinate bound must be nonnegative");
  SeededStream stream(spec.seed);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Vec> points;
    points.reserve(spec.n + 3);
    for (std::size_t i = 0; i < spec.n + 3; ++i) {
      Vec p(spec.n);
      for (std::size_t r = 0; r < spec.n; ++r) p[r] = Rational(static_cast<long>(stream.uniform(-spec.bound, spec.bound)));
      points.push_back(std::move(p));
    }
    Configuration c(spec.n, std::move(points));
    if (check_general_position(c).ok) return c;
  }
  throw GenerationError("no general-position configuration after " + std::to_string(max_attempts) +
                        " attempts (n=" + std::to_string(spec.n) + ", bound=" + std::to_string(spec.bound) +
                        "); the coordinate bound is probably too small");
}

Configuration gen_moment_curve(const GenSpec& spec) {
  if (spec.n == 0) throw ValidationError("dimension must be positive");
  const auto& t = spec.moment_parameters;
  if (t.size() != spec.n + 3) {
    throw ValidationError("moment curve needs " + std::to_string(spec.n + 3) + " parameters, got " +
                          std::to_string(t.size()));
  }
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!(t[i - 1] < t[i])) throw ValidationError("moment curve parameters must be strictly increasing");
  }
  std::vector<Vec> points;
  for (const auto& ti : t) {
    Vec p(spec.n);
    Rational power = 1;
    for (std::size_t r = 0; r < spec.n; ++r) {
      power *= ti;
      p[r] = power;
    }
    points.push_back(std::move(p));
  }
  return Configuration(spec.n, std::move(points));
}

Configuration generate(const GenSpec& spec) {
  return spec.kind == GenKind::random ? gen_random(spec) : gen_moment_curve(spec);
}

Configuration moment_curve(std::size_t n, std::int64_t first) {
  GenSpec spec;
  spec.n = n;
  spec.kind = GenKind::moment_curve;
  for (std::size_t i = 0; i < n + 3; ++i) spec.moment_parameters.emplace_back(static_cast<long>(first + static_cast<std::int64_t>(i)));
  return gen_moment_curve(spec);
}

AffineMap random_affine_map(std::size_t n, SeededStream& stream) {
  AffineMap map;
  do {
    map.linear = Mat(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        map.linear(r, c) = Rational(static_cast<long>(stream.uniform(-5, 5)), static_cast<unsigned long>(stream.uniform(1, 4)));
        map.linear(r, c).canonicalize();
      }
    }
  } while (determinant(map.linear) == 0);
  map.offset = Vec(n);
  for (std::size_t r = 0; r < n; ++r) {
    map.offset[r] = Rational(static_cast<long>(stream.uniform(-20, 20)), static_cast<unsigned long>(stream.uniform(1, 3)));
    map.offset[r].canonicalize();
  }
  return map;
}

Configuration apply(const AffineMap& map, const Configuration& c) {
  std::vector<Vec> points;
  points.reserve(c.size());
  for (const auto& p : c.points()) points.push_back(map.linear * p + map.offset);
  return Configuration(c.dimension(), std::move(points));
}

Configuration relabel(const Configuration& c, const std::vector<std::size_t>& permutation) {
  if (permutation.size() != c.size()) throw DimensionError("permutation length must equal the point count");
  std::vector<Vec> points;
  points.reserve(c.size());
  for (auto k : permutation) points.push_back(c.point(k));
  return Configuration(c.dimension(), std::move(points));
}

std::vector<std::size_t> random_permutation(std::size_t size, SeededStream& stream) {
  std::vector<std::size_t> perm(size);
  for (std::size_t i = 0; i < size; ++i) perm[i] = i;
  // Fisher–Yates with the portable range reduction.
  for (std::size_t i = size; i > 1; --i) {
    const auto j = static_cast<std::size_t>(stream.uniform(0, static_cast<std::int64_t>(i - 1)));
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

}  // namespace radonlink
