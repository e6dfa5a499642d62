#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "radonlink/configuration.hpp"

namespace radonlink {

enum class GenKind { random, moment_curve };

struct GenSpec {
  std::size_t n = 1;
  std::uint64_t seed = 0;
  /// Coordinates are drawn from [−bound, bound].
  std::int64_t bound = 100;
  GenKind kind = GenKind::random;
  /// Strictly increasing, n+3 entries; moment_curve only.
  std::vector<Rational> moment_parameters;
};

/// Integer draws from std::mt19937_64. The engine's output sequence is fixed
/// by the C++ standard, and the range reduction below is exact rejection
/// sampling, so a seed gives the same draws on every platform.
class SeededStream {
 public:
  explicit SeededStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi], lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// n+3 integer points uniform in [−B, B]^n, redrawn as a whole until they are
/// in general position. Throws GenerationError after `max_attempts` draws.
Configuration gen_random(const GenSpec& spec, std::size_t max_attempts = 1000);

/// Points (t, t², …, t^n) for the given parameters. Throws ValidationError
/// unless there are n+3 strictly increasing parameters.
Configuration gen_moment_curve(const GenSpec& spec);

Configuration generate(const GenSpec& spec);

/// Moment curve at t = first, first+1, …, first+n+2.
Configuration moment_curve(std::size_t n, std::int64_t first = 0);

/// x ↦ linear·x + offset.
struct AffineMap {
  Mat linear;
  Vec offset;
};

/// Invertible map with small rational entries, drawn from `stream`.
AffineMap random_affine_map(std::size_t n, SeededStream& stream);

Configuration apply(const AffineMap& map, const Configuration& c);

/// Point k of the result is point permutation[k] of `c`.
Configuration relabel(const Configuration& c, const std::vector<std::size_t>& permutation);

std::vector<std::size_t> random_permutation(std::size_t size, SeededStream& stream);

}  // namespace radonlink
