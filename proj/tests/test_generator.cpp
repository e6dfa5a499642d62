#include <doctest.h>

#include <map>

#include "radonlink/errors.hpp"
#include "radonlink/generator.hpp"
#include "support.hpp"

using namespace radonlink;
using namespace radonlink::testing;

TEST_CASE("random configurations are reproducible") {
  GenSpec spec;
  spec.n = 3;
  spec.seed = 1;
  spec.bound = 100;
  const Configuration a = gen_random(spec);
  const Configuration b = gen_random(spec);
  CHECK(a == b);
  spec.seed = 2;
  CHECK_FALSE(gen_random(spec) == a);
}

TEST_CASE("random configurations are in general position and in range") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      GenSpec spec;
      spec.n = n;
      spec.seed = seed;
      spec.bound = 3;
      const Configuration c = gen_random(spec);
      CHECK(check_general_position(c).ok);
      for (const auto& p : c.points()) {
        for (const auto& x : p) {
          CHECK(x.get_den() == 1);
          CHECK(abs(x) <= 3);
        }
      }
    }
  }
}

TEST_CASE("a zero bound cannot produce general position") {
  GenSpec spec;
  spec.n = 1;
  spec.bound = 0;
  CHECK_THROWS_AS(gen_random(spec), GenerationError);
}

TEST_CASE("seeded stream is the standard 64-bit Mersenne Twister") {
  // The 10000th output of a default-constructed mt19937_64 is fixed by the standard.
  std::mt19937_64 reference;
  reference.discard(9999);
  CHECK(reference() == 9981545732273789042ull);

  SeededStream s(5489);
  std::map<std::int64_t, int> hist;
  for (int k = 0; k < 6000; ++k) ++hist[s.uniform(-1, 1)];
  CHECK(hist.size() == 3);
  for (const auto& [value, count] : hist) CHECK(count > 1800);
}

TEST_CASE("moment curve examples") {
  GenSpec spec;
  spec.n = 1;
  spec.kind = GenKind::moment_curve;
  spec.moment_parameters = {0, 1, 2, 3};
  CHECK(gen_moment_curve(spec) == line_points({0, 1, 2, 3}));

  const Configuration c3 = moment_curve(3, 1);
  CHECK(c3.point(1) == Vec{2, 4, 8});
  CHECK(check_general_position(c3).ok);

  spec.n = 2;
  spec.moment_parameters = {q("-1/2"), 0, q("1/3"), 2, 5};
  const Configuration rational = gen_moment_curve(spec);
  CHECK(rational.point(0) == Vec{q("-1/2"), q("1/4")});
  CHECK(check_general_position(rational).ok);

  spec.moment_parameters = {0, 1, 1, 2, 3};
  CHECK_THROWS_AS(gen_moment_curve(spec), ValidationError);
  spec.moment_parameters = {0, 1, 2, 3};
  CHECK_THROWS_AS(gen_moment_curve(spec), ValidationError);
}

TEST_CASE("planar moment curve points are in convex position") {
  const Configuration c = moment_curve(2, -2);
  // Every consecutive triple turns the same way, so the polygon is convex.
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int o = orientation({c.point(i), c.point((i + 1) % c.size()), c.point((i + 2) % c.size())});
    CHECK(o == 1);
  }
}

TEST_CASE("affine maps are invertible and relabeling permutes points") {
  SeededStream rng(9);
  for (std::size_t n = 1; n <= 4; ++n) {
    const AffineMap map = random_affine_map(n, rng);
    CHECK(determinant(map.linear) != 0);
    const auto perm = random_permutation(n + 3, rng);
    std::vector<std::size_t> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == i);
    const Configuration c = random_config(n, n);
    const Configuration r = relabel(c, perm);
    for (std::size_t k = 0; k < c.size(); ++k) CHECK(r.point(k) == c.point(perm[k]));
  }
}
