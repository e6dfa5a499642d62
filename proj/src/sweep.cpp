#include "radonlink/sweep.hpp"

#include <algorithm>
#include <string>

#include "radonlink/errors.hpp"

namespace radonlink {

namespace {

Sign sign_of(const Rational& q) {
  const int s = sgn(q);
  return s > 0 ? Sign::positive : (s < 0 ? Sign::negative : Sign::zero);
}

SignPattern evaluate_pattern(const std::vector<LineNormal>& normals, const Direction& d) {
  SignPattern pattern(normals.size());
  for (std::size_t j = 0; j < normals.size(); ++j) pattern[j] = sign_of(d.s * normals[j].a + d.t * normals[j].b);
  return pattern;
}

IndexSet indices_with(const SignPattern& pattern, Sign which) {
  IndexSet out;
  for (std::size_t j = 0; j < pattern.size(); ++j) {
    if (pattern[j] == which) out.push_back(j);
  }
  return out;
}

/// Upper half-plane (t > 0, or t = 0 with s > 0) comes first.
int half_of(const Direction& d) { return (d.t > 0 || (d.t == 0 && d.s > 0)) ? 0 : 1; }

void order_canonically(PartitionResult& r) {
  if (r.second < r.first) std::swap(r.first, r.second);
}

}  // namespace

std::size_t count_sign(const SignPattern& pattern, Sign which) {
  return static_cast<std::size_t>(std::count(pattern.begin(), pattern.end(), which));
}

bool angularly_before(const Direction& lhs, const Direction& rhs) {
  const int hl = half_of(lhs);
  const int hr = half_of(rhs);
  if (hl != hr) return hl < hr;
  return lhs.s * rhs.t - lhs.t * rhs.s > 0;
}

PlaneBasis compute_plane(const Configuration& c) {
  require_general_position(c);
  std::vector<Vec> basis = null_space_basis(build_system(c));
  if (basis.size() != 2) {
    throw TheoremViolation("solution plane has dimension " + std::to_string(basis.size()) +
                           " for a configuration in general position");
  }
  return PlaneBasis{std::move(basis[0]), std::move(basis[1])};
}

std::vector<LineNormal> line_normals(const PlaneBasis& basis) {
  if (basis.u.size() != basis.v.size()) throw DimensionError("plane basis vectors differ in length");
  std::vector<LineNormal> normals;
  normals.reserve(basis.u.size());
  for (std::size_t i = 0; i < basis.u.size(); ++i) {
    if (basis.u[i] == 0 && basis.v[i] == 0) {
      throw TheoremViolation("coordinate " + std::to_string(i + 1) + " vanishes on the whole solution plane");
    }
    normals.push_back(LineNormal{i, basis.u[i], basis.v[i]});
  }
  for (std::size_t i = 0; i < normals.size(); ++i) {
    for (std::size_t j = i + 1; j < normals.size(); ++j) {
      if (normals[i].a * normals[j].b - normals[j].a * normals[i].b == 0) {
        throw TheoremViolation("lines " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
      }
    }
  }
  return normals;
}

SweepOrder sweep(const std::vector<LineNormal>& normals) {
  SweepOrder order;
  order.crossings.reserve(2 * normals.size());
  for (const auto& line : normals) {
    for (const Direction& d : {Direction{-line.b, line.a}, Direction{line.b, -line.a}}) {
      order.crossings.push_back(Crossing{line.index, d, evaluate_pattern(normals, d)});
    }
  }
  std::sort(order.crossings.begin(), order.crossings.end(),
            [](const Crossing& x, const Crossing& y) { return angularly_before(x.direction, y.direction); });

  for (const auto& crossing : order.crossings) {
    if (count_sign(crossing.pattern, Sign::zero) != 1) {
      throw TheoremViolation("crossing on line " + std::to_string(crossing.line + 1) +
                             " does not have exactly one vanishing coordinate");
    }
  }

  const std::size_t m = order.crossings.size();
  order.sectors.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    const Direction& here = order.crossings[k].direction;
    const Direction& next = order.crossings[(k + 1) % m].direction;
    order.sectors.push_back(evaluate_pattern(normals, Direction{here.s + next.s, here.t + next.t}));
  }
  return order;
}

Vec plane_point(const PlaneBasis& basis, const Direction& d) { return d.s * basis.u + d.t * basis.v; }

LemmaPoint lemma_intersection_point(const Configuration& c, const Vec& solution) {
  if (solution.size() != c.size()) {
    throw InvalidWitnessError("witness has " + std::to_string(solution.size()) + " coordinates, expected " +
                              std::to_string(c.size()));
  }
  if (solution.is_zero()) throw InvalidWitnessError("witness is the zero vector");
  if (!(build_system(c) * solution).is_zero()) throw InvalidWitnessError("witness does not solve the system");

  LemmaPoint out;
  Rational total = 0;
  for (std::size_t i = 0; i < solution.size(); ++i) {
    if (solution[i] > 0) total += solution[i];
  }
  for (std::size_t i = 0; i < solution.size(); ++i) {
    if (solution[i] > 0) {
      out.plus.indices.push_back(i);
      out.plus.coefficients.push_back(solution[i] / total);
    } else if (solution[i] < 0) {
      out.minus.indices.push_back(i);
      out.minus.coefficients.push_back(-solution[i] / total);
    }
  }
  out.point = out.plus.evaluate(c);
  return out;
}

PartitionResult find_even_partition(const Configuration& c) {
  const std::size_t n = c.dimension();
  if (n % 2 != 0) throw ParityError("find_even_partition needs even n, got n=" + std::to_string(n));
  const PlaneBasis basis = compute_plane(c);
  const SweepOrder order = sweep(line_normals(basis));
  const std::size_t half = (n + 2) / 2;

  for (const auto& crossing : order.crossings) {
    if (count_sign(crossing.pattern, Sign::positive) != half || count_sign(crossing.pattern, Sign::negative) != half) {
      continue;
    }
    LemmaPoint lemma = lemma_intersection_point(c, plane_point(basis, crossing.direction));
    PartitionResult r;
    r.parity = ParityCase::even;
    r.first = lemma.plus.indices;
    r.second = lemma.minus.indices;
    InteriorWitness w{std::move(lemma.point), std::move(lemma.plus), std::move(lemma.minus)};
    if (r.second < r.first) {
      std::swap(r.first, r.second);
      std::swap(w.first, w.second);
    }
    r.certificate.witness = std::move(w);
    return r;
  }
  throw TheoremViolation("no crossing with (n+2)/2 positive and negative coordinates");
}

PartitionResult find_odd_partition(const Configuration& c) {
  const std::size_t n = c.dimension();
  if (n % 2 == 0) throw ParityError("find_odd_partition needs odd n, got n=" + std::to_string(n));
  const PlaneBasis basis = compute_plane(c);
  const SweepOrder order = sweep(line_normals(basis));
  const std::size_t big = (n + 3) / 2;

  auto mostly_positive = [&](const Crossing& x) { return count_sign(x.pattern, Sign::positive) == big; };
  auto mostly_negative = [&](const Crossing& x) { return count_sign(x.pattern, Sign::negative) == big; };

  const std::size_t m = order.crossings.size();
  for (std::size_t k = 0; k < m; ++k) {
    const Crossing& here = order.crossings[k];
    const Crossing& next = order.crossings[(k + 1) % m];
    const Crossing* x1 = nullptr;
    const Crossing* x2 = nullptr;
    if (mostly_positive(here) && mostly_negative(next)) {
      x1 = &here;
      x2 = &next;
    } else if (mostly_negative(here) && mostly_positive(next)) {
      x1 = &next;
      x2 = &here;
    } else {
      continue;
    }

    const IndexSet p1 = indices_with(x1->pattern, Sign::positive);
    const IndexSet n2 = indices_with(x2->pattern, Sign::negative);
    IndexSet all = p1;
    all.insert(all.end(), n2.begin(), n2.end());
    std::sort(all.begin(), all.end());
    if (all != complement({}, c.size())) {
      throw TheoremViolation("adjacent crossings do not split the points into two complementary halves");
    }

    // At x¹ the facet of N2 (negatives of x¹) meets the interior of P1; at x²
    // the facet of P1 (positives of x²) meets the interior of N2.
    LemmaPoint at_x1 = lemma_intersection_point(c, plane_point(basis, x1->direction));
    LemmaPoint at_x2 = lemma_intersection_point(c, plane_point(basis, x2->direction));

    LinkingWitness w;
    w.first = p1;
    w.second = n2;
    w.first_boundary = Piercing{std::move(at_x2.point), std::move(at_x2.plus), std::move(at_x2.minus)};
    w.second_boundary = Piercing{std::move(at_x1.point), std::move(at_x1.minus), std::move(at_x1.plus)};

    PartitionResult r;
    r.parity = ParityCase::odd;
    r.first = p1;
    r.second = n2;
    order_canonically(r);
    r.certificate.witness = std::move(w);
    return r;
  }
  throw TheoremViolation("no adjacent crossing pair with (n+3)/2 positive then (n+3)/2 negative coordinates");
}

PartitionResult find_partition(const Configuration& c) {
  return c.dimension() % 2 == 0 ? find_even_partition(c) : find_odd_partition(c);
}

}  // namespace radonlink
