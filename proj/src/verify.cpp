#include "radonlink/verify.hpp"

#include <algorithm>
#include <string>

#include "radonlink/errors.hpp"

namespace radonlink {

namespace {

void check_indices(const Configuration& c, const IndexSet& s, const char* what) {
  for (auto i : s) {
    if (i >= c.size()) {
      throw ValidationError(std::string(what) + ": point index " + std::to_string(i + 1) + " out of range 1.." +
                            std::to_string(c.size()));
    }
  }
  IndexSet sorted = s;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError(std::string(what) + ": repeated point index");
  }
}

bool disjoint(IndexSet a, IndexSet b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  IndexSet common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return common.empty();
}

IndexSet sorted_copy(IndexSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

IndexSet merged(const IndexSet& a, const IndexSet& b) {
  IndexSet out = a;
  out.insert(out.end(), b.begin(), b.end());
  return sorted_copy(std::move(out));
}

/// Unknowns (λ over a, μ over b) of Σ λ A − Σ μ B = 0, Σ λ = 1, Σ μ = 1.
LinearSolution solve_common_point(const Configuration& c, const IndexSet& a, const IndexSet& b) {
  const std::size_t n = c.dimension();
  Mat m(n + 2, a.size() + b.size());
  Vec rhs(n + 2);
  for (std::size_t k = 0; k < a.size(); ++k) {
    for (std::size_t r = 0; r < n; ++r) m(r, k) = c.point(a[k])[r];
    m(n, k) = 1;
  }
  for (std::size_t k = 0; k < b.size(); ++k) {
    const std::size_t col = a.size() + k;
    for (std::size_t r = 0; r < n; ++r) m(r, col) = -c.point(b[k])[r];
    m(n + 1, col) = 1;
  }
  rhs[n] = 1;
  rhs[n + 1] = 1;
  return solve_linear(m, rhs);
}

/// Splits the solution into the two coefficient lists and fills the flags.
PierceResult classify(const Configuration& c, const IndexSet& a, const IndexSet& b, const LinearSolution& s) {
  PierceResult out;
  if (s.kind == LinearSolution::Kind::inconsistent) return out;
  if (s.kind == LinearSolution::Kind::underdetermined) {
    const IndexSet support = merged(a, b);
    throw GeneralPositionError(support, "affine hulls of " + format_index_set(sorted_copy(a)) + " and " +
                                            format_index_set(sorted_copy(b)) +
                                            " meet in more than a point (not in general position)");
  }
  out.first_coefficients.assign(s.value.begin(), s.value.begin() + static_cast<std::ptrdiff_t>(a.size()));
  out.second_coefficients.assign(s.value.begin() + static_cast<std::ptrdiff_t>(a.size()), s.value.end());
  auto any_zero = [](const std::vector<Rational>& v) {
    return std::any_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
  };
  auto nonneg = [](const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q >= 0; });
  };
  out.first_on_boundary = any_zero(out.first_coefficients);
  out.second_on_boundary = any_zero(out.second_coefficients);
  out.exists = nonneg(out.first_coefficients) && nonneg(out.second_coefficients) && !out.first_on_boundary &&
               !out.second_on_boundary;
  if (out.exists) out.point = Combination{a, out.first_coefficients}.evaluate(c);
  return out;
}

void require_odd(const Configuration& c, const char* op) {
  if (c.dimension() % 2 == 0) {
    throw ParityError(std::string(op) + " needs odd n, got n=" + std::to_string(c.dimension()));
  }
}

}  // namespace

Vec Combination::evaluate(const Configuration& c) const {
  if (indices.size() != coefficients.size()) {
    throw ValidationError("combination has " + std::to_string(indices.size()) + " indices but " +
                          std::to_string(coefficients.size()) + " coefficients");
  }
  check_indices(c, indices, "combination");
  Vec sum(c.dimension());
  for (std::size_t k = 0; k < indices.size(); ++k) sum = sum + coefficients[k] * c.point(indices[k]);
  return sum;
}

PierceResult interior_intersection(const Configuration& c, const IndexSet& a, const IndexSet& b) {
  check_indices(c, a, "first simplex");
  check_indices(c, b, "second simplex");
  if (a.empty() || b.empty()) throw DimensionError("interior_intersection needs nonempty index sets");
  if (a.size() + b.size() > c.dimension() + 2) {
    throw DimensionError("interior_intersection needs |a| + |b| <= n + 2");
  }
  if (!disjoint(a, b)) throw ValidationError("interior_intersection needs disjoint index sets");
  return classify(c, a, b, solve_common_point(c, a, b));
}

PierceResult pierce(const Configuration& c, const IndexSet& facet, const IndexSet& simplex) {
  require_odd(c, "pierce");
  const std::size_t n = c.dimension();
  check_indices(c, facet, "facet");
  check_indices(c, simplex, "simplex");
  if (facet.size() != (n + 1) / 2 || simplex.size() != (n + 3) / 2) {
    throw DimensionError("pierce needs a " + std::to_string((n + 1) / 2) + "-point facet and a " +
                         std::to_string((n + 3) / 2) + "-point simplex");
  }
  if (!disjoint(facet, simplex)) throw ValidationError("pierce needs disjoint index sets");

  PierceResult out = classify(c, facet, simplex, solve_common_point(c, facet, simplex));
  const bool touching = !out.first_coefficients.empty() &&
                        std::all_of(out.first_coefficients.begin(), out.first_coefficients.end(),
                                    [](const Rational& q) { return q >= 0; }) &&
                        std::all_of(out.second_coefficients.begin(), out.second_coefficients.end(),
                                    [](const Rational& q) { return q >= 0; });
  if (touching && (out.first_on_boundary || out.second_on_boundary)) {
    IndexSet support;
    for (std::size_t k = 0; k < facet.size(); ++k) {
      if (out.first_coefficients[k] != 0) support.push_back(facet[k]);
    }
    for (std::size_t k = 0; k < simplex.size(); ++k) {
      if (out.second_coefficients[k] != 0) support.push_back(simplex[k]);
    }
    support = sorted_copy(std::move(support));
    throw GeneralPositionError(support, "points " + format_index_set(support) +
                                            " are affinely dependent (facet grazes a simplex boundary)");
  }
  return out;
}

LinkReport link_report(const Configuration& c, const IndexSet& a, const IndexSet& b) {
  require_odd(c, "linked");
  const std::size_t half = (c.dimension() + 3) / 2;
  if (a.size() != half || b.size() != half) {
    throw DimensionError("linked needs two " + std::to_string(half) + "-point simplices");
  }
  if (!disjoint(a, b)) throw ValidationError("linked needs disjoint index sets");

  auto count = [&](const IndexSet& boundary_of, const IndexSet& interior_of) {
    std::size_t hits = 0;
    for (std::size_t drop = 0; drop < boundary_of.size(); ++drop) {
      IndexSet facet;
      for (std::size_t k = 0; k < boundary_of.size(); ++k) {
        if (k != drop) facet.push_back(boundary_of[k]);
      }
      if (pierce(c, facet, interior_of).exists) ++hits;
    }
    return hits;
  };

  LinkReport report;
  report.a_boundary_into_b = count(a, b);
  report.b_boundary_into_a = count(b, a);
  report.linked = report.a_boundary_into_b == 1;
  if (report.linked != (report.b_boundary_into_a == 1)) {
    throw TheoremViolation("linking verdict is asymmetric for " + format_index_set(sorted_copy(a)) + " / " +
                           format_index_set(sorted_copy(b)) + ": counts " + std::to_string(report.a_boundary_into_b) +
                           " and " + std::to_string(report.b_boundary_into_a));
  }
  return report;
}

bool linked(const Configuration& c, const IndexSet& a, const IndexSet& b) { return link_report(c, a, b).linked; }

namespace {

struct Checker {
  const Configuration& c;
  VerificationReport report;

  bool require(bool condition, const std::string& clause) {
    if (!condition && report.ok) {
      report.ok = false;
      report.failed_clause = clause;
    }
    return condition;
  }

  static bool all_positive(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q > 0; });
  }
  static bool all_nonnegative(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q >= 0; });
  }
  static bool sums_to_one(const std::vector<Rational>& v) {
    Rational s = 0;
    for (const auto& q : v) s += q;
    return s == 1;
  }

  void check_point(const Vec& point, const char* what) {
    if (point.size() != c.dimension()) {
      throw ValidationError(std::string(what) + " has " + std::to_string(point.size()) + " coordinates, expected " +
                            std::to_string(c.dimension()));
    }
  }

  void check_interior(const PartitionResult& r, const InteriorWitness& w) {
    const std::size_t n = c.dimension();
    check_point(w.point, "intersection point");
    // evaluate() throws on malformed combinations before any clause runs.
    const Vec first_point = w.first.evaluate(c);
    const Vec second_point = w.second.evaluate(c);

    if (!require(r.parity == ParityCase::even, "interior-intersection certificate must be for the even case")) return;
    if (!require(n % 2 == 0, "interior-intersection certificate needs even n")) return;
    const std::size_t k = (n + 2) / 2;
    require(r.first.size() == k && r.second.size() == k, "subsets must have (n+2)/2 points each");
    require(disjoint(r.first, r.second), "subsets must be disjoint");
    const IndexSet wa = sorted_copy(w.first.indices);
    const IndexSet wb = sorted_copy(w.second.indices);
    require((wa == r.first && wb == r.second) || (wa == r.second && wb == r.first),
            "certificate combinations must range over the two subsets");
    require(all_positive(w.first.coefficients), "first coefficients must be strictly positive");
    require(all_positive(w.second.coefficients), "second coefficients must be strictly positive");
    require(sums_to_one(w.first.coefficients), "first coefficients must sum to 1");
    require(sums_to_one(w.second.coefficients), "second coefficients must sum to 1");
    require(first_point == w.point, "first combination must evaluate to the common point");
    require(second_point == w.point, "second combination must evaluate to the common point");
    if (report.ok) {
      require(interior_intersection(c, r.first, r.second).exists, "recomputed interiors must intersect");
    }
  }

  void check_piercing(const Piercing& p, const IndexSet& boundary_of, const IndexSet& interior_of,
                      const std::string& label) {
    check_point(p.point, "piercing point");
    const Vec facet_point = p.facet.evaluate(c);
    const Vec simplex_point = p.simplex.evaluate(c);

    const IndexSet facet = sorted_copy(p.facet.indices);
    require(facet.size() + 1 == boundary_of.size() &&
                std::includes(boundary_of.begin(), boundary_of.end(), facet.begin(), facet.end()),
            label + ": facet must be a facet of its simplex");
    require(sorted_copy(p.simplex.indices) == interior_of, label + ": pierced simplex must be the other subset");
    require(all_nonnegative(p.facet.coefficients), label + ": facet coefficients must be nonnegative");
    require(sums_to_one(p.facet.coefficients), label + ": facet coefficients must sum to 1");
    require(all_positive(p.simplex.coefficients), label + ": simplex coefficients must be strictly positive");
    require(sums_to_one(p.simplex.coefficients), label + ": simplex coefficients must sum to 1");
    require(facet_point == p.point, label + ": facet combination must evaluate to the piercing point");
    require(simplex_point == p.point, label + ": simplex combination must evaluate to the piercing point");
  }

  void check_linking(const PartitionResult& r, const LinkingWitness& w) {
    const std::size_t n = c.dimension();
    check_indices(c, w.first, "linking first subset");
    check_indices(c, w.second, "linking second subset");
    if (!require(r.parity == ParityCase::odd, "linking certificate must be for the odd case")) return;
    if (!require(n % 2 == 1, "linking certificate needs odd n")) return;
    const std::size_t k = (n + 3) / 2;
    require(r.first.size() == k && r.second.size() == k, "subsets must have (n+3)/2 points each");
    require(disjoint(r.first, r.second), "subsets must be disjoint");
    require(merged(r.first, r.second) == complement({}, c.size()), "subsets must cover all points");
    const IndexSet wa = sorted_copy(w.first);
    const IndexSet wb = sorted_copy(w.second);
    require((wa == r.first && wb == r.second) || (wa == r.second && wb == r.first),
            "certificate roles must name the two subsets");
    check_piercing(w.first_boundary, wa, wb, "first piercing");
    check_piercing(w.second_boundary, wb, wa, "second piercing");
    if (report.ok && wa.size() == k && wb.size() == k && disjoint(wa, wb)) {
      const LinkReport link = link_report(c, wa, wb);
      require(link.linked, "recomputed piercing count must be exactly 1");
      require(link.a_boundary_into_b == w.first_into_second && link.b_boundary_into_a == w.second_into_first,
              "recorded piercing counts must match the recomputed ones");
      require(link.a_boundary_into_b == 1 && link.b_boundary_into_a == 1,
              "both directed piercing counts must be exactly 1");
    }
  }
};

}  // namespace

VerificationReport check_certificate(const Configuration& c, const PartitionResult& r) {
  check_indices(c, r.first, "first subset");
  check_indices(c, r.second, "second subset");
  Checker checker{c, {}};
  checker.require(std::is_sorted(r.first.begin(), r.first.end()) && std::is_sorted(r.second.begin(), r.second.end()),
                  "subsets must be sorted");
  if (const auto* interior = std::get_if<InteriorWitness>(&r.certificate.witness)) {
    checker.check_interior(r, *interior);
  } else {
    checker.check_linking(r, std::get<LinkingWitness>(r.certificate.witness));
  }
  return checker.report;
}

bool verify_certificate(const Configuration& c, const PartitionResult& r) { return check_certificate(c, r).ok; }

}  // namespace radonlink
