#include "radonlink/oracle.hpp"

#include <algorithm>
#include <exception>
#include <string>
#include <thread>

#include "radonlink/errors.hpp"
#include "radonlink/verify.hpp"

namespace radonlink {

namespace {

void check_ceiling(const Configuration& c, const EnumerationOptions& options) {
  if (c.dimension() > options.max_n) {
    throw DimensionError("enumeration is limited to n <= " + std::to_string(options.max_n) + " (got n=" +
                         std::to_string(c.dimension()) + "); raise the ceiling explicitly to go further");
  }
}

/// Evaluates `qualifies` on every candidate, possibly across threads. The
/// result keeps candidate order, so it does not depend on scheduling.
template <typename Predicate>
std::vector<SubsetPair> filter_parallel(const std::vector<SubsetPair>& candidates, std::size_t jobs,
                                        Predicate qualifies) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, std::max<std::size_t>(1, candidates.size()));

  std::vector<char> hit(candidates.size(), 0);
  std::vector<std::exception_ptr> failures(jobs);
  auto work = [&](std::size_t worker) {
    try {
      for (std::size_t k = worker; k < candidates.size(); k += jobs) hit[k] = qualifies(candidates[k]) ? 1 : 0;
    } catch (...) {
      failures[worker] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) threads.emplace_back(work, w);
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  std::vector<SubsetPair> out;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (hit[k]) out.push_back(candidates[k]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SubsetPair make_pair_canonical(IndexSet a, IndexSet b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (b < a) std::swap(a, b);
  return SubsetPair{std::move(a), std::move(b)};
}

bool EnumerationReport::contains(const SubsetPair& p) const {
  return std::binary_search(pairs.begin(), pairs.end(), make_pair_canonical(p.first, p.second));
}

EnumerationReport enumerate_odd(const Configuration& c, const EnumerationOptions& options) {
  const std::size_t n = c.dimension();
  if (n % 2 == 0) throw ParityError("enumerate_odd needs odd n, got n=" + std::to_string(n));
  check_ceiling(c, options);
  require_general_position(c);

  // Point 0 always sits in the first half, so each unordered split appears once.
  std::vector<SubsetPair> candidates;
  const std::size_t half = (n + 3) / 2;
  for_each_combination(c.size() - 1, half - 1, [&](const IndexSet& rest) {
    IndexSet first{0};
    for (auto i : rest) first.push_back(i + 1);
    candidates.push_back(make_pair_canonical(first, complement(first, c.size())));
    return true;
  });

  EnumerationReport report;
  report.parity_case = ParityCase::odd;
  report.candidates = candidates.size();
  report.pairs = filter_parallel(candidates, options.jobs,
                                 [&](const SubsetPair& p) { return linked(c, p.first, p.second); });
  return report;
}

EnumerationReport enumerate_even(const Configuration& c, const EnumerationOptions& options) {
  const std::size_t n = c.dimension();
  if (n % 2 != 0) throw ParityError("enumerate_even needs even n, got n=" + std::to_string(n));
  check_ceiling(c, options);
  require_general_position(c);

  const std::size_t k = (n + 2) / 2;
  std::vector<SubsetPair> candidates;
  for_each_combination(c.size(), k, [&](const IndexSet& first) {
    const IndexSet rest = complement(first, c.size());
    for_each_combination(rest.size(), k, [&](const IndexSet& pick) {
      IndexSet second;
      for (auto j : pick) second.push_back(rest[j]);
      if (first < second) candidates.push_back(SubsetPair{first, second});
      return true;
    });
    return true;
  });

  EnumerationReport report;
  report.parity_case = ParityCase::even;
  report.candidates = candidates.size();
  report.pairs = filter_parallel(candidates, options.jobs, [&](const SubsetPair& p) {
    return interior_intersection(c, p.first, p.second).exists;
  });
  return report;
}

EnumerationReport enumerate_pairs(const Configuration& c, const EnumerationOptions& options) {
  return c.dimension() % 2 == 0 ? enumerate_even(c, options) : enumerate_odd(c, options);
}

}  // namespace radonlink
