#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace radonlink {

using IndexSet = std::vector<std::size_t>;

/// Calls `visit(const IndexSet&)` for every k-subset of {0, …, n−1} in
/// lexicographic order. Stops early when `visit` returns false.
template <typename Visit>
void for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  IndexSet current(k);
  std::iota(current.begin(), current.end(), std::size_t{0});
  while (true) {
    if (!visit(static_cast<const IndexSet&>(current))) return;
    // Rightmost position that can still advance.
    std::size_t pos = k;
    while (pos > 0 && current[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return;
    ++current[pos - 1];
    for (std::size_t j = pos; j < k; ++j) current[j] = current[j - 1] + 1;
  }
}

/// Sorted complement of `subset` inside {0, …, n−1}.
inline IndexSet complement(const IndexSet& subset, std::size_t n) {
  std::vector<bool> used(n, false);
  for (auto i : subset) used[i] = true;
  IndexSet out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!used[i]) out.push_back(i);
  }
  return out;
}

}  // namespace radonlink
