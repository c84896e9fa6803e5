#pragma once

#include <cstddef>
#include <vector>

namespace edval {

using IndexTuple = std::vector<std::size_t>;

/// All k-subsets of {0, ..., n-1} as increasing tuples, in lexicographic order.
inline std::vector<IndexTuple> k_subsets(std::size_t n, std::size_t k) {
  std::vector<IndexTuple> out;
  if (k > n) return out;
  IndexTuple cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace edval
