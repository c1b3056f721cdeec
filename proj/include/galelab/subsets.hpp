#pragma once

#include <numeric>

#include "galelab/types.hpp"

namespace galelab {

/// First k-subset of {0..n-1} in lexicographic order.
inline IndexSet first_combination(int k) {
  IndexSet c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 0);
  return c;
}

/// Advances a sorted k-subset of {0..n-1} lexicographically; false past the last one.
inline bool next_combination(IndexSet& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

/// Sorted complement of `subset` in {0..n-1}.
inline IndexSet complement(const IndexSet& subset, int n) {
  IndexSet out;
  out.reserve(static_cast<std::size_t>(n) - subset.size());
  std::size_t p = 0;
  for (int i = 0; i < n; ++i) {
    if (p < subset.size() && subset[p] == i) {
      ++p;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace galelab
