#pragma once

#include <cstddef>
#include <vector>

#include "bootperc/vertex_set.hpp"

namespace bootperc {

/// Visits every `size`-subset of `pool` in lexicographic order of sorted member lists.
/// `visit` returns false to stop early; the function returns false iff stopped.
template <std::size_t W, typename Visit>
bool for_each_subset_of_size(const BasicVertexSet<W>& pool, int size, Visit&& visit) {
  const std::vector<Vertex> items = pool.to_vector();
  const int n = static_cast<int>(items.size());
  if (size < 0 || size > n) return true;
  std::vector<int> idx(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    BasicVertexSet<W> s;
    for (int i : idx) s.insert(items[i]);
    if (!visit(s)) return false;
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Visits subsets of `pool` with sizes lo..hi, by size then lexicographically.
template <std::size_t W, typename Visit>
bool for_each_subset(const BasicVertexSet<W>& pool, int lo, int hi, Visit&& visit) {
  for (int s = lo; s <= hi; ++s)
    if (!for_each_subset_of_size(pool, s, visit)) return false;
  return true;
}

inline unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
  return c;
}

}  // namespace bootperc
