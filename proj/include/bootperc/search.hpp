#pragma once

// Exhaustive extremal searches over seed sets.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "bootperc/graph.hpp"
#include "bootperc/percolation.hpp"
#include "bootperc/subsets.hpp"

namespace bootperc {

template <std::size_t W>
struct BasicMinSetResult {
  /// m(G, r); empty when the cap stopped the scan first.
  std::optional<int> m;
  BasicVertexSet<W> witness;
  unsigned long long subsets_tested = 0;
  /// False when `cap` ended the scan; `lower_bound` is then the best bound proved.
  bool complete = true;
  int lower_bound = 0;
};

using MinSetResult = BasicMinSetResult<1>;

/// Vertices of degree below r. Outside the seed they can never become infected.
template <std::size_t W>
BasicVertexSet<W> forced_seed_vertices(const BasicGraph<W>& g, int r) {
  BasicVertexSet<W> f;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) < r) f.insert(v);
  return f;
}

/// Ascending-size exhaustive search for a smallest percolating set.
///
/// Every set smaller than max(min(r, n), #forced) fails for structural reasons (nothing
/// gets infected, or a forced vertex is missing), so the scan starts there. Within a size
/// class only supersets of the forced vertices are tried and the first hit wins, which
/// makes the witness the lexicographically least percolating set of minimum size.
template <std::size_t W>
BasicMinSetResult<W> min_percolating_set(const BasicGraph<W>& g, int r, int cap) {
  if (r < 1) throw GraphError("percolation threshold must be at least 1");
  BasicMinSetResult<W> res;
  const auto forced = forced_seed_vertices(g, r);
  const auto free = g.vertices() - forced;
  const int start = std::max(std::min(r, g.n()), forced.size());
  const int stop = std::min(cap, g.n());
  for (int size = start; size <= stop; ++size) {
    bool hit = false;
    for_each_subset_of_size(free, size - forced.size(), [&](const BasicVertexSet<W>& extra) {
      ++res.subsets_tested;
      const auto seed = extra | forced;
      if (percolation_result(g, seed, r).percolates) {
        res.m = size;
        res.witness = seed;
        hit = true;
        return false;
      }
      return true;
    });
    if (hit) {
      res.lower_bound = size;
      return res;
    }
  }
  res.complete = false;
  res.lower_bound = std::max(start, stop + 1);
  return res;
}

/// Lexicographically least percolating set of exactly r vertices, if any.
template <std::size_t W>
std::optional<BasicVertexSet<W>> is_r_bg(const BasicGraph<W>& g, int r) {
  if (r < 1) throw GraphError("percolation threshold must be at least 1");
  std::optional<BasicVertexSet<W>> found;
  for_each_subset_of_size(g.vertices(), r, [&](const BasicVertexSet<W>& s) {
    if (percolation_result(g, s, r).percolates) {
      found = s;
      return false;
    }
    return true;
  });
  return found;
}

/// All percolating sets of exactly `size` vertices at threshold r, in lexicographic order.
template <std::size_t W>
std::vector<BasicVertexSet<W>> percolating_sets(const BasicGraph<W>& g, int r, int size) {
  std::vector<BasicVertexSet<W>> out;
  for_each_subset_of_size(g.vertices(), size, [&](const BasicVertexSet<W>& s) {
    if (percolation_result(g, s, r).percolates) out.push_back(s);
    return true;
  });
  return out;
}

/// Minimum-degree condition r * delta >= (r - 1) * n, in integers.
template <std::size_t W>
bool sufficient_min_degree(const BasicGraph<W>& g, int r) {
  if (g.n() < r) throw GraphError("minimum-degree shortcut needs n >= r");
  return static_cast<long long>(r) * degree_stats(g).min_degree >= static_cast<long long>(r - 1) * g.n();
}

/// Ore-type condition: complete, or every non-adjacent pair has degree sum >= n.
template <std::size_t W>
bool sufficient_ore(const BasicGraph<W>& g) {
  if (g.n() < 2) throw GraphError("Ore shortcut needs n >= 2");
  const auto s = degree_stats(g);
  return !s.sigma2 || *s.sigma2 >= g.n();
}

template <std::size_t W>
struct BasicRoundsExtremes {
  std::optional<int> min_k;
  std::optional<int> max_k;
  BasicVertexSet<W> min_witness;
  BasicVertexSet<W> max_witness;
  unsigned long long seeds_tested = 0;
  bool complete = true;
};

using RoundsExtremes = BasicRoundsExtremes<1>;

/// Smallest and largest round counts over percolating seeds of size 1..size_cap.
/// Witnesses are the first seeds (by size, then lexicographically) attaining each extreme.
template <std::size_t W>
BasicRoundsExtremes<W> rounds_extremes(const BasicGraph<W>& g, int r, int size_cap,
                                       unsigned long long budget = 1ull << 32) {
  if (r < 1) throw GraphError("percolation threshold must be at least 1");
  BasicRoundsExtremes<W> out;
  for_each_subset(g.vertices(), 1, std::min(size_cap, g.n()), [&](const BasicVertexSet<W>& s) {
    if (out.seeds_tested >= budget) {
      out.complete = false;
      return false;
    }
    ++out.seeds_tested;
    const auto res = percolation_result(g, s, r);
    if (!res.percolates) return true;
    if (!out.min_k || res.k < *out.min_k) {
      out.min_k = res.k;
      out.min_witness = s;
    }
    if (!out.max_k || res.k > *out.max_k) {
      out.max_k = res.k;
      out.max_witness = s;
    }
    return true;
  });
  return out;
}

}  // namespace bootperc
