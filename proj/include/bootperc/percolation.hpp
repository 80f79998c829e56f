#pragma once

// r-neighbor bootstrap percolation.
//
// Rounds are numbered from 1: seed vertices carry round 1, a vertex labeled t >= 2
// has at least r neighbors labeled <= t-1 and fewer than r labeled <= t-2. The
// round count k is the last round that labels anything, so k == 1 means the seed
// never infected a single vertex.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bootperc/graph.hpp"

namespace bootperc {

template <std::size_t W>
struct BasicInfectionTrace {
  int r = 1;
  BasicVertexSet<W> seed;
  std::vector<std::optional<int>> round_of;
  int k = 1;
  bool percolates = false;

  /// Vertices newly infected in `round` (round 1 is the seed).
  BasicVertexSet<W> round_set(int round) const {
    BasicVertexSet<W> s;
    for (std::size_t v = 0; v < round_of.size(); ++v)
      if (round_of[v] == round) s.insert(static_cast<Vertex>(v));
    return s;
  }

  BasicVertexSet<W> closure() const {
    BasicVertexSet<W> s;
    for (std::size_t v = 0; v < round_of.size(); ++v)
      if (round_of[v]) s.insert(static_cast<Vertex>(v));
    return s;
  }

  friend bool operator==(const BasicInfectionTrace&, const BasicInfectionTrace&) = default;
};

using InfectionTrace = BasicInfectionTrace<1>;

template <std::size_t W>
struct BasicPercolationResult {
  BasicVertexSet<W> closure;
  bool percolates = false;
  int k = 1;
};

using PercolationResult = BasicPercolationResult<1>;

namespace detail {

template <std::size_t W>
void check_percolation_args(const BasicGraph<W>& g, const BasicVertexSet<W>& seed, int r) {
  if (r < 1) throw GraphError("percolation threshold must be at least 1");
  if (!seed.is_subset_of(g.vertices())) throw GraphError("seed contains a vertex outside the graph");
}

/// Counter propagation; calls on_label(v, round) for every newly infected vertex
/// (seed vertices first, with round 1). Returns (closure, k).
template <std::size_t W, typename OnLabel>
std::pair<BasicVertexSet<W>, int> propagate(const BasicGraph<W>& g, const BasicVertexSet<W>& seed, int r,
                                            OnLabel&& on_label) {
  std::vector<int> count(static_cast<std::size_t>(g.n()), 0);
  BasicVertexSet<W> infected = seed;
  BasicVertexSet<W> current = seed;
  for (Vertex v : seed) on_label(v, 1);
  int round = 1;
  while (true) {
    BasicVertexSet<W> next;
    for (Vertex v : current) {
      for (Vertex u : g.neighbors(v) - infected) {
        if (++count[u] == r) next.insert(u);
      }
    }
    if (next.empty()) break;
    ++round;
    for (Vertex u : next) on_label(u, round);
    infected |= next;
    current = next;
  }
  return {infected, round};
}

}  // namespace detail

/// Closure and round count without building per-vertex labels.
template <std::size_t W>
BasicPercolationResult<W> percolation_result(const BasicGraph<W>& g, const BasicVertexSet<W>& seed, int r) {
  detail::check_percolation_args(g, seed, r);
  auto [closure, k] = detail::propagate(g, seed, r, [](Vertex, int) {});
  return {closure, closure == g.vertices(), k};
}

template <std::size_t W>
BasicInfectionTrace<W> percolate(const BasicGraph<W>& g, const BasicVertexSet<W>& seed, int r) {
  detail::check_percolation_args(g, seed, r);
  BasicInfectionTrace<W> t;
  t.r = r;
  t.seed = seed;
  t.round_of.assign(static_cast<std::size_t>(g.n()), std::nullopt);
  auto [closure, k] = detail::propagate(g, seed, r, [&t](Vertex v, int round) { t.round_of[v] = round; });
  t.k = k;
  t.percolates = closure == g.vertices();
  return t;
}

/// Literal fixed-point iteration: recompute A_t from A_{t-1} by scanning every vertex.
/// Quadratic and slow; exists so `percolate` has something independent to be tested against.
template <std::size_t W>
BasicInfectionTrace<W> percolate_naive(const BasicGraph<W>& g, const BasicVertexSet<W>& seed, int r) {
  detail::check_percolation_args(g, seed, r);
  BasicInfectionTrace<W> t;
  t.r = r;
  t.seed = seed;
  t.round_of.assign(static_cast<std::size_t>(g.n()), std::nullopt);
  std::vector<bool> infected(static_cast<std::size_t>(g.n()), false);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (seed.contains(v)) {
      infected[v] = true;
      t.round_of[v] = 1;
    }
  }
  int round = 1;
  while (true) {
    std::vector<bool> next = infected;
    bool changed = false;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (infected[v]) continue;
      int hits = 0;
      for (Vertex u = 0; u < g.n(); ++u)
        if (g.adjacent(u, v) && infected[u]) ++hits;
      if (hits >= r) {
        next[v] = true;
        changed = true;
      }
    }
    if (!changed) break;
    ++round;
    for (Vertex v = 0; v < g.n(); ++v)
      if (next[v] && !infected[v]) t.round_of[v] = round;
    infected = std::move(next);
  }
  t.k = round;
  t.percolates = true;
  for (bool b : infected) t.percolates = t.percolates && b;
  return t;
}

template <std::size_t W>
std::optional<int> rounds_to_percolation(const BasicInfectionTrace<W>& t) {
  if (!t.percolates) return std::nullopt;
  return t.k;
}

template <std::size_t W>
BasicPercolationResult<W> to_result(const BasicInfectionTrace<W>& t) {
  return {t.closure(), t.percolates, t.k};
}

}  // namespace bootperc
