#pragma once

// Connectivity, blocks, cut sets, local structure and distance invariants.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "bootperc/graph.hpp"
#include "bootperc/subsets.hpp"

namespace bootperc {

template <std::size_t W>
struct BasicBlockDecomposition {
  /// Maximal 2-connected pieces; bridges appear as 2-sets, isolated vertices as 1-sets.
  std::vector<BasicVertexSet<W>> blocks;
  BasicVertexSet<W> cut_vertices;
};

using BlockDecomposition = BasicBlockDecomposition<1>;

namespace detail {

template <std::size_t W>
struct BlockFinder {
  const BasicGraph<W>& g;
  std::vector<int> disc, low;
  std::vector<std::pair<Vertex, Vertex>> stack;
  BasicBlockDecomposition<W> out;
  int time = 0;

  explicit BlockFinder(const BasicGraph<W>& graph)
      : g(graph), disc(static_cast<std::size_t>(graph.n()), -1), low(static_cast<std::size_t>(graph.n()), 0) {}

  void run() {
    for (Vertex v = 0; v < g.n(); ++v) {
      if (disc[v] != -1) continue;
      if (g.degree(v) == 0) {
        disc[v] = time++;
        BasicVertexSet<W> single;
        single.insert(v);
        out.blocks.push_back(single);
        continue;
      }
      dfs(v, -1);
    }
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const auto& a, const auto& b) { return lex_less(a, b); });
  }

  void dfs(Vertex v, Vertex parent) {
    disc[v] = low[v] = time++;
    int children = 0;
    for (Vertex u : g.neighbors(v)) {
      if (disc[u] == -1) {
        ++children;
        stack.emplace_back(v, u);
        dfs(u, v);
        low[v] = std::min(low[v], low[u]);
        if (low[u] >= disc[v]) {
          if (parent != -1 || children > 1) out.cut_vertices.insert(v);
          BasicVertexSet<W> block;
          while (true) {
            auto [a, b] = stack.back();
            stack.pop_back();
            block.insert(a);
            block.insert(b);
            if (a == v && b == u) break;
          }
          out.blocks.push_back(block);
        }
      } else if (u != parent && disc[u] < disc[v]) {
        stack.emplace_back(v, u);
        low[v] = std::min(low[v], disc[u]);
      }
    }
  }
};

}  // namespace detail

/// Lowpoint (Hopcroft-Tarjan) block decomposition. Blocks are sorted lexicographically.
template <std::size_t W>
BasicBlockDecomposition<W> block_decomposition(const BasicGraph<W>& g) {
  detail::BlockFinder<W> f(g);
  f.run();
  return std::move(f.out);
}

template <std::size_t W>
int block_count(const BasicGraph<W>& g) {
  return static_cast<int>(block_decomposition(g).blocks.size());
}

/// True when deleting `removed` from the subgraph induced on `within` leaves a
/// disconnected graph (at least two components).
template <std::size_t W>
bool separates(const BasicGraph<W>& g, const BasicVertexSet<W>& within, const BasicVertexSet<W>& removed) {
  const auto rest = within - removed;
  return rest.size() >= 2 && !is_connected_within(g, rest);
}

/// k-connectivity of the subgraph induced on `within`: at least k+1 vertices and no
/// removal of fewer than k vertices disconnects it. Exhaustive over small removal sets.
template <std::size_t W>
bool is_k_connected_within(const BasicGraph<W>& g, const BasicVertexSet<W>& within, int k) {
  if (k < 1) throw GraphError("connectivity order must be at least 1");
  if (within.size() < k + 1) return false;
  for (Vertex v : within)
    if ((g.neighbors(v) & within).size() < k) return false;
  return for_each_subset(within, 0, k - 1, [&](const BasicVertexSet<W>& cut) { return !separates(g, within, cut); });
}

template <std::size_t W>
bool is_k_connected(const BasicGraph<W>& g, int k) {
  return is_k_connected_within(g, g.vertices(), k);
}

/// Inclusion-minimal vertex cut sets of size at most r-1, by size then lexicographically.
template <std::size_t W>
std::vector<BasicVertexSet<W>> cut_sets_below(const BasicGraph<W>& g, int r) {
  std::vector<BasicVertexSet<W>> found;
  const auto all = g.vertices();
  for_each_subset(all, 1, r - 1, [&](const BasicVertexSet<W>& x) {
    if (!separates(g, all, x)) return true;
    for (const auto& smaller : found)
      if (smaller.is_subset_of(x)) return true;
    found.push_back(x);
    return true;
  });
  return found;
}

/// Which sets k_blocks returns.
enum class KBlockMode {
  /// Maximal k-connected induced subgraphs. A maximal k-connected set can never be
  /// properly contained in a (k+1)-connected induced subgraph, so this also covers
  /// the "maximal, and not inside a (k+1)-connected subgraph" formulation.
  Maximal,
  /// Maximal k-connected sets that are not themselves (k+1)-connected.
  Ultrablock,
};

inline constexpr int kDefaultKBlockCap = 32;

namespace detail {

/// Largest subset of `s` whose induced minimum degree is at least k.
template <std::size_t W>
BasicVertexSet<W> k_core(const BasicGraph<W>& g, BasicVertexSet<W> s, int k) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v : s) {
      if ((g.neighbors(v) & s).size() < k) {
        s.erase(v);
        changed = true;
      }
    }
  }
  return s;
}

template <std::size_t W>
void maximal_k_connected(const BasicGraph<W>& g, BasicVertexSet<W> s, int k, std::vector<BasicVertexSet<W>>& out) {
  for (const auto& piece : components_within(g, k_core(g, s, k))) {
    if (piece.size() < k + 1) continue;
    std::optional<BasicVertexSet<W>> cut;
    for_each_subset(piece, 1, k - 1, [&](const BasicVertexSet<W>& c) {
      if (separates(g, piece, c)) {
        cut = c;
        return false;
      }
      return true;
    });
    if (!cut) {
      out.push_back(piece);
      continue;
    }
    // Every k-connected subset of `piece` survives deleting the cut and so sits
    // inside one component of piece - cut, plus (part of) the cut.
    for (const auto& side : components_within(g, piece - *cut)) maximal_k_connected(g, side | *cut, k, out);
  }
}

}  // namespace detail

/// k-blocks by recursive cut decomposition: split on any separating set of size < k,
/// recurse into each side together with the separator, then keep inclusion-maximal results.
template <std::size_t W>
std::vector<BasicVertexSet<W>> k_blocks(const BasicGraph<W>& g, int k, KBlockMode mode = KBlockMode::Maximal,
                                        int cap = kDefaultKBlockCap) {
  if (k < 2) throw GraphError("k-blocks need k >= 2");
  if (g.n() > cap) throw GraphError("graph exceeds the k-block enumeration cap of " + std::to_string(cap));
  std::vector<BasicVertexSet<W>> cand;
  detail::maximal_k_connected(g, g.vertices(), k, cand);
  std::sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) { return lex_less(a, b); });
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<BasicVertexSet<W>> out;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < cand.size() && !dominated; ++j)
      dominated = i != j && cand[i].is_subset_of(cand[j]);
    if (dominated) continue;
    if (mode == KBlockMode::Ultrablock && is_k_connected_within(g, cand[i], k + 1)) continue;
    out.push_back(cand[i]);
  }
  return out;
}

/// Every open neighborhood induces a connected subgraph. An isolated vertex fails
/// unless it is the whole graph.
template <std::size_t W>
bool is_locally_connected(const BasicGraph<W>& g) {
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 0) {
      if (g.n() > 1) return false;
      continue;
    }
    if (!is_connected_within(g, g.neighbors(v))) return false;
  }
  return true;
}

template <std::size_t W>
std::optional<Vertex> dominating_vertex(const BasicGraph<W>& g) {
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) == g.n() - 1) return v;
  return std::nullopt;
}

template <std::size_t W>
bool has_leaf(const BasicGraph<W>& g) {
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) == 1) return true;
  return false;
}

enum class CycleMode { Exact, AtLeast };

/// First induced (chordless) cycle of the requested length, as a vertex sequence starting
/// at its smallest vertex. Depth-first over chordless paths in increasing start order.
template <std::size_t W>
std::optional<std::vector<Vertex>> find_induced_cycle(const BasicGraph<W>& g, int length,
                                                      CycleMode mode = CycleMode::Exact) {
  if (length < 3) throw GraphError("induced cycle length must be at least 3");
  std::vector<Vertex> path;
  std::optional<std::vector<Vertex>> found;

  // `inner` holds path vertices other than the start and the current end.
  std::function<void(BasicVertexSet<W>, BasicVertexSet<W>)> extend = [&](BasicVertexSet<W> on_path,
                                                                        BasicVertexSet<W> inner) {
    if (found) return;
    const Vertex start = path.front();
    const Vertex end = path.back();
    const int len = static_cast<int>(path.size());
    for (Vertex v : g.neighbors(end)) {
      if (v <= start || on_path.contains(v)) continue;
      if (g.neighbors(v).intersects(inner)) continue;
      if (len >= 2 && g.adjacent(v, start)) {
        const int cyc = len + 1;
        if (cyc == length || (mode == CycleMode::AtLeast && cyc > length)) {
          path.push_back(v);
          found = path;
          path.pop_back();
          return;
        }
        continue;
      }
      if (mode == CycleMode::Exact && len + 1 >= length) continue;
      auto next_inner = inner;
      if (len >= 2) next_inner.insert(end);
      path.push_back(v);
      auto next_on = on_path;
      next_on.insert(v);
      extend(next_on, next_inner);
      path.pop_back();
      if (found) return;
    }
  };

  for (Vertex s = 0; s < g.n() && !found; ++s) {
    path.assign(1, s);
    BasicVertexSet<W> on;
    on.insert(s);
    extend(on, {});
  }
  return found;
}

inline constexpr int kDefaultDetourCap = 24;
/// The subset DP stores 2^n words; beyond this the table no longer fits comfortably.
inline constexpr int kMaxDetourCap = 26;

struct DistanceProfile {
  std::vector<int> eccentricity;
  int diameter = 0;
  int radius = 0;
  /// Length (edges) of a longest path; empty when the detour cap was exceeded.
  std::optional<int> detour_diameter;
  std::vector<Vertex> detour_witness;
};

namespace detail {

/// Bounded DFS looking for a Hamiltonian path; cheap shortcut before the subset DP.
template <std::size_t W>
std::optional<std::vector<Vertex>> quick_hamiltonian_path(const BasicGraph<W>& g, long budget) {
  std::vector<Vertex> path;
  std::function<bool(Vertex, BasicVertexSet<W>)> go = [&](Vertex v, BasicVertexSet<W> used) {
    if (--budget < 0) return false;
    path.push_back(v);
    if (static_cast<int>(path.size()) == g.n()) return true;
    for (Vertex u : g.neighbors(v) - used) {
      auto next = used;
      next.insert(u);
      if (go(u, next)) return true;
    }
    path.pop_back();
    return false;
  };
  for (Vertex s = 0; s < g.n() && budget > 0; ++s) {
    BasicVertexSet<W> used;
    used.insert(s);
    path.clear();
    if (go(s, used)) return path;
  }
  return std::nullopt;
}

/// Exact longest path by DP over (vertex subset, endpoint). Returns the vertex sequence.
template <std::size_t W>
std::vector<Vertex> longest_path_dp(const BasicGraph<W>& g) {
  const int n = g.n();
  if (n == 0) return {};
  const std::size_t full = std::size_t{1} << n;
  std::vector<std::uint32_t> ends(full, 0);
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v)) nbr[v] |= std::uint32_t{1} << u;

  std::size_t best_mask = 1;
  int best_size = 1;
  for (Vertex v = 0; v < n; ++v) ends[std::size_t{1} << v] = std::uint32_t{1} << v;
  for (std::size_t mask = 1; mask < full; ++mask) {
    std::uint32_t e = ends[mask];
    if (!e) continue;
    const int size = std::popcount(mask);
    if (size > best_size) {
      best_size = size;
      best_mask = mask;
    }
    while (e) {
      const int v = std::countr_zero(e);
      e &= e - 1;
      std::uint32_t ext = nbr[v] & ~static_cast<std::uint32_t>(mask);
      while (ext) {
        const int u = std::countr_zero(ext);
        ext &= ext - 1;
        ends[mask | (std::size_t{1} << u)] |= std::uint32_t{1} << u;
      }
    }
  }
  // Walk back from any endpoint of the best subset.
  std::vector<Vertex> path;
  std::size_t mask = best_mask;
  int v = std::countr_zero(ends[mask]);
  while (true) {
    path.push_back(v);
    const std::size_t prev = mask & ~(std::size_t{1} << v);
    if (!prev) break;
    const std::uint32_t cand = ends[prev] & nbr[v];
    v = std::countr_zero(cand);
    mask = prev;
  }
  return path;
}

}  // namespace detail

/// Eccentricities, diameter, radius and (within `detour_cap`) the detour diameter with a
/// witness path. Throws on disconnected input.
template <std::size_t W>
DistanceProfile distance_profile(const BasicGraph<W>& g, int detour_cap = kDefaultDetourCap) {
  if (g.n() == 0) throw GraphError("distance profile of the empty graph");
  if (!is_connected(g)) throw GraphError("distance profile requires a connected graph");
  DistanceProfile p;
  p.eccentricity.resize(static_cast<std::size_t>(g.n()));
  p.radius = g.n();
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto d = bfs_distances(g, v);
    p.eccentricity[v] = *std::max_element(d.begin(), d.end());
    p.diameter = std::max(p.diameter, p.eccentricity[v]);
    p.radius = std::min(p.radius, p.eccentricity[v]);
  }
  if (g.n() > std::min(detour_cap, kMaxDetourCap)) return p;
  if (auto ham = detail::quick_hamiltonian_path(g, 20000)) {
    p.detour_witness = *ham;
  } else {
    p.detour_witness = detail::longest_path_dp(g);
  }
  p.detour_diameter = static_cast<int>(p.detour_witness.size()) - 1;
  return p;
}

/// Connected graphs of order at least 3 with at most two blocks.
template <std::size_t W>
bool in_class_g(const BasicGraph<W>& g) {
  return g.n() >= 3 && is_connected(g) && block_count(g) <= 2;
}

}  // namespace bootperc
