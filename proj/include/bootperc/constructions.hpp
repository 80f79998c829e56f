#pragma once

// Generators for the extremal families. Vertex numbering is fixed per family
// (groups first, then hubs, then tails) so encoded output is byte-stable.
//
// Each generator records the properties it is expected to have in `claims`;
// nothing here checks them. Tests re-derive every claim with the analyzers.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bootperc/graph.hpp"

namespace bootperc {

struct FamilyClaim {
  std::string name;
  int value;
};

struct Family {
  std::string family;
  std::vector<std::pair<std::string, int>> params;
  Graph graph;
  VertexSet seed;
  /// Designated vertex groups (the B_i of P_{n,r}, the H_i of the cut family, ...).
  std::vector<VertexSet> groups;
  std::vector<FamilyClaim> claims;
  std::vector<std::string> notes;

  int claim(const std::string& name) const {
    for (const auto& c : claims)
      if (c.name == name) return c.value;
    throw GraphError("family " + family + " has no claim " + name);
  }
};

namespace detail {

class EdgeSink {
 public:
  explicit EdgeSink(int n) : n_(n) {}
  void add(Vertex u, Vertex v) { edges_.emplace_back(u, v); }
  void join(const VertexSet& a, const VertexSet& b) {
    for (Vertex u : a)
      for (Vertex v : b)
        if (u != v) add(u, v);
  }
  void clique(const VertexSet& a) {
    for (Vertex u : a)
      for (Vertex v : a)
        if (u < v) add(u, v);
  }
  Graph build() const { return Graph::from_edges(n_, edges_); }

 private:
  int n_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

inline VertexSet range_set(int first, int count) {
  VertexSet s;
  for (int i = 0; i < count; ++i) s.insert(first + i);
  return s;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError(what);
}

inline void require_fits(long long n) {
  require(n <= Graph::kMaxVertices, "construction needs " + std::to_string(n) + " vertices, more than fit in a Graph");
}

}  // namespace detail

/// P_{n,r}: a path of n groups of r independent vertices, consecutive groups completely
/// joined. Group B_i is vertices (i-1)r .. ir-1. The seed is the central group
/// B_{ceil(n/2)}, which percolates in ceil((n-1)/2) + 1 rounds.
inline Family gen_pnr(int n, int r) {
  detail::require(n >= 2 && r >= 1, "gen_pnr needs n >= 2 and r >= 1");
  detail::require_fits(static_cast<long long>(n) * r);
  Family f{"pnr", {{"n", n}, {"r", r}}, {}, {}, {}, {}, {}};
  detail::EdgeSink e(n * r);
  for (int i = 0; i < n; ++i) f.groups.push_back(detail::range_set(i * r, r));
  for (int i = 0; i + 1 < n; ++i) e.join(f.groups[i], f.groups[i + 1]);
  f.graph = e.build();
  f.seed = f.groups[(n + 1) / 2 - 1];
  f.claims = {{"vertices", n * r}, {"diameter", n == 2 && r >= 2 ? 2 : n - 1}, {"rounds", n / 2 + 1}, {"threshold", r}};
  return f;
}

/// K_{1,r}: hub 0, leaves 1..r; the leaves are the seed.
inline Family gen_star(int r) {
  detail::require(r >= 1, "gen_star needs r >= 1");
  detail::require_fits(r + 1);
  Family f{"star", {{"r", r}}, {}, {}, {}, {}, {}};
  detail::EdgeSink e(r + 1);
  for (int i = 1; i <= r; ++i) e.add(0, i);
  f.graph = e.build();
  f.seed = detail::range_set(1, r);
  f.groups = {detail::range_set(0, 1), f.seed};
  f.claims = {{"blocks", r}, {"rounds", 2}, {"threshold", r}};
  return f;
}

/// r disjoint cliques H_1..H_r (numbered first, in order) plus an independent set X of
/// r-1 vertices joined to every clique vertex. Seed: the first vertex of each H_i.
/// groups = H_1..H_r followed by X.
inline Family gen_cut_components(int r, const std::vector<int>& component_sizes) {
  detail::require(r >= 2, "gen_cut_components needs r >= 2");
  detail::require(static_cast<int>(component_sizes.size()) == r, "gen_cut_components needs exactly r sizes");
  long long total = r - 1;
  for (int s : component_sizes) {
    detail::require(s >= 1, "component sizes must be positive");
    total += s;
  }
  detail::require_fits(total);
  Family f{"cut-components", {{"r", r}}, {}, {}, {}, {}, {}};
  for (std::size_t i = 0; i < component_sizes.size(); ++i)
    f.params.emplace_back("size" + std::to_string(i + 1), component_sizes[i]);
  const int n = static_cast<int>(total);
  detail::EdgeSink e(n);
  int next = 0;
  for (int s : component_sizes) {
    f.groups.push_back(detail::range_set(next, s));
    f.seed.insert(next);
    next += s;
  }
  const VertexSet x = detail::range_set(next, r - 1);
  for (int i = 0; i < r; ++i) {
    e.clique(f.groups[i]);
    e.join(f.groups[i], x);
  }
  f.groups.push_back(x);
  f.graph = e.build();
  f.claims = {{"components_after_cut", r}, {"cut_size", r - 1}, {"threshold", r}};
  return f;
}

/// r components, each an axis K_{r-1} plus an independent set S of r-1 vertices joined to
/// the whole axis, with S_j also joined to x_j; X = {x_1..x_{r-1}} is independent and joined
/// to every axis vertex. Numbering: component c occupies 2(r-1) consecutive vertices
/// (axis, then S); X comes last. Seed: the first axis vertex of every component.
/// groups = the r axes followed by X.
inline Family gen_rblock_lb(int r) {
  detail::require(r >= 3, "gen_rblock_lb needs r >= 3");
  const long long per = 2LL * (r - 1);
  detail::require_fits(per * r + (r - 1));
  const int n = static_cast<int>(per * r + (r - 1));
  Family f{"rblock-lb", {{"r", r}}, {}, {}, {}, {}, {}};
  detail::EdgeSink e(n);
  const int xbase = static_cast<int>(per * r);
  const VertexSet x = detail::range_set(xbase, r - 1);
  for (int c = 0; c < r; ++c) {
    const int base = static_cast<int>(per * c);
    const VertexSet axis = detail::range_set(base, r - 1);
    const VertexSet s = detail::range_set(base + r - 1, r - 1);
    e.clique(axis);
    e.join(axis, x);
    e.join(axis, s);
    for (int j = 0; j < r - 1; ++j) e.add(base + r - 1 + j, xbase + j);
    f.groups.push_back(axis);
    f.seed.insert(base);
  }
  f.groups.push_back(x);
  f.graph = e.build();
  f.claims = {{"vertices", n}, {"r_blocks", r * (r - 1)}, {"cut_size", r - 1}, {"threshold", r}};
  return f;
}

/// Threshold-2 slow family of diameter 2: independent A_0 (vertices 0..a-1) joined to the
/// hub x_1 (vertex a), tail path y_1..y_s (a+1..a+s) joined to x_1, and y_1 joined to
/// vertex 0 of A_0. A_0 percolates in s + 2 rounds.
inline Family gen_slow_diam2(int a, int s) {
  detail::require(a >= 2 && s >= 1, "gen_slow_diam2 needs a >= 2 and s >= 1");
  detail::require_fits(static_cast<long long>(a) + 1 + s);
  const int n = a + 1 + s;
  const Vertex hub = a;
  Family f{"slow-diam2", {{"a", a}, {"s", s}}, {}, {}, {}, {}, {}};
  detail::EdgeSink e(n);
  for (Vertex v = 0; v < a; ++v) e.add(v, hub);
  for (int i = 0; i < s; ++i) {
    e.add(a + 1 + i, hub);
    if (i + 1 < s) e.add(a + 1 + i, a + 2 + i);
  }
  e.add(a + 1, 0);
  f.graph = e.build();
  f.seed = detail::range_set(0, a);
  f.groups = {f.seed, detail::range_set(hub, 1), detail::range_set(a + 1, s)};
  f.claims = {{"diameter", 2}, {"rounds", s + 2}, {"threshold", 2}};
  return f;
}

/// General slow family: P_{d-1,r} (groups first), hubs x_1..x_{r-1} joined to the last
/// group, tail path y_1..y_s joined to every hub, and y_1 joined to the first vertex of
/// the last group. The leftmost group percolates in d + s rounds.
inline Family gen_slow_general(int d, int r, int s) {
  detail::require(d >= 3 && r >= 2 && s >= 1, "gen_slow_general needs d >= 3, r >= 2, s >= 1");
  const long long groups = d - 1;
  detail::require_fits(groups * r + (r - 1) + s);
  const int n = static_cast<int>(groups * r + (r - 1) + s);
  Family f{"slow-general", {{"d", d}, {"r", r}, {"s", s}}, {}, {}, {}, {}, {}};
  detail::EdgeSink e(n);
  for (int i = 0; i < d - 1; ++i) f.groups.push_back(detail::range_set(i * r, r));
  for (int i = 0; i + 1 < d - 1; ++i) e.join(f.groups[i], f.groups[i + 1]);
  const int hub_base = (d - 1) * r;
  const int tail_base = hub_base + r - 1;
  const VertexSet hubs = detail::range_set(hub_base, r - 1);
  const VertexSet tail = detail::range_set(tail_base, s);
  const VertexSet& last = f.groups.back();
  e.join(last, hubs);
  e.join(tail, hubs);
  for (int i = 0; i + 1 < s; ++i) e.add(tail_base + i, tail_base + i + 1);
  e.add(tail_base, last.first());
  f.groups.push_back(hubs);
  f.groups.push_back(tail);
  f.graph = e.build();
  f.seed = f.groups.front();
  // With a one-vertex tail, y_1 sits next to the last group and the far end is only d - 1 away.
  f.claims = {{"diameter", s >= 2 ? d : d - 1}, {"rounds", d + s}, {"threshold", r}};
  f.notes.push_back("y_1 is joined to one vertex of the last group (the x_1 join is already implied)");
  return f;
}

/// Caterpillar: spine p_0..p_{detour-2} (vertices 0..detour-2), then r leaves on p_0 and
/// r-1 leaves on each other spine vertex, in spine order. All leaves form the seed, which
/// percolates in exactly `detour` rounds.
inline Family gen_caterpillar(int r, int detour) {
  detail::require(r >= 1 && detour >= 3, "gen_caterpillar needs r >= 1 and detour >= 3");
  const int spine = detour - 1;
  const long long n64 = spine + r + static_cast<long long>(spine - 1) * (r - 1);
  detail::require_fits(n64);
  const int n = static_cast<int>(n64);
  Family f{"caterpillar", {{"r", r}, {"detour", detour}}, {}, {}, {}, {}, {}};
  detail::EdgeSink e(n);
  for (int i = 0; i + 1 < spine; ++i) e.add(i, i + 1);
  int next = spine;
  for (int i = 0; i < spine; ++i) {
    const int leaves = i == 0 ? r : r - 1;
    for (int j = 0; j < leaves; ++j) {
      e.add(i, next);
      f.seed.insert(next);
      ++next;
    }
  }
  f.graph = e.build();
  f.groups = {detail::range_set(0, spine), f.seed};
  // For r = 1 the last spine vertex has no leaf, so the longest path is one shorter.
  f.claims = {{"detour_diameter", r >= 2 ? detour : detour - 1}, {"rounds", detour}, {"threshold", r}};
  return f;
}

}  // namespace bootperc
