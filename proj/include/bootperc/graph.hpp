#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bootperc/vertex_set.hpp"

namespace bootperc {

/// Raised for malformed input or violated preconditions.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the text codecs; carries the byte offset of the first bad byte.
class ParseError : public GraphError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : GraphError(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Rows are neighbor bitsets; the constructor validates symmetry,
/// irreflexivity and range, so every instance satisfies those invariants.
template <std::size_t Words>
class BasicGraph {
 public:
  using Set = BasicVertexSet<Words>;
  static constexpr int kMaxVertices = Set::kCapacity;

  BasicGraph() = default;

  BasicGraph(int n, std::vector<Set> adj) : n_(n), adj_(std::move(adj)) {
    if (n < 0 || n > kMaxVertices) throw GraphError("vertex count out of range: " + std::to_string(n));
    if (static_cast<int>(adj_.size()) != n) throw GraphError("adjacency row count does not match n");
    const Set all = Set::full(n);
    for (int v = 0; v < n; ++v) {
      if (!adj_[v].is_subset_of(all)) throw GraphError("neighbor index out of range");
      if (adj_[v].contains(v)) throw GraphError("self-loop at vertex " + std::to_string(v));
      for (Vertex u : adj_[v])
        if (!adj_[u].contains(v)) throw GraphError("adjacency is not symmetric");
    }
  }

  /// Builds from an edge list; duplicate edges collapse, loops are rejected.
  static BasicGraph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (n < 0 || n > kMaxVertices) throw GraphError("vertex count out of range: " + std::to_string(n));
    std::vector<Set> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw GraphError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
      if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
      adj[u].insert(v);
      adj[v].insert(u);
    }
    return BasicGraph(n, std::move(adj));
  }

  int n() const { return n_; }
  const Set& neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  int degree(Vertex v) const { return adj_[v].size(); }
  Set vertices() const { return Set::full(n_); }

  int edge_count() const {
    int twice = 0;
    for (const auto& row : adj_) twice += row.size();
    return twice / 2;
  }

  /// Edges (u, v) with u < v, ordered by u then v.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : adj_[u])
        if (v > u) out.emplace_back(u, v);
    return out;
  }

  bool is_complete() const { return edge_count() * 2 == n_ * (n_ - 1); }

  /// Subgraph induced on `keep`, relabeled in increasing vertex order.
  BasicGraph induced(const Set& keep) const {
    std::vector<int> index(static_cast<std::size_t>(n_), -1);
    int k = 0;
    for (Vertex v : keep) index[v] = k++;
    std::vector<Set> adj(static_cast<std::size_t>(k));
    for (Vertex v : keep)
      for (Vertex u : adj_[v] & keep) adj[index[v]].insert(index[u]);
    return BasicGraph(k, std::move(adj));
  }

  friend bool operator==(const BasicGraph&, const BasicGraph&) = default;

 private:
  int n_ = 0;
  std::vector<Set> adj_;
};

using Graph = BasicGraph<1>;

struct GraphStats {
  int n = 0;
  int m = 0;
  int min_degree = 0;
  int max_degree = 0;
  /// Minimum degree sum over non-adjacent pairs; empty for complete graphs.
  std::optional<int> sigma2;
};

template <std::size_t W>
GraphStats degree_stats(const BasicGraph<W>& g) {
  GraphStats s;
  s.n = g.n();
  s.m = g.edge_count();
  if (g.n() == 0) return s;
  s.min_degree = g.n();
  for (Vertex v = 0; v < g.n(); ++v) {
    s.min_degree = std::min(s.min_degree, g.degree(v));
    s.max_degree = std::max(s.max_degree, g.degree(v));
  }
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) {
        const int sum = g.degree(u) + g.degree(v);
        if (!s.sigma2 || sum < *s.sigma2) s.sigma2 = sum;
      }
  return s;
}

/// Vertices reachable from `start` without leaving `within`.
template <std::size_t W>
BasicVertexSet<W> reach(const BasicGraph<W>& g, Vertex start, const BasicVertexSet<W>& within) {
  BasicVertexSet<W> seen;
  seen.insert(start);
  BasicVertexSet<W> frontier = seen;
  while (!frontier.empty()) {
    BasicVertexSet<W> next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next &= within;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// Connected components of the subgraph induced on `within`, ordered by minimum member.
template <std::size_t W>
std::vector<BasicVertexSet<W>> components_within(const BasicGraph<W>& g, BasicVertexSet<W> within) {
  std::vector<BasicVertexSet<W>> out;
  while (!within.empty()) {
    auto c = reach(g, within.first(), within);
    within -= c;
    out.push_back(c);
  }
  return out;
}

template <std::size_t W>
std::vector<BasicVertexSet<W>> components(const BasicGraph<W>& g) {
  return components_within(g, g.vertices());
}

/// True when the subgraph induced on `within` is connected (vacuously for the empty set).
template <std::size_t W>
bool is_connected_within(const BasicGraph<W>& g, const BasicVertexSet<W>& within) {
  if (within.empty()) return true;
  return reach(g, within.first(), within) == within;
}

template <std::size_t W>
bool is_connected(const BasicGraph<W>& g) {
  return is_connected_within(g, g.vertices());
}

/// Unweighted distances from `source`; -1 marks unreachable vertices.
template <std::size_t W>
std::vector<int> bfs_distances(const BasicGraph<W>& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
  BasicVertexSet<W> seen, frontier;
  seen.insert(source);
  frontier.insert(source);
  for (int d = 0; !frontier.empty(); ++d) {
    BasicVertexSet<W> next;
    for (Vertex v : frontier) {
      dist[v] = d;
      next |= g.neighbors(v);
    }
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return dist;
}

/// Distance from every vertex to the nearest member of `sources`.
template <std::size_t W>
std::vector<int> bfs_distances(const BasicGraph<W>& g, const BasicVertexSet<W>& sources) {
  std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
  BasicVertexSet<W> seen = sources, frontier = sources;
  for (int d = 0; !frontier.empty(); ++d) {
    BasicVertexSet<W> next;
    for (Vertex v : frontier) {
      dist[v] = d;
      next |= g.neighbors(v);
    }
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return dist;
}

}  // namespace bootperc
