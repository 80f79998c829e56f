#pragma once

// Counterexample miner for the detour-diameter round bound: for r >= 2, a seed that
// percolates in k rounds is conjectured to satisfy k <= diam_D(G).

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bootperc/corpus.hpp"
#include "bootperc/graph6.hpp"
#include "bootperc/percolation.hpp"
#include "bootperc/structure.hpp"
#include "bootperc/subsets.hpp"

namespace bootperc {

struct MinerViolation {
  std::string graph6;
  VertexSet seed;
  int r = 0;
  int k = 0;
  int bound = 0;  // diam_D
};

struct MinerReport {
  int r = 2;
  int seed_cap = 0;
  std::size_t corpus_size = 0;
  std::size_t skipped_lines = 0;
  /// Graphs skipped because they are disconnected or beyond the detour cap.
  std::size_t skipped_graphs = 0;
  unsigned long long seeds_checked = 0;
  /// Percolating seeds with k >= 2 (seeds equal to V(G) are not counted).
  unsigned long long percolating = 0;
  /// Percolating seeds with k == diam_D.
  unsigned long long tight = 0;
  /// Percolating seeds where some seed vertex has no neighbor infected in round 2, and
  /// the smallest k - (ceil(d/2) + 1) seen among them. Recorded only, never judged.
  unsigned long long without_round2_contact = 0;
  std::optional<int> without_round2_min_slack;
  std::vector<MinerViolation> violations;
  double elapsed_ms = 0;

  void merge(const MinerReport& o) {
    corpus_size += o.corpus_size;
    skipped_lines += o.skipped_lines;
    skipped_graphs += o.skipped_graphs;
    seeds_checked += o.seeds_checked;
    percolating += o.percolating;
    tight += o.tight;
    without_round2_contact += o.without_round2_contact;
    if (o.without_round2_min_slack &&
        (!without_round2_min_slack || *o.without_round2_min_slack < *without_round2_min_slack))
      without_round2_min_slack = o.without_round2_min_slack;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
  }
};

/// True when every seed vertex has a neighbor first infected in round 2.
template <std::size_t W>
bool seed_touches_round2(const BasicGraph<W>& g, const BasicInfectionTrace<W>& t) {
  const auto second = t.round_set(2);
  for (Vertex v : t.seed)
    if (!g.neighbors(v).intersects(second)) return false;
  return true;
}

/// Mines one graph. Seeds of size 1..seed_cap are tried; only seeds that actually
/// infect something (k >= 2) are held to the bound.
inline MinerReport mine_graph(const Graph& g, int r, int seed_cap, int detour_cap = kDefaultDetourCap) {
  if (r < 2) throw GraphError("the round-bound conjecture is stated for r >= 2");
  MinerReport rep;
  rep.r = r;
  rep.seed_cap = seed_cap;
  rep.corpus_size = 1;
  if (g.n() == 0 || !is_connected(g)) {
    rep.skipped_graphs = 1;
    return rep;
  }
  const auto prof = distance_profile(g, detour_cap);
  if (!prof.detour_diameter) {
    rep.skipped_graphs = 1;
    return rep;
  }
  const int bound = *prof.detour_diameter;
  const std::string g6 = encode_graph6(g);
  for_each_subset(g.vertices(), 1, std::min(seed_cap, g.n()), [&](const VertexSet& seed) {
    ++rep.seeds_checked;
    const auto res = percolation_result(g, seed, r);
    if (!res.percolates || res.k < 2) return true;
    ++rep.percolating;
    if (res.k == bound) ++rep.tight;
    if (res.k > bound) rep.violations.push_back({g6, seed, r, res.k, bound});
    const auto trace = percolate(g, seed, r);
    if (!seed_touches_round2(g, trace)) {
      ++rep.without_round2_contact;
      const int slack = res.k - ((prof.diameter + 1) / 2 + 1);
      if (!rep.without_round2_min_slack || slack < *rep.without_round2_min_slack) rep.without_round2_min_slack = slack;
    }
    return true;
  });
  return rep;
}

/// Mines a corpus of graph6 lines. Unparseable lines are counted and skipped; the report
/// is identical for any worker count.
inline MinerReport mine_conjecture(const std::vector<CorpusLine>& corpus, int r, int seed_cap, int workers = 1,
                                   int detour_cap = kDefaultDetourCap) {
  const auto t0 = std::chrono::steady_clock::now();
  auto parts = parallel_map<MinerReport>(corpus.size(), workers, [&](std::size_t i) {
    MinerReport part;
    part.r = r;
    try {
      part = mine_graph(parse_graph6(corpus[i].text), r, seed_cap, detour_cap);
    } catch (const ParseError&) {
      part.corpus_size = 1;
      part.skipped_lines = 1;
    }
    return part;
  });
  MinerReport total;
  total.r = r;
  total.seed_cap = seed_cap;
  for (const auto& p : parts) total.merge(p);
  total.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return total;
}

/// Same, over already-built graphs.
inline MinerReport mine_conjecture(const std::vector<Graph>& corpus, int r, int seed_cap, int workers = 1,
                                   int detour_cap = kDefaultDetourCap) {
  const auto t0 = std::chrono::steady_clock::now();
  auto parts = parallel_map<MinerReport>(corpus.size(), workers,
                                         [&](std::size_t i) { return mine_graph(corpus[i], r, seed_cap, detour_cap); });
  MinerReport total;
  total.r = r;
  total.seed_cap = seed_cap;
  for (const auto& p : parts) total.merge(p);
  total.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return total;
}

/// Re-parses and re-percolates a violation record; true when it is genuine.
inline bool replay(const MinerViolation& v) {
  const Graph g = parse_graph6(v.graph6);
  const auto prof = distance_profile(g);
  const auto res = percolation_result(g, v.seed, v.r);
  return res.percolates && prof.detour_diameter && res.k == v.k && *prof.detour_diameter == v.bound && v.k > v.bound;
}

}  // namespace bootperc
