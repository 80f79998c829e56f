#include <random>

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace bootperc;
using namespace testutil;

TEST(Percolation, PathFromEndsAtR2) {
  // P5 seeded at both ends: no interior vertex ever sees two infected neighbors.
  const auto t = percolate(path_graph(5), VertexSet{0, 4}, 2);
  EXPECT_FALSE(t.percolates);
  EXPECT_EQ(t.k, 1);
  EXPECT_EQ(t.closure(), (VertexSet{0, 4}));
}

TEST(Percolation, CycleC5FromThreeVertices) {
  const auto t = percolate(cycle_graph(5), VertexSet{0, 2, 4}, 2);
  EXPECT_TRUE(t.percolates);
  EXPECT_EQ(t.k, 2);
  EXPECT_EQ(t.round_set(2), (VertexSet{1, 3}));
  EXPECT_EQ(rounds_to_percolation(t), 2);
}

TEST(Percolation, R1PathSpreadsOneStepPerRound) {
  const auto t = percolate(path_graph(6), VertexSet{0}, 1);
  EXPECT_TRUE(t.percolates);
  EXPECT_EQ(t.k, 6);
  for (int v = 0; v < 6; ++v) EXPECT_EQ(t.round_of[v], v + 1);
}

TEST(Percolation, WholeVertexSetIsRoundOne) {
  const auto t = percolate(complete_graph(4), VertexSet::full(4), 3);
  EXPECT_TRUE(t.percolates);
  EXPECT_EQ(t.k, 1);
}

TEST(Percolation, RejectsBadArguments) {
  EXPECT_THROW(percolate(path_graph(3), VertexSet{0}, 0), GraphError);
  EXPECT_THROW(percolate(path_graph(3), VertexSet{5}, 1), GraphError);
}

TEST(Percolation, ResultMatchesTrace) {
  const auto g = cycle_graph(7);
  const VertexSet seed{0, 2, 4};
  const auto t = percolate(g, seed, 2);
  const auto r = percolation_result(g, seed, 2);
  EXPECT_EQ(r.closure, t.closure());
  EXPECT_EQ(r.k, t.k);
  EXPECT_EQ(r.percolates, t.percolates);
}

// Property: the closure is a fixed point (no outside vertex has r infected neighbors),
// labels are consistent with the round definition, and the closure is monotone in the seed.
TEST(Percolation, InvariantsOnRandomGraphs) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 4 + trial % 13;
    const int r = 1 + trial % 3;
    const auto g = random_graph(n, 0.35, rng);
    const auto seed = random_subset(n, 0.3, rng);
    const auto t = percolate(g, seed, r);
    const auto cl = t.closure();
    EXPECT_TRUE(seed.is_subset_of(cl));
    for (Vertex v = 0; v < n; ++v) {
      if (!cl.contains(v)) {
        EXPECT_LT((g.neighbors(v) & cl).size(), r);
        continue;
      }
      const int lab = *t.round_of[v];
      EXPECT_LE(lab, t.k);
      if (seed.contains(v)) {
        EXPECT_EQ(lab, 1);
        continue;
      }
      int before = 0, two_before = 0;
      for (Vertex u : g.neighbors(v)) {
        if (t.round_of[u] && *t.round_of[u] <= lab - 1) ++before;
        if (t.round_of[u] && *t.round_of[u] <= lab - 2) ++two_before;
      }
      EXPECT_GE(before, r);
      EXPECT_LT(two_before, r);
    }
    auto bigger = seed;
    bigger.insert(static_cast<Vertex>(trial % n));
    EXPECT_TRUE(cl.is_subset_of(percolation_result(g, bigger, r).closure));
    EXPECT_EQ(t.percolates, cl.size() == n);
  }
}

// Oracle: naive fixed-point recomputation, exhaustive over all seeds of the n <= 5 corpus.
TEST(Percolation, MatchesNaiveExhaustiveSmall) {
  int checked = 0;
  for (const auto& g : load_corpus("connected_le7.g6")) {
    if (g.n() > 5) continue;
    for (int r = 1; r <= 3; ++r) {
      for (std::uint64_t mask = 0; mask < (1ull << g.n()); ++mask) {
        VertexSet s;
        for (int v = 0; v < g.n(); ++v)
          if (mask >> v & 1) s.insert(v);
        ASSERT_EQ(percolate(g, s, r), percolate_naive(g, s, r));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Percolation, MatchesNaiveRandomN16) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> pick_r(1, 4);
  std::uniform_real_distribution<double> dens(0.1, 0.6);
  for (int i = 0; i < 1000; ++i) {
    const auto g = random_graph(16, dens(rng), rng);
    const auto s = random_subset(16, 0.25, rng);
    const int r = pick_r(rng);
    ASSERT_EQ(percolate(g, s, r), percolate_naive(g, s, r));
  }
}

TEST(Percolation, TwoWordGraphs) {
  std::mt19937 rng(8);
  for (int i = 0; i < 50; ++i) {
    const auto g = random_graph<2>(100, 0.05, rng);
    BasicVertexSet<2> s;
    for (int v = 0; v < 100; v += 7) s.insert(v);
    EXPECT_EQ(percolate(g, s, 2), percolate_naive(g, s, 2));
  }
}
