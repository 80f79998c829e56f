#include <sstream>

#include <gtest/gtest.h>

#include "bootperc/records.hpp"
#include "test_util.hpp"

using namespace bootperc;
using namespace testutil;

TEST(Predicates, ParseLists) {
  using P = PredicateId;
  EXPECT_EQ(parse_predicates("P1-P3,P12"), (std::vector<P>{P::P1, P::P2, P::P3, P::P12}));
  EXPECT_EQ(parse_predicates("p5,P2,P5"), (std::vector<P>{P::P2, P::P5}));
  EXPECT_EQ(parse_predicates("P1-P11").size(), 11u);
  EXPECT_THROW(parse_predicates("P13"), GraphError);
  EXPECT_THROW(parse_predicates("P4-P2"), GraphError);
  EXPECT_THROW(parse_predicates("Q1"), GraphError);
  EXPECT_THROW(parse_predicates(""), GraphError);
  EXPECT_EQ(predicate_table().size(), 12u);
}

TEST(Verify, ReportOrderAndCounts) {
  SuiteConfig cfg;
  cfg.thresholds = {2, 3};
  cfg.predicates = parse_predicates("P1-P12");
  const auto reps = verify_graph(cycle_graph(5), cfg);
  // P1, P2, P3, P4 exact, P4 at-least, then P5..P12 for each r.
  ASSERT_EQ(reps.size(), 5u + 2 * 8);
  EXPECT_EQ(reps[3].variant, "exact");
  EXPECT_EQ(reps[4].variant, "at-least");
  EXPECT_EQ(reps[5].id, PredicateId::P5);
  EXPECT_EQ(reps[5].r, 2);
  EXPECT_EQ(reps[13].r, 3);
  for (const auto& r : reps) EXPECT_TRUE(r.pass());
  // C5 has diameter 2 and is itself an induced C5, so P4 hypotheses fail.
  EXPECT_EQ(reps[3].hypothesis_met, 0u);
}

TEST(Verify, P2AndP3HypothesesOnWheel) {
  const auto wheel = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}});
  SuiteConfig cfg;
  cfg.thresholds = {2};
  cfg.predicates = parse_predicates("P2,P3");
  const auto reps = verify_graph(wheel, cfg);
  ASSERT_EQ(reps.size(), 2u);
  EXPECT_EQ(reps[0].hypothesis_met, 1u);
  EXPECT_EQ(reps[1].hypothesis_met, 1u);
  EXPECT_EQ(reps[1].triples_checked, 1u + 8u);  // the graph plus every edge
  EXPECT_TRUE(reps[1].violations.empty());
}

TEST(Verify, StarCountsAsRBlockGraph) {
  SuiteConfig cfg;
  cfg.thresholds = {3};
  cfg.predicates = {PredicateId::P7};
  const auto res = run_suite(std::vector<Graph>{gen_star(3).graph, complete_graph(4)}, cfg);
  ASSERT_EQ(res.r_block_graphs.size(), 4u);
  EXPECT_EQ(res.r_block_graphs[3], 1u);
  EXPECT_TRUE(res.pass());
}

TEST(Verify, DisconnectedGraphsAreSkipped) {
  SuiteConfig cfg;
  cfg.predicates = parse_predicates("P4,P9-P11");
  cfg.thresholds = {2};
  const auto reps = verify_graph(Graph::from_edges(4, {{0, 1}, {2, 3}}), cfg);
  for (const auto& r : reps) EXPECT_EQ(r.skipped_graphs, 1u);
}

TEST(Verify, UnreadableLinesAreCounted) {
  std::istringstream in("# comment\nDhc\n\nbogus!\nA_\n");
  SuiteConfig cfg;
  cfg.thresholds = {2};
  const auto res = run_suite(read_corpus(in), cfg);
  EXPECT_EQ(res.corpus_size, 3u);
  EXPECT_EQ(res.unreadable, 1u);
  EXPECT_EQ(res.reports.front().graphs, 2u);
  EXPECT_TRUE(res.pass());
}

TEST(Verify, WorkerCountIndependence) {
  auto corpus = load_corpus("connected_le7.g6");
  corpus.resize(200);
  SuiteConfig cfg;
  cfg.predicates = parse_predicates("P1-P12");
  auto dump = [](const SuiteResult& res) {
    std::string s;
    for (auto rep : res.reports) {
      rep.runtime_ms = 0;
      s += records::report(rep).dump() + "\n";
    }
    return s;
  };
  cfg.workers = 1;
  const auto a = run_suite(corpus, cfg);
  cfg.workers = 4;
  const auto b = run_suite(corpus, cfg);
  EXPECT_EQ(dump(a), dump(b));
  EXPECT_EQ(a.r_block_graphs, b.r_block_graphs);
}

TEST(Verify, ReplayRejectsFabricatedWitness) {
  Witness w;
  w.graph6 = "Dhc";
  w.seed = VertexSet{0, 2, 4};
  w.r = 2;
  w.detail = "k > diam_D+1";
  EXPECT_FALSE(replay(w, PredicateId::P11));
}

// C4 seeded at two opposite vertices percolates in two rounds while rad(C4) + 1 = 3,
// so the radius bound only holds from k = 3 on. The suite must report it, and the
// witness must replay.
TEST(Verify, RadiusBoundCounterexampleIsReportedAndReplays) {
  SuiteConfig cfg;
  cfg.thresholds = {2};
  cfg.predicates = {PredicateId::P10};
  const auto reps = verify_graph(cycle_graph(4), cfg);
  ASSERT_EQ(reps.size(), 1u);
  ASSERT_EQ(reps[0].violations.size(), 2u);
  const auto& w = reps[0].violations[0];
  EXPECT_EQ(w.graph6, "Cl");
  EXPECT_EQ(w.seed, (VertexSet{0, 2}));
  EXPECT_TRUE(replay(w, PredicateId::P10));
  EXPECT_FALSE(replay(w, PredicateId::P9));
}

// Same gap for the diameter bound: two seed vertices at distance 4 with k = 2.
TEST(Verify, DiameterBoundCounterexampleHasTwoRounds) {
  SuiteConfig cfg;
  cfg.thresholds = {2};
  cfg.predicates = {PredicateId::P9};
  const auto g = parse_graph6("Dh_");
  const auto reps = verify_graph(g, cfg);
  ASSERT_FALSE(reps[0].violations.empty());
  for (const auto& w : reps[0].violations) {
    const auto t = percolate(g, w.seed, 2);
    EXPECT_EQ(t.k, 2);
    EXPECT_TRUE(seed_touches_round2(g, t));
    EXPECT_LE(w.seed.size(), 3);
    EXPECT_TRUE(replay(w, PredicateId::P9));
  }
}
