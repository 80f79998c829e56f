#include <gtest/gtest.h>

#include "bootperc/records.hpp"
#include "test_util.hpp"

using namespace bootperc;
using namespace testutil;

TEST(Records, TraceFieldOrderAndRoundTrip) {
  const auto t = percolate(path_graph(3), VertexSet{0}, 1);
  const auto j = records::trace(t);
  EXPECT_EQ(j.dump(), R"({"r":1,"seed":[0],"roundOf":[1,2,3],"k":3,"percolates":true})");
  EXPECT_EQ(records::parse_trace(j), t);
  const auto partial = percolate(path_graph(3), VertexSet{0}, 2);
  EXPECT_EQ(records::trace(partial).dump(), R"({"r":2,"seed":[0],"roundOf":[1,null,null],"k":1,"percolates":false})");
  EXPECT_THROW(records::parse_trace(records::Json::parse(R"({"r":1})")), GraphError);
}

TEST(Records, StatsAndMinSet) {
  EXPECT_EQ(records::stats(degree_stats(complete_graph(3))).dump(),
            R"({"n":3,"m":3,"minDeg":2,"maxDeg":2,"sigma2":null})");
  const auto m = records::min_set(min_percolating_set(cycle_graph(5), 2, 5));
  EXPECT_EQ(m["m"], 3);
  EXPECT_EQ(m["witness"].size(), 3u);
}

TEST(Records, StructureReport) {
  const auto j = records::structure(path_graph(4), 2);
  EXPECT_EQ(j["blocks"].dump(), "[[0,1],[1,2],[2,3]]");
  EXPECT_EQ(j["cutVertices"].dump(), "[1,2]");
  EXPECT_EQ(j["diameter"], 3);
  EXPECT_EQ(j["detourDiameter"], 3);
  EXPECT_EQ(j["kBlocks"].dump(), "[]");
}

TEST(Records, FamilyMetadata) {
  const auto f = gen_star(3);
  const auto j = records::family(f, encode_graph6(f.graph));
  EXPECT_EQ(j["family"], "star");
  EXPECT_EQ(j["graph6"], "Cs");
  EXPECT_EQ(j["seed"].dump(), "[1,2,3]");
  EXPECT_EQ(j["claims"]["blocks"], 3);
}
