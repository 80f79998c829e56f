#include <random>

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace bootperc;
using namespace testutil;

// Reference strings produced by an independent graph6 implementation.
TEST(Graph6, ReferenceEncodings) {
  EXPECT_EQ(encode_graph6(complete_graph(2)), "A_");
  EXPECT_EQ(encode_graph6(Graph(2, {VertexSet{}, VertexSet{}})), "A?");
  EXPECT_EQ(encode_graph6(complete_graph(5)), "D~{");
  EXPECT_EQ(encode_graph6(cycle_graph(5)), "Dhc");
  EXPECT_EQ(encode_graph6(path_graph(4)), "Ch");
  EXPECT_EQ(encode_graph6(Graph(0, {})), "?");
  const auto petersen = parse_graph6("IheA@GUAo");
  EXPECT_EQ(petersen.n(), 10);
  EXPECT_EQ(petersen.edge_count(), 15);
  for (int v = 0; v < 10; ++v) EXPECT_EQ(petersen.degree(v), 3);
}

TEST(Graph6, LongFormPrefix) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i + 1 < 70; ++i) e.emplace_back(i, i + 1);
  const auto p70 = BasicGraph<2>::from_edges(70, e);
  const auto s = encode_graph6(p70);
  EXPECT_EQ(s.substr(0, 4), "~?@E");
  EXPECT_EQ(s.size(), 4u + (70 * 69 / 2 + 5) / 6);
  EXPECT_EQ(parse_graph6<2>(s, 128), p70);
  EXPECT_THROW(parse_graph6(s), ParseError);  // over the one-word limit
}

TEST(Graph6, HeaderAndLineEnd) {
  EXPECT_EQ(parse_graph6(">>graph6<<A_\n"), complete_graph(2));
  EXPECT_EQ(parse_graph6("A_\r\n"), complete_graph(2));
}

TEST(Graph6, ErrorsCarryOffsets) {
  auto offset_of = [](const std::string& s) {
    try {
      parse_graph6(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1L;
  };
  EXPECT_EQ(offset_of(""), 0);
  EXPECT_EQ(offset_of("D~"), 2);      // truncated
  EXPECT_EQ(offset_of("A_?"), 2);     // trailing byte
  EXPECT_EQ(offset_of("A`"), 1);      // padding bit set
  EXPECT_EQ(offset_of("D~ "), 2);     // out-of-range byte
  EXPECT_EQ(offset_of("~??A"), 0);    // non-canonical long prefix for n = 1
  EXPECT_EQ(offset_of("Dh\x7f"), 2);
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937 rng(5);
  for (int n = 0; n <= 64; ++n) {
    const auto g = random_graph(n, 0.3, rng);
    const auto s = encode_graph6(g);
    EXPECT_EQ(parse_graph6(s), g);
    EXPECT_EQ(encode_graph6(parse_graph6(s)), s);
  }
}

TEST(Graph6, RoundTripCorpus) {
  std::ifstream in(data_path("connected_le7.g6"));
  const auto lines = read_corpus(in);
  ASSERT_EQ(lines.size(), 996u);
  for (const auto& l : lines) EXPECT_EQ(encode_graph6(parse_graph6(l.text)), l.text);
}

TEST(EdgeList, ParseAndErrors) {
  const auto g = parse_edge_list("4\n0 1\n1 2\n2 3\n");
  EXPECT_EQ(g, path_graph(4));
  EXPECT_EQ(parse_edge_list(encode_edge_list(cycle_graph(6))), cycle_graph(6));
  auto offset_of = [](const std::string& s) {
    try {
      parse_edge_list(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1L;
  };
  EXPECT_EQ(offset_of("3\n0 x\n"), 4);
  EXPECT_EQ(offset_of("3\n0 3\n"), 4);
  EXPECT_EQ(offset_of("3\n1 1\n"), 2);
  EXPECT_EQ(offset_of("3\n0 1 2\n"), 6);
  EXPECT_EQ(offset_of("99\n"), 0);
  EXPECT_EQ(offset_of(""), 0);
}
