#include <algorithm>
#include <bitset>
#include <random>

#include <gtest/gtest.h>

#include "bootperc/vertex_set.hpp"

using bootperc::BasicVertexSet;
using bootperc::VertexSet;

TEST(VertexSet, BasicMembership) {
  VertexSet s{0, 3, 5};
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(4));
  EXPECT_EQ(s.first(), 0);
  EXPECT_EQ(s.last(), 5);
  EXPECT_EQ(bootperc::to_string(s), "0,3,5");
  s.erase(0);
  EXPECT_EQ(s.first(), 3);
  EXPECT_EQ(s.to_vector(), (std::vector<int>{3, 5}));
}

TEST(VertexSet, FullAndOps) {
  const auto f = VertexSet::full(64);
  EXPECT_EQ(f.size(), 64);
  EXPECT_EQ(VertexSet::full(0).size(), 0);
  const VertexSet a{1, 2, 3}, b{3, 4};
  EXPECT_EQ(a | b, (VertexSet{1, 2, 3, 4}));
  EXPECT_EQ(a & b, (VertexSet{3}));
  EXPECT_EQ(a - b, (VertexSet{1, 2}));
  EXPECT_TRUE((VertexSet{1, 2}).is_subset_of(a));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_FALSE((VertexSet{1}).intersects(b));
}

// Oracle: std::bitset over the same random vertex lists.
TEST(VertexSet, MatchesBitsetOracleTwoWords) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, 127);
  for (int trial = 0; trial < 200; ++trial) {
    BasicVertexSet<2> a, b;
    std::bitset<128> oa, ob;
    for (int i = 0; i < 20; ++i) {
      int u = pick(rng), v = pick(rng);
      a.insert(u), oa.set(u);
      b.insert(v), ob.set(v);
    }
    EXPECT_EQ(a.size(), static_cast<int>(oa.count()));
    EXPECT_EQ((a | b).size(), static_cast<int>((oa | ob).count()));
    EXPECT_EQ((a & b).size(), static_cast<int>((oa & ob).count()));
    EXPECT_EQ((a - b).size(), static_cast<int>((oa & ~ob).count()));
    std::vector<int> got(a.begin(), a.end()), want;
    for (int v = 0; v < 128; ++v)
      if (oa.test(v)) want.push_back(v);
    EXPECT_EQ(got, want);
    EXPECT_EQ(lex_less(a, b), std::lexicographical_compare(got.begin(), got.end(), b.begin(), b.end()));
  }
}
