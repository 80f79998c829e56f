#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace bootperc;
using namespace testutil;

namespace {

int rounds(const Family& f) {
  const auto t = percolate(f.graph, f.seed, f.claim("threshold"));
  EXPECT_TRUE(t.percolates) << f.family;
  return t.k;
}

}  // namespace

TEST(Constructions, PnrClaims) {
  for (int n = 2; n <= 9; ++n) {
    for (int r = 1; r <= 4; ++r) {
      const auto f = gen_pnr(n, r);
      EXPECT_EQ(f.graph.n(), f.claim("vertices"));
      EXPECT_EQ(distance_profile(f.graph).diameter, f.claim("diameter"));
      EXPECT_EQ(rounds(f), f.claim("rounds")) << "n=" << n << " r=" << r;
      EXPECT_EQ(f.seed.size(), r);
      for (const auto& b : f.groups)
        for (Vertex u : b) EXPECT_FALSE(f.graph.neighbors(u).intersects(b));
    }
  }
  EXPECT_THROW(gen_pnr(1, 2), GraphError);
  EXPECT_THROW(gen_pnr(40, 2), GraphError);  // 80 vertices
}

TEST(Constructions, PnrSharpnessMatchesLowerBound) {
  for (int n : {5, 6}) {
    const auto f = gen_pnr(n, 2);
    const int d = distance_profile(f.graph).diameter;
    EXPECT_EQ(rounds(f), (d + 1) / 2 + 1);
  }
}

TEST(Constructions, StarClaims) {
  for (int r = 1; r <= 6; ++r) {
    const auto f = gen_star(r);
    EXPECT_EQ(f.graph.n(), r + 1);
    EXPECT_EQ(block_count(f.graph), f.claim("blocks"));
    EXPECT_EQ(rounds(f), 2);
    EXPECT_EQ(is_r_bg(f.graph, r).has_value(), r >= 1);
  }
}

TEST(Constructions, CutComponentsClaims) {
  for (int r = 2; r <= 4; ++r) {
    for (int size = 1; size <= 4; ++size) {
      const auto f = gen_cut_components(r, std::vector<int>(r, size));
      EXPECT_TRUE(percolation_result(f.graph, f.seed, r).percolates);
      EXPECT_EQ(f.seed.size(), r);
      const auto& x = f.groups.back();
      EXPECT_EQ(x.size(), f.claim("cut_size"));
      EXPECT_EQ(static_cast<int>(components_within(f.graph, f.graph.vertices() - x).size()),
                f.claim("components_after_cut"));
      for (Vertex v : x) EXPECT_FALSE(separates(f.graph, f.graph.vertices(), x - VertexSet{v}));
    }
  }
  EXPECT_THROW(gen_cut_components(3, {1, 2}), GraphError);
  EXPECT_THROW(gen_cut_components(2, {0, 2}), GraphError);
}

TEST(Constructions, RBlockLowerBoundClaims) {
  for (int r = 3; r <= 4; ++r) {
    const auto f = gen_rblock_lb(r);
    EXPECT_EQ(f.graph.n(), f.claim("vertices"));
    EXPECT_TRUE(percolation_result(f.graph, f.seed, r).percolates);
    EXPECT_EQ(f.seed.size(), r);
    const auto blocks = k_blocks(f.graph, r);
    EXPECT_EQ(static_cast<int>(blocks.size()), f.claim("r_blocks"));
    for (const auto& b : blocks) {
      EXPECT_EQ(b.size(), r + 1);
      EXPECT_TRUE(f.graph.induced(b).is_complete());
    }
  }
  EXPECT_THROW(gen_rblock_lb(2), GraphError);
}

TEST(Constructions, SlowDiameterTwoClaims) {
  for (int a = 2; a <= 4; ++a) {
    for (int s = 1; s <= 8; ++s) {
      const auto f = gen_slow_diam2(a, s);
      EXPECT_EQ(distance_profile(f.graph).diameter, f.claim("diameter")) << a << "," << s;
      EXPECT_EQ(rounds(f), f.claim("rounds")) << a << "," << s;
    }
  }
}

TEST(Constructions, SlowGeneralClaims) {
  for (int d = 3; d <= 6; ++d) {
    for (int r = 2; r <= 4; ++r) {
      for (int s = 1; s <= 5; ++s) {
        const auto f = gen_slow_general(d, r, s);
        EXPECT_EQ(distance_profile(f.graph, 0).diameter, f.claim("diameter")) << d << "," << r << "," << s;
        EXPECT_EQ(rounds(f), f.claim("rounds")) << d << "," << r << "," << s;
      }
    }
  }
  EXPECT_THROW(gen_slow_general(2, 2, 1), GraphError);
}

TEST(Constructions, CaterpillarClaims) {
  for (int r = 1; r <= 4; ++r) {
    for (int detour = 3; detour <= 9; ++detour) {
      const auto f = gen_caterpillar(r, detour);
      if (f.graph.n() > kMaxDetourCap) continue;
      const auto p = distance_profile(f.graph, kMaxDetourCap);
      ASSERT_TRUE(p.detour_diameter);
      EXPECT_EQ(*p.detour_diameter, f.claim("detour_diameter")) << r << "," << detour;
      EXPECT_EQ(rounds(f), f.claim("rounds")) << r << "," << detour;
      EXPECT_EQ(block_count(f.graph), f.graph.n() - 1);  // a tree
    }
  }
}

TEST(Constructions, ClaimLookupThrows) {
  EXPECT_THROW(gen_star(2).claim("nope"), GraphError);
}
