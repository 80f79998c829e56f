// Builds the slow-percolation constructions and prints their round counts next to
// the distance invariants that bound them.

#include <cstdio>

#include "bootperc/bootperc.hpp"

int main() {
  using namespace bootperc;
  const Family families[] = {
      gen_slow_diam2(2, 5),
      gen_slow_general(4, 3, 5),
      gen_caterpillar(3, 7),
      gen_pnr(5, 2),
      gen_pnr(6, 2),
  };
  std::printf("%-14s %4s %4s %4s %6s %6s\n", "family", "n", "r", "k", "diam", "diamD");
  for (const auto& f : families) {
    const int r = f.claim("threshold");
    const auto t = percolate(f.graph, f.seed, r);
    const auto p = distance_profile(f.graph);
    std::printf("%-14s %4d %4d %4d %6d %6d  %s\n", f.family.c_str(), f.graph.n(), r, t.k, p.diameter,
                p.detour_diameter.value_or(-1), encode_graph6(f.graph).c_str());
  }
}
