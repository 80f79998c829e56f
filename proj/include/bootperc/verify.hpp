#pragma once

// Theorem predicates P1..P12 evaluated over graph corpora.
//
// Each predicate is a hypothesis filter plus a claim. For every (graph, seed, r)
// triple in scope the report counts how many triples were examined, how many met
// the hypothesis, and collects a witness for each claim failure. P12 is the open
// round-bound conjecture: its violations are discoveries, not failures.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bootperc/corpus.hpp"
#include "bootperc/graph6.hpp"
#include "bootperc/miner.hpp"
#include "bootperc/percolation.hpp"
#include "bootperc/search.hpp"
#include "bootperc/structure.hpp"
#include "bootperc/subsets.hpp"

namespace bootperc {

enum class PredicateId { P1 = 1, P2, P3, P4, P5, P6, P7, P8, P9, P10, P11, P12 };

inline constexpr int kPredicateCount = 12;

struct PredicateSpec {
  PredicateId id;
  const char* hypothesis;
  const char* claim;
  /// Evaluated at threshold 2 only, independent of the configured r values.
  bool threshold_two_only;
};

inline const std::vector<PredicateSpec>& predicate_table() {
  static const std::vector<PredicateSpec> table = {
      {PredicateId::P1, "G has a percolating pair at r = 2", "G has at most two blocks", true},
      {PredicateId::P2, "G is 2-connected and has a dominating vertex", "G is locally connected", true},
      {PredicateId::P3, "G is in class G (connected, n >= 3, <= 2 blocks) and locally connected",
       "G is 2-BG; if G has no leaf every adjacent pair percolates", true},
      {PredicateId::P4, "G in class G, diameter 2, no induced C5 (exact) / no induced cycle >= 5 (at-least)",
       "G is 2-BG", true},
      {PredicateId::P5, "n >= r+1, |A0| = r percolates, X minimal cut with |X| < r",
       "|C & A0| >= r-|X| for C in K; |K| <= floor(r/(r-|X|)); |K| >= 2 implies r/2 <= |X|", false},
      {PredicateId::P6, "n >= r+1, |A0| = r percolates, X minimal cut with |X| < r",
       "some x in X is adjacent to every vertex of A0", false},
      {PredicateId::P7, "r >= 2, G is r-BG, n >= r+1", "at most r blocks; r blocks with r >= 3 only for K_{1,r}",
       false},
      {PredicateId::P8, "G is r-BG, n >= r+1, X minimal cut with |X| < r",
       "no cut Y with |Y| < r is disjoint from X", false},
      {PredicateId::P9, "connected, A0 percolates in k rounds, |A0| <= 2r-1, every A0 vertex touches round 2",
       "k >= ceil(d/2) + 1", false},
      {PredicateId::P10, "connected, |A0| = r percolates in k >= 2 rounds", "k >= rad + 1", false},
      {PredicateId::P11, "connected, A0 percolates in k rounds", "k <= diam_D + 1", false},
      {PredicateId::P12, "connected, r >= 2, A0 percolates in k >= 2 rounds", "k <= diam_D (open; mined)", false},
  };
  return table;
}

inline std::string predicate_name(PredicateId id) { return "P" + std::to_string(static_cast<int>(id)); }

/// Parses "P1", "P1-P11", "P2,P5,P9-P12".
inline std::vector<PredicateId> parse_predicates(const std::string& text) {
  std::vector<PredicateId> out;
  auto number = [&](std::string tok) {
    if (!tok.empty() && (tok[0] == 'P' || tok[0] == 'p')) tok.erase(0, 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw GraphError("bad predicate id: " + text);
    }
    if (used != tok.size() || v < 1 || v > kPredicateCount) throw GraphError("bad predicate id: " + text);
    return v;
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(start, comma - start);
    const std::size_t dash = item.find('-');
    const int lo = number(item.substr(0, dash));
    const int hi = dash == std::string::npos ? lo : number(item.substr(dash + 1));
    if (hi < lo) throw GraphError("bad predicate range: " + item);
    for (int i = lo; i <= hi; ++i) {
      const auto id = static_cast<PredicateId>(i);
      if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
    }
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Observed {
  std::string name;
  int value;
};

struct Witness {
  std::string graph6;
  VertexSet seed;
  int r = 0;
  std::optional<VertexSet> cut;        // X, when the predicate involves a cut set
  std::optional<VertexSet> other_cut;  // Y for P8
  std::vector<Observed> observed;
  std::string detail;
};

struct VerificationReport {
  PredicateId id = PredicateId::P1;
  /// "exact" or "at-least" for P4, empty otherwise.
  std::string variant;
  std::string corpus;
  int r = 0;
  std::size_t graphs = 0;
  unsigned long long triples_checked = 0;
  unsigned long long hypothesis_met = 0;
  /// Graphs the predicate could not evaluate (disconnected input, analyzer caps).
  std::size_t skipped_graphs = 0;
  std::vector<Witness> violations;
  double runtime_ms = 0;

  bool discovery_only() const { return id == PredicateId::P12; }
  bool pass() const { return discovery_only() || violations.empty(); }

  void merge(const VerificationReport& o) {
    graphs += o.graphs;
    triples_checked += o.triples_checked;
    hypothesis_met += o.hypothesis_met;
    skipped_graphs += o.skipped_graphs;
    runtime_ms += o.runtime_ms;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
  }
};

struct SuiteConfig {
  std::vector<int> thresholds{2, 3};
  std::vector<PredicateId> predicates = parse_predicates("P1-P11");
  /// Largest seed enumerated by P9 (further limited by 2r-1) and P11; 0 means |V(G)|.
  int seed_cap = 0;
  /// Seed cap for the conjecture predicate P12.
  int conjecture_seed_cap = 3;
  int workers = 1;
  int detour_cap = kDefaultDetourCap;
  std::string corpus_name = "corpus";
};

namespace detail {

/// Per-graph facts shared by all predicates.
struct GraphFacts {
  const Graph& g;
  std::string g6;
  bool connected;
  int blocks;
  std::optional<DistanceProfile> profile;

  GraphFacts(const Graph& graph, int detour_cap)
      : g(graph), g6(encode_graph6(graph)), connected(graph.n() > 0 && is_connected(graph)),
        blocks(block_count(graph)) {
    if (connected) profile = distance_profile(graph, detour_cap);
  }
};

inline bool is_star(const Graph& g, int r) {
  if (g.n() != r + 1 || g.edge_count() != r) return false;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) == r) return true;
  return false;
}

inline VerificationReport make_report(PredicateId id, int r, std::string variant = {}) {
  VerificationReport rep;
  rep.id = id;
  rep.r = r;
  rep.variant = std::move(variant);
  rep.graphs = 1;
  return rep;
}

inline Witness witness(const GraphFacts& f, const VertexSet& seed, int r, std::vector<Observed> obs,
                       std::string detail) {
  Witness w;
  w.graph6 = f.g6;
  w.seed = seed;
  w.r = r;
  w.observed = std::move(obs);
  w.detail = std::move(detail);
  return w;
}

inline VerificationReport check_p1(const GraphFacts& f) {
  auto rep = make_report(PredicateId::P1, 2);
  ++rep.triples_checked;
  if (auto pair = is_r_bg(f.g, 2)) {
    ++rep.hypothesis_met;
    if (f.blocks > 2) rep.violations.push_back(witness(f, *pair, 2, {{"blocks", f.blocks}}, "2-BG with > 2 blocks"));
  }
  return rep;
}

inline VerificationReport check_p2(const GraphFacts& f) {
  auto rep = make_report(PredicateId::P2, 2);
  ++rep.triples_checked;
  if (is_k_connected(f.g, 2) && dominating_vertex(f.g)) {
    ++rep.hypothesis_met;
    if (!is_locally_connected(f.g)) {
      rep.violations.push_back(
          witness(f, {}, 2, {{"dominating", *dominating_vertex(f.g)}}, "2-connected, dominating, not locally connected"));
    }
  }
  return rep;
}

inline VerificationReport check_p3(const GraphFacts& f) {
  auto rep = make_report(PredicateId::P3, 2);
  ++rep.triples_checked;
  if (!(in_class_g(f.g) && is_locally_connected(f.g))) return rep;
  ++rep.hypothesis_met;
  if (!is_r_bg(f.g, 2)) {
    rep.violations.push_back(witness(f, {}, 2, {}, "locally connected member of class G is not 2-BG"));
    return rep;
  }
  if (has_leaf(f.g)) return rep;
  for (auto [u, v] : f.g.edges()) {
    ++rep.triples_checked;
    const VertexSet pair{u, v};
    if (!percolation_result(f.g, pair, 2).percolates)
      rep.violations.push_back(witness(f, pair, 2, {}, "leafless locally connected graph, adjacent pair fails"));
  }
  return rep;
}

inline VerificationReport check_p4(const GraphFacts& f, CycleMode mode) {
  auto rep = make_report(PredicateId::P4, 2, mode == CycleMode::Exact ? "exact" : "at-least");
  ++rep.triples_checked;
  if (!in_class_g(f.g) || f.profile->diameter != 2) return rep;
  if (find_induced_cycle(f.g, 5, mode)) return rep;
  ++rep.hypothesis_met;
  if (!is_r_bg(f.g, 2)) rep.violations.push_back(witness(f, {}, 2, {{"diameter", 2}}, "hypotheses hold, not 2-BG"));
  return rep;
}

/// Shared enumeration for P5/P6: every percolating r-seed against every minimal cut below r.
inline void check_p5_p6(const GraphFacts& f, int r, VerificationReport& p5, VerificationReport& p6) {
  if (!f.connected || f.g.n() < r + 1 || r < 2) return;
  const auto cuts = cut_sets_below(f.g, r);
  const auto seeds = percolating_sets(f.g, r, r);
  for (const auto& seed : seeds) {
    for (const auto& x : cuts) {
      ++p5.triples_checked;
      ++p6.triples_checked;
      ++p5.hypothesis_met;
      ++p6.hypothesis_met;
      const int xs = x.size();
      int k_count = 0;
      for (const auto& c : components_within(f.g, f.g.vertices() - x)) {
        if (c.is_subset_of(seed)) continue;
        ++k_count;
        const int inside = (c & seed).size();
        if (inside < r - xs) {
          auto w = witness(f, seed, r, {{"seed_in_component", inside}, {"required", r - xs}},
                           "component outside the seed holds too few seed vertices");
          w.cut = x;
          p5.violations.push_back(w);
        }
      }
      const bool too_many = k_count > r / (r - xs);
      const bool small_cut = k_count >= 2 && 2 * xs < r;
      if (too_many || small_cut) {
        auto w = witness(f, seed, r, {{"K", k_count}, {"cut_size", xs}},
                         too_many ? "|K| exceeds floor(r/(r-|X|))" : "|K| >= 2 with |X| < r/2");
        w.cut = x;
        p5.violations.push_back(w);
      }
      bool hub = false;
      for (Vertex v : x) hub = hub || seed.is_subset_of(f.g.neighbors(v));
      if (!hub) {
        auto w = witness(f, seed, r, {{"cut_size", xs}}, "no cut vertex adjacent to the whole seed");
        w.cut = x;
        p6.violations.push_back(w);
      }
    }
  }
}

inline VerificationReport check_p7(const GraphFacts& f, int r, std::size_t& r_block_graphs) {
  auto rep = make_report(PredicateId::P7, r);
  if (r < 2) return rep;
  ++rep.triples_checked;
  if (f.g.n() < r + 1) return rep;
  const auto seed = is_r_bg(f.g, r);
  if (!seed) return rep;
  ++rep.hypothesis_met;
  if (f.blocks > r) rep.violations.push_back(witness(f, *seed, r, {{"blocks", f.blocks}}, "r-BG with more than r blocks"));
  if (f.blocks == r) {
    ++r_block_graphs;
    if (r >= 3 && !is_star(f.g, r))
      rep.violations.push_back(witness(f, *seed, r, {{"blocks", f.blocks}}, "r blocks but not K_{1,r}"));
  }
  return rep;
}

inline VerificationReport check_p8(const GraphFacts& f, int r) {
  auto rep = make_report(PredicateId::P8, r);
  if (!f.connected || f.g.n() < r + 1 || r < 2) return rep;
  const auto seed = is_r_bg(f.g, r);
  const auto cuts = cut_sets_below(f.g, r);
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    ++rep.triples_checked;
    if (!seed) continue;
    ++rep.hypothesis_met;
    for (std::size_t j = i + 1; j < cuts.size(); ++j) {
      if (cuts[i].intersects(cuts[j])) continue;
      auto w = witness(f, *seed, r, {{"cut_size", cuts[i].size()}, {"other_cut_size", cuts[j].size()}},
                       "two disjoint cut sets below r");
      w.cut = cuts[i];
      w.other_cut = cuts[j];
      rep.violations.push_back(w);
    }
  }
  return rep;
}

/// P9, P10, P11 over all seeds up to the cap.
inline void check_round_bounds(const GraphFacts& f, int r, int seed_cap, VerificationReport& p9,
                               VerificationReport& p10, VerificationReport& p11, bool want9, bool want10,
                               bool want11) {
  if (!f.connected) {
    p9.skipped_graphs = p10.skipped_graphs = p11.skipped_graphs = 1;
    return;
  }
  const auto& prof = *f.profile;
  if (want11 && !prof.detour_diameter) p11.skipped_graphs = 1;
  const int cap = std::min(seed_cap > 0 ? seed_cap : f.g.n(), f.g.n());
  const int top = std::max({want9 ? std::min(cap, 2 * r - 1) : 0, want10 ? std::min(r, f.g.n()) : 0,
                            want11 ? cap : 0});
  for_each_subset(f.g.vertices(), 1, top, [&](const VertexSet& seed) {
    const int size = seed.size();
    const bool in9 = want9 && size <= std::min(cap, 2 * r - 1);
    const bool in10 = want10 && size == r;
    const bool in11 = want11 && size <= cap && prof.detour_diameter;
    if (!in9 && !in10 && !in11) return true;
    const auto t = percolate(f.g, seed, r);
    if (in9) {
      ++p9.triples_checked;
      if (t.percolates && seed_touches_round2(f.g, t)) {
        ++p9.hypothesis_met;
        const int bound = (prof.diameter + 1) / 2 + 1;
        if (t.k < bound)
          p9.violations.push_back(witness(f, seed, r, {{"k", t.k}, {"diameter", prof.diameter}}, "k < ceil(d/2)+1"));
      }
    }
    if (in10) {
      ++p10.triples_checked;
      if (t.percolates && t.k >= 2) {
        ++p10.hypothesis_met;
        if (t.k < prof.radius + 1)
          p10.violations.push_back(witness(f, seed, r, {{"k", t.k}, {"radius", prof.radius}}, "k < rad+1"));
      }
    }
    if (in11) {
      ++p11.triples_checked;
      if (t.percolates) {
        ++p11.hypothesis_met;
        if (t.k > *prof.detour_diameter + 1)
          p11.violations.push_back(
              witness(f, seed, r, {{"k", t.k}, {"detour_diameter", *prof.detour_diameter}}, "k > diam_D+1"));
      }
    }
    return true;
  });
}

inline VerificationReport check_p12(const Graph& g, const GraphFacts& f, int r, int seed_cap, int detour_cap) {
  auto rep = make_report(PredicateId::P12, r);
  if (r < 2) return rep;
  const auto mined = mine_graph(g, r, seed_cap, detour_cap);
  rep.skipped_graphs = mined.skipped_graphs;
  rep.triples_checked = mined.seeds_checked;
  rep.hypothesis_met = mined.percolating;
  for (const auto& v : mined.violations)
    rep.violations.push_back(witness(f, v.seed, r, {{"k", v.k}, {"detour_diameter", v.bound}}, "k > diam_D"));
  return rep;
}

inline bool wants(const SuiteConfig& c, PredicateId id) {
  return std::find(c.predicates.begin(), c.predicates.end(), id) != c.predicates.end();
}

}  // namespace detail

/// All reports for one graph, in canonical order: P1..P4 once, then P5..P12 for each r.
/// Per-graph runtimes are left at zero so results are reproducible; the suite times the corpus.
inline std::vector<VerificationReport> verify_graph(const Graph& g, const SuiteConfig& cfg,
                                                    std::size_t* r_block_graphs = nullptr) {
  using detail::wants;
  std::vector<VerificationReport> out;
  const detail::GraphFacts f(g, cfg.detour_cap);
  std::size_t dummy = 0;
  if (wants(cfg, PredicateId::P1)) out.push_back(detail::check_p1(f));
  if (wants(cfg, PredicateId::P2)) out.push_back(detail::check_p2(f));
  if (wants(cfg, PredicateId::P3)) out.push_back(detail::check_p3(f));
  if (wants(cfg, PredicateId::P4)) {
    for (auto mode : {CycleMode::Exact, CycleMode::AtLeast}) {
      if (f.connected) {
        out.push_back(detail::check_p4(f, mode));
      } else {
        auto rep = detail::make_report(PredicateId::P4, 2, mode == CycleMode::Exact ? "exact" : "at-least");
        rep.skipped_graphs = 1;
        out.push_back(rep);
      }
    }
  }
  for (int r : cfg.thresholds) {
    auto p5 = detail::make_report(PredicateId::P5, r);
    auto p6 = detail::make_report(PredicateId::P6, r);
    if (wants(cfg, PredicateId::P5) || wants(cfg, PredicateId::P6)) detail::check_p5_p6(f, r, p5, p6);
    if (wants(cfg, PredicateId::P5)) out.push_back(p5);
    if (wants(cfg, PredicateId::P6)) out.push_back(p6);
    if (wants(cfg, PredicateId::P7)) out.push_back(detail::check_p7(f, r, r_block_graphs ? r_block_graphs[r] : dummy));
    if (wants(cfg, PredicateId::P8)) out.push_back(detail::check_p8(f, r));
    auto p9 = detail::make_report(PredicateId::P9, r);
    auto p10 = detail::make_report(PredicateId::P10, r);
    auto p11 = detail::make_report(PredicateId::P11, r);
    const bool w9 = wants(cfg, PredicateId::P9), w10 = wants(cfg, PredicateId::P10), w11 = wants(cfg, PredicateId::P11);
    if (w9 || w10 || w11) detail::check_round_bounds(f, r, cfg.seed_cap, p9, p10, p11, w9, w10, w11);
    if (w9) out.push_back(p9);
    if (w10) out.push_back(p10);
    if (w11) out.push_back(p11);
    if (wants(cfg, PredicateId::P12)) out.push_back(detail::check_p12(g, f, r, cfg.conjecture_seed_cap, cfg.detour_cap));
  }
  return out;
}

struct SuiteResult {
  std::vector<VerificationReport> reports;
  std::size_t corpus_size = 0;
  std::size_t unreadable = 0;
  /// For each r, how many r-BG corpus graphs with n >= r+1 have exactly r blocks.
  std::vector<std::size_t> r_block_graphs;
  double elapsed_ms = 0;

  bool pass() const {
    for (const auto& r : reports)
      if (!r.pass()) return false;
    return true;
  }
  bool discoveries() const {
    for (const auto& r : reports)
      if (r.discovery_only() && !r.violations.empty()) return true;
    return false;
  }
};

/// Runs the selected predicates over a corpus. Graphs are fanned out to `cfg.workers`
/// threads; reports are merged in corpus order so output is independent of the worker count.
inline SuiteResult run_suite(const std::vector<Graph>& corpus, const SuiteConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const int max_r = cfg.thresholds.empty() ? 0 : *std::max_element(cfg.thresholds.begin(), cfg.thresholds.end());
  struct Part {
    std::vector<VerificationReport> reports;
    std::vector<std::size_t> r_blocks;
  };
  auto parts = parallel_map<Part>(corpus.size(), cfg.workers, [&](std::size_t i) {
    Part p;
    p.r_blocks.assign(static_cast<std::size_t>(max_r + 1), 0);
    p.reports = verify_graph(corpus[i], cfg, p.r_blocks.data());
    return p;
  });
  SuiteResult res;
  res.corpus_size = corpus.size();
  res.r_block_graphs.assign(static_cast<std::size_t>(max_r + 1), 0);
  for (const auto& p : parts) {
    if (res.reports.empty()) {
      res.reports = p.reports;
    } else {
      for (std::size_t j = 0; j < p.reports.size(); ++j) res.reports[j].merge(p.reports[j]);
    }
    for (std::size_t r = 0; r < p.r_blocks.size(); ++r) res.r_block_graphs[r] += p.r_blocks[r];
  }
  for (auto& r : res.reports) r.corpus = cfg.corpus_name;
  res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

/// Parses corpus lines first; unreadable lines are counted in the result and skipped.
inline SuiteResult run_suite(const std::vector<CorpusLine>& lines, const SuiteConfig& cfg) {
  std::vector<Graph> graphs;
  std::size_t bad = 0;
  for (const auto& l : lines) {
    try {
      graphs.push_back(parse_graph6(l.text));
    } catch (const ParseError&) {
      ++bad;
    }
  }
  auto res = run_suite(graphs, cfg);
  res.unreadable = bad;
  res.corpus_size += bad;
  return res;
}

/// End-to-end replay: re-parse the witness graph, re-run the predicate on it alone, and
/// confirm a violation with the same seed and cut comes back.
inline bool replay(const Witness& w, PredicateId id, const std::string& variant = {}) {
  const Graph g = parse_graph6(w.graph6);
  SuiteConfig cfg;
  cfg.thresholds = {w.r};
  cfg.predicates = {id};
  cfg.seed_cap = 0;
  cfg.conjecture_seed_cap = std::max(w.seed.size(), 1);
  for (const auto& rep : verify_graph(g, cfg)) {
    if (rep.id != id || rep.variant != variant) continue;
    for (const auto& v : rep.violations)
      if (v.seed == w.seed && v.cut == w.cut && v.other_cut == w.other_cut && v.detail == w.detail) return true;
  }
  return false;
}

}  // namespace bootperc
