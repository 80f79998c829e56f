// perc: command-line front end for the bootstrap percolation library.
//
// Records go to stdout as one JSON object per line; summaries go to stderr.
// Exit status: 0 success, 1 violation or counterexample found, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bootperc/bootperc.hpp"
#include "bootperc/records.hpp"

namespace bp = bootperc;
namespace rec = bootperc::records;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFound = 1;
constexpr int kExitInput = 2;

struct GraphInput {
  std::string file;
  std::string g6;
  std::string format = "g6";
  int max_n = bp::kDefaultMaxVertices;
};

void add_graph_options(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("--graph", in.file, "graph file (one graph6 line per graph, or an edge list)");
  cmd->add_option("--g6", in.g6, "graph6 string given inline");
  cmd->add_option("--format", in.format, "input format of --graph")->check(CLI::IsMember({"g6", "edges"}));
  cmd->add_option("--max-n", in.max_n, "largest accepted vertex count")->check(CLI::Range(1, bp::Graph::kMaxVertices));
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw bp::GraphError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<bp::Graph> load_graphs(const GraphInput& in) {
  if (!in.g6.empty()) return {bp::parse_graph6(in.g6, in.max_n)};
  if (in.file.empty()) throw bp::GraphError("give --graph FILE or --g6 STRING");
  const std::string text = slurp(in.file);
  if (in.format == "edges") return {bp::parse_edge_list(text, in.max_n)};
  std::istringstream ss(text);
  std::vector<bp::Graph> out;
  for (const auto& line : bp::read_corpus(ss)) out.push_back(bp::parse_graph6(line.text, in.max_n));
  if (out.empty()) throw bp::GraphError("no graph in " + in.file);
  return out;
}

std::vector<bp::CorpusLine> load_corpus(const std::string& path) {
  std::istringstream ss(slurp(path));
  return bp::read_corpus(ss);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw bp::GraphError("not an integer list: " + text);
    }
    if (used != tok.size()) throw bp::GraphError("not an integer list: " + text);
    out.push_back(v);
  }
  return out;
}

void emit(const rec::Json& j) { std::cout << j.dump() << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bootstrap percolation laboratory"};
  app.set_config("--config", "", "read options from a TOML/INI file");
  app.require_subcommand(1, 1);
  app.fallthrough();

  GraphInput gin;
  int r = 2;
  std::string seed_text;

  auto* run = app.add_subcommand("run", "percolate a seed and print its infection trace");
  add_graph_options(run, gin);
  run->add_option("--r", r, "threshold")->required();
  run->add_option("--seed", seed_text, "comma-separated seed vertices")->required();

  int cap = -1;
  auto* minset = app.add_subcommand("min-set", "smallest percolating set by exhaustive search");
  add_graph_options(minset, gin);
  minset->add_option("--r", r, "threshold")->required();
  minset->add_option("--cap", cap, "largest seed size to try (default n)");

  auto* bg = app.add_subcommand("bg", "least percolating set of exactly r vertices");
  add_graph_options(bg, gin);
  bg->add_option("--r", r, "threshold")->required();

  int kblock_cap = bp::kDefaultKBlockCap;
  int detour_cap = bp::kDefaultDetourCap;
  auto* stats = app.add_subcommand("stats", "degree statistics and structure report");
  add_graph_options(stats, gin);
  stats->add_option("--r", r, "threshold for cut sets and k-blocks");
  stats->add_option("--kblock-cap", kblock_cap, "largest n for k-block enumeration");
  stats->add_option("--detour-cap", detour_cap, "largest n for the longest-path search")
      ->check(CLI::Range(1, bp::kMaxDetourCap));

  std::string family;
  int gn = 0, gd = 0, gs = 0, ga = 0, gdetour = 0;
  std::string sizes_text;
  std::string meta_path;
  auto* gen = app.add_subcommand("gen", "generate an extremal construction as a graph6 line");
  gen->add_option("--family", family, "family name")
      ->required()
      ->check(CLI::IsMember({"pnr", "star", "cut-components", "rblock-lb", "slow-diam2", "slow-general", "caterpillar"}));
  gen->add_option("--n", gn, "number of groups (pnr)");
  gen->add_option("--r", r, "threshold");
  gen->add_option("--d", gd, "diameter (slow-general)");
  gen->add_option("--s", gs, "tail length (slow-diam2, slow-general)");
  gen->add_option("--a", ga, "seed size (slow-diam2)");
  gen->add_option("--sizes", sizes_text, "component sizes (cut-components)");
  gen->add_option("--detour", gdetour, "target detour diameter (caterpillar)");
  gen->add_option("--meta", meta_path, "write the metadata record to this file");

  std::string corpus_path;
  std::string predicates_text = "P1-P11";
  std::string thresholds_text = "2,3";
  int seed_cap = 0;
  int conj_cap = 3;
  int workers = 1;
  auto* verify = app.add_subcommand("verify", "check theorem predicates over a graph6 corpus");
  verify->add_option("--corpus", corpus_path, "graph6 corpus ('-' for stdin)")->required();
  verify->add_option("--predicates", predicates_text, "e.g. P1-P11 or P2,P5");
  verify->add_option("--r", thresholds_text, "comma-separated thresholds");
  verify->add_option("--seed-cap", seed_cap, "largest seed for P9/P11 (0 = n)");
  verify->add_option("--conjecture-seed-cap", conj_cap, "largest seed for P12");
  verify->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--detour-cap", detour_cap, "largest n for the longest-path search")
      ->check(CLI::Range(1, bp::kMaxDetourCap));

  int mine_cap = 3;
  auto* mine = app.add_subcommand("mine", "search a corpus for counterexamples to k <= diam_D");
  mine->add_option("--corpus", corpus_path, "graph6 corpus ('-' for stdin)")->required();
  mine->add_option("--r", r, "threshold (>= 2)")->check(CLI::Range(2, 64));
  mine->add_option("--seed-cap", mine_cap, "largest seed size");
  mine->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  mine->add_option("--detour-cap", detour_cap, "largest n for the longest-path search")
      ->check(CLI::Range(1, bp::kMaxDetourCap));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*run) {
      const auto seed_list = parse_int_list(seed_text);
      for (const auto& g : load_graphs(gin)) {
        for (int v : seed_list)
          if (v < 0 || v >= g.n()) throw bp::GraphError("seed vertex out of range: " + std::to_string(v));
        const auto t = bp::percolate(g, bp::VertexSet::from_list(seed_list), r);
        emit(rec::trace(t));
        std::cerr << (t.percolates ? "percolates" : "does not percolate") << " after " << t.k << " round(s)\n";
      }
      return kExitOk;
    }
    if (*minset) {
      for (const auto& g : load_graphs(gin)) {
        const auto res = bp::min_percolating_set(g, r, cap < 0 ? g.n() : cap);
        emit(rec::min_set(res));
        if (res.m) {
          std::cerr << "m(G," << r << ") = " << *res.m << "\n";
        } else {
          std::cerr << "no percolating set within the cap; m >= " << res.lower_bound << "\n";
        }
      }
      return kExitOk;
    }
    if (*bg) {
      for (const auto& g : load_graphs(gin)) {
        const auto s = bp::is_r_bg(g, r);
        rec::Json j;
        j["r"] = r;
        j["bootstrapGood"] = s.has_value();
        j["seed"] = s ? rec::vertex_list(*s) : rec::Json(nullptr);
        emit(j);
      }
      return kExitOk;
    }
    if (*stats) {
      for (const auto& g : load_graphs(gin)) {
        rec::Json j;
        j["graph6"] = bp::encode_graph6(g);
        j["stats"] = rec::stats(bp::degree_stats(g));
        j["structure"] = rec::structure(g, r, kblock_cap, detour_cap);
        emit(j);
      }
      return kExitOk;
    }
    if (*gen) {
      bp::Family f;
      if (family == "pnr") f = bp::gen_pnr(gn, r);
      else if (family == "star") f = bp::gen_star(r);
      else if (family == "cut-components") f = bp::gen_cut_components(r, parse_int_list(sizes_text));
      else if (family == "rblock-lb") f = bp::gen_rblock_lb(r);
      else if (family == "slow-diam2") f = bp::gen_slow_diam2(ga, gs);
      else if (family == "slow-general") f = bp::gen_slow_general(gd, r, gs);
      else f = bp::gen_caterpillar(r, gdetour);
      const std::string g6 = bp::encode_graph6(f.graph);
      std::cout << g6 << '\n';
      const auto meta = rec::family(f, g6);
      if (!meta_path.empty()) {
        std::ofstream out(meta_path);
        if (!out) throw bp::GraphError("cannot write " + meta_path);
        out << meta.dump() << '\n';
      } else {
        std::cerr << meta.dump() << '\n';
      }
      return kExitOk;
    }
    if (*verify) {
      bp::SuiteConfig cfg;
      cfg.predicates = bp::parse_predicates(predicates_text);
      cfg.thresholds = parse_int_list(thresholds_text);
      for (int t : cfg.thresholds)
        if (t < 1) throw bp::GraphError("thresholds must be at least 1");
      cfg.seed_cap = seed_cap;
      cfg.conjecture_seed_cap = conj_cap;
      cfg.workers = workers;
      cfg.detour_cap = detour_cap;
      cfg.corpus_name = corpus_path;
      const auto res = bp::run_suite(load_corpus(corpus_path), cfg);
      for (const auto& rep : res.reports) {
        emit(rec::report(rep));
        std::cerr << bp::predicate_name(rep.id) << (rep.variant.empty() ? "" : "/" + rep.variant) << " r=" << rep.r
                  << ": " << (rep.discovery_only() ? (rep.violations.empty() ? "no discovery" : "DISCOVERY")
                                                   : (rep.pass() ? "pass" : "FAIL"))
                  << " (" << rep.hypothesis_met << "/" << rep.triples_checked << " in hypothesis, "
                  << rep.violations.size() << " violations)\n";
      }
      std::cerr << res.corpus_size << " corpus entries, " << res.unreadable << " unreadable, " << res.elapsed_ms
                << " ms\n";
      return res.pass() && !res.discoveries() ? kExitOk : kExitFound;
    }
    if (*mine) {
      const auto rep = bp::mine_conjecture(load_corpus(corpus_path), r, mine_cap, workers, detour_cap);
      emit(rec::miner(rep));
      std::cerr << rep.corpus_size << " graphs, " << rep.percolating << " percolating seeds, " << rep.tight
                << " tight, " << rep.violations.size() << " counterexamples, " << rep.skipped_lines
                << " unreadable lines\n";
      return rep.violations.empty() ? kExitOk : kExitFound;
    }
  } catch (const bp::GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
