#pragma once

// Newline-delimited JSON records with a fixed field order.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bootperc/constructions.hpp"
#include "bootperc/graph.hpp"
#include "bootperc/miner.hpp"
#include "bootperc/percolation.hpp"
#include "bootperc/search.hpp"
#include "bootperc/structure.hpp"
#include "bootperc/verify.hpp"

namespace bootperc::records {

using Json = nlohmann::ordered_json;

template <std::size_t W>
Json vertex_list(const BasicVertexSet<W>& s) {
  Json a = Json::array();
  for (Vertex v : s) a.push_back(v);
  return a;
}

template <std::size_t W>
Json set_list(const std::vector<BasicVertexSet<W>>& sets) {
  Json a = Json::array();
  for (const auto& s : sets) a.push_back(vertex_list(s));
  return a;
}

template <typename T>
Json optional_value(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <std::size_t W>
Json trace(const BasicInfectionTrace<W>& t) {
  Json j;
  j["r"] = t.r;
  j["seed"] = vertex_list(t.seed);
  Json rounds = Json::array();
  for (const auto& r : t.round_of) rounds.push_back(optional_value(r));
  j["roundOf"] = rounds;
  j["k"] = t.k;
  j["percolates"] = t.percolates;
  return j;
}

/// Inverse of trace(); throws GraphError on a malformed record.
inline InfectionTrace parse_trace(const Json& j) {
  try {
    InfectionTrace t;
    t.r = j.at("r").get<int>();
    for (const auto& v : j.at("seed")) t.seed.insert(v.get<int>());
    for (const auto& v : j.at("roundOf")) t.round_of.push_back(v.is_null() ? std::nullopt : std::optional<int>(v.get<int>()));
    t.k = j.at("k").get<int>();
    t.percolates = j.at("percolates").get<bool>();
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("malformed trace record: ") + e.what());
  }
}

inline Json stats(const GraphStats& s) {
  Json j;
  j["n"] = s.n;
  j["m"] = s.m;
  j["minDeg"] = s.min_degree;
  j["maxDeg"] = s.max_degree;
  j["sigma2"] = optional_value(s.sigma2);
  return j;
}

template <std::size_t W>
Json min_set(const BasicMinSetResult<W>& r) {
  Json j;
  j["m"] = optional_value(r.m);
  j["witness"] = r.m ? vertex_list(r.witness) : Json(nullptr);
  j["subsetsTested"] = r.subsets_tested;
  j["complete"] = r.complete;
  j["lowerBound"] = r.lower_bound;
  return j;
}

/// Structure report for one connected or disconnected graph.
inline Json structure(const Graph& g, int r, int kblock_cap = kDefaultKBlockCap,
                      int detour_cap = kDefaultDetourCap) {
  Json j;
  const auto bd = block_decomposition(g);
  j["blocks"] = set_list(bd.blocks);
  j["cutVertices"] = vertex_list(bd.cut_vertices);
  const bool connected = g.n() > 0 && is_connected(g);
  j["connected"] = connected;
  j["cutSetsBelow"] = connected && r >= 2 ? set_list(cut_sets_below(g, r)) : Json::array();
  if (r >= 2 && g.n() <= kblock_cap) {
    j["kBlocks"] = set_list(k_blocks(g, r, KBlockMode::Maximal, kblock_cap));
  } else {
    j["kBlocks"] = nullptr;
  }
  j["locallyConnected"] = is_locally_connected(g);
  j["dominatingVertex"] = optional_value(dominating_vertex(g));
  j["inClassG"] = in_class_g(g);
  if (connected) {
    const auto p = distance_profile(g, detour_cap);
    j["eccentricity"] = p.eccentricity;
    j["diameter"] = p.diameter;
    j["radius"] = p.radius;
    j["detourDiameter"] = optional_value(p.detour_diameter);
    j["detourWitness"] = p.detour_diameter ? Json(p.detour_witness) : Json(nullptr);
  }
  return j;
}

inline Json family(const Family& f, const std::string& graph6) {
  Json j;
  j["family"] = f.family;
  Json params;
  for (const auto& [k, v] : f.params) params[k] = v;
  j["params"] = params;
  j["graph6"] = graph6;
  j["seed"] = vertex_list(f.seed);
  j["groups"] = set_list(f.groups);
  Json claims;
  for (const auto& c : f.claims) claims[c.name] = c.value;
  j["claims"] = claims;
  j["notes"] = f.notes;
  return j;
}

inline Json witness(const Witness& w) {
  Json j;
  j["graph6"] = w.graph6;
  j["seed"] = vertex_list(w.seed);
  j["r"] = w.r;
  j["cut"] = w.cut ? vertex_list(*w.cut) : Json(nullptr);
  j["otherCut"] = w.other_cut ? vertex_list(*w.other_cut) : Json(nullptr);
  Json obs;
  for (const auto& o : w.observed) obs[o.name] = o.value;
  j["observed"] = obs;
  j["detail"] = w.detail;
  return j;
}

inline Json report(const VerificationReport& r) {
  Json j;
  j["predicate"] = predicate_name(r.id);
  j["variant"] = r.variant.empty() ? Json(nullptr) : Json(r.variant);
  j["corpus"] = r.corpus;
  j["r"] = r.r;
  j["graphs"] = r.graphs;
  j["triplesChecked"] = r.triples_checked;
  j["hypothesisMet"] = r.hypothesis_met;
  j["skippedGraphs"] = r.skipped_graphs;
  j["violations"] = Json::array();
  for (const auto& w : r.violations) j["violations"].push_back(witness(w));
  j["pass"] = r.pass();
  j["runtimeMs"] = r.runtime_ms;
  return j;
}

inline Json miner(const MinerReport& m) {
  Json j;
  j["r"] = m.r;
  j["seedCap"] = m.seed_cap;
  j["corpusSize"] = m.corpus_size;
  j["skippedLines"] = m.skipped_lines;
  j["skippedGraphs"] = m.skipped_graphs;
  j["seedsChecked"] = m.seeds_checked;
  j["percolating"] = m.percolating;
  j["tight"] = m.tight;
  j["withoutRound2Contact"] = m.without_round2_contact;
  j["withoutRound2MinSlack"] = optional_value(m.without_round2_min_slack);
  j["violations"] = Json::array();
  for (const auto& v : m.violations) {
    Json w;
    w["graph6"] = v.graph6;
    w["seed"] = vertex_list(v.seed);
    w["r"] = v.r;
    w["k"] = v.k;
    w["bound"] = v.bound;
    j["violations"].push_back(w);
  }
  j["elapsedMs"] = m.elapsed_ms;
  return j;
}

}  // namespace bootperc::records
