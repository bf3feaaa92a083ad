// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#include <set>

#include "onionpeel/error.hpp"
#include "onionpeel/report.hpp"

namespace onionpeel {

namespace {

[[noreturn]] void mismatch(const std::string& what) { fail(ErrorCode::kInvalidArtifact, what); }

Json verify_peel(const Embedding& g, const Json& a) {
  Json expect = peel_json(g, onion_peels(g));
  if (a.at("k") != expect.at("k")) mismatch("claimed k differs from the recomputed peel count");
  if (a.at("layers") != expect.at("layers")) mismatch("claimed layers differ from the recomputed peels");
  return {{"artifact", "peel"}, {"k", expect.at("k")}};
}

Json verify_forest(const Embedding& g, const Json& a) {
  RootedForest f = forest_from_json(g, a);
  ForestBound b = verify_forest_bound(g, f);
  if (a.contains("height") && a.at("height") != b.height) mismatch("claimed height differs from the forest");
  return {{"artifact", "forest"}, {"height", b.height}, {"k", b.k}};
}

Json verify_trace(const Embedding& g, const Json& a) {
  bool apex = false;
  std::size_t count = 0;
  for (const Json& e : a.at("added")) {
    if (!e.is_array() || e.size() != 3) mismatch("trace entries must be [u, v, stage]");
    auto u = g.vertex_of(e[0].get<Label>());
    auto v = g.vertex_of(e[1].get<Label>());
    if (!u || !v || !g.adjacent(*u, *v)) {
      mismatch("traced edge " + e[0].dump() + "-" + e[1].dump() + " is not in the graph");
    }
    apex = apex || e[2] == "apex";
    ++count;
  }
  const int k_out = onion_peels(g).k();
  if (a.at("k_out") != k_out) mismatch("claimed k_out differs from the recomputed peel count");
  const int k_in = a.at("k_in").get<int>();
  const int allowed = apex ? k_in + 1 : k_in;
  if (k_out > allowed) {
    fail(ErrorCode::kBoundViolated, "k_out " + std::to_string(k_out) + " exceeds " + std::to_string(allowed));
  }
  bool shape = apex ? is_triangulation(g) : is_triangulated_disk(g);
  if (!shape) mismatch(apex ? "graph is not a triangulation" : "graph is not a triangulated disk");
  return {{"artifact", "trace"}, {"added", count}, {"k_in", k_in}, {"k_out", k_out}};
}

Json verify_bd(const Embedding& g, const Json& a) {
  BranchDecomposition bd = bd_from_json(a);
  validate_branch_decomposition(bd);
  std::set<LabelEdge> graph_edges;
  for (std::size_t d = 0; d < g.num_darts(); d += 2) {
    Label u = g.label(g.origin(static_cast<Dart>(d)));
    Label v = g.label(g.target(static_cast<Dart>(d)));
    graph_edges.insert({std::min(u, v), std::max(u, v)});
  }
  if (std::set<LabelEdge>(bd.edges.begin(), bd.edges.end()) != graph_edges) {
    mismatch("decomposition edges differ from the graph's edges");
  }
  int width = 0;
  for (const ArcCut& c : crossing_sets_by_bipartition(bd)) width = std::max(width, static_cast<int>(c.crossing.size()));
  if (width != bd.width) {
    mismatch("claimed width " + std::to_string(bd.width) + " but arcs are crossed by up to " + std::to_string(width));
  }
  const Json& bounds = a.at("bounds");
  if (bounds.at("tw") != treewidth_bound(width)) mismatch("claimed treewidth bound is not max(1, 3w/2 - 1)");
  if (width > bounds.at("2h").get<int>()) fail(ErrorCode::kBoundViolated, "width exceeds the claimed 2h");
  return {{"artifact", "bd"}, {"nodes", bd.nodes.size()}, {"width", width}};
}

Json verify_pipeline(const Embedding& g, const Json& a) {
  Json expect = pipeline_json(g, false);
  for (const char* key : {"k_in", "k_out", "forest_height", "bd_width", "tw_bound"}) {
    if (a.at(key) != expect.at(key)) mismatch(std::string("claimed ") + key + " differs from a fresh run");
  }
  return {{"artifact", "pipeline"}, {"bd_width", expect.at("bd_width")}, {"k_in", expect.at("k_in")}};
}

Json verify_theorem1(const Json& a) {
  Json expect = theorem1_json(certify_theorem1(a.at("k").get<int>()));
  for (const char* key : {"triangulations", "min_outerplanarity", "holds", "three_connected"}) {
    if (a.at(key) != expect.at(key)) mismatch(std::string("claimed ") + key + " differs from a fresh run");
  }
  return {{"artifact", "theorem1"}, {"holds", expect.at("holds")}, {"k", expect.at("k")}};
}

}  // namespace

Json verify_artifact(const Embedding& g, const Json* artifact) {
  Json result;
  if (!artifact) {
    result = {{"artifact", "epg"},
              {"vertices", g.num_vertices()},
              {"edges", g.num_edges()},
              {"faces", trace_faces(g).size()},
              {"components", num_components(g)},
              {"k", onion_peels(g).k()},
              {"triangulated_disk", is_triangulated_disk(g)},
              {"triangulation", is_triangulation(g)}};
  } else {
    const Json& a = *artifact;
    if (!a.is_object()) mismatch("artifact must be a JSON object");
    try {
      if (a.contains("nodes")) {
        result = verify_bd(g, a);
      } else if (a.contains("layers")) {
        result = verify_peel(g, a);
      } else if (a.contains("added")) {
        result = verify_trace(g, a);
      } else if (a.contains("roots") && a.contains("vertices")) {
        result = verify_forest(g, a);
      } else if (a.value("command", "") == "pipeline") {
        result = verify_pipeline(g, a);
      } else if (a.contains("theorem")) {
        result = verify_theorem1(a);
      } else {
        mismatch("unrecognized artifact");
      }
    } catch (const Json::exception& e) {
      mismatch(std::string("malformed artifact: ") + e.what());
    }
  }
  result["verified"] = true;
  return result;
}

}  // namespace onionpeel
