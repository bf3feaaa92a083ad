// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#include "onionpeel/report.hpp"

#include <chrono>
#include <map>
#include <set>

#include "onionpeel/error.hpp"

namespace onionpeel {

namespace {

std::string edge_key(const LabelEdge& e) { return std::to_string(e.first) + "-" + std::to_string(e.second); }

Vertex vertex_or_fail(const Embedding& g, Label l) {
  auto v = g.vertex_of(l);
  if (!v) fail(ErrorCode::kInvalidArtifact, "artifact names unknown vertex " + std::to_string(l));
  return *v;
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::kInvalidArtifact, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    fail(ErrorCode::kInvalidArtifact, std::string("field '") + key + "': " + e.what());
  }
}

double ms_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t).count();
}

}  // namespace

Json peel_json(const Embedding& g, const PeelDecomposition& peels) {
  Json layers = Json::array();
  for (const auto& layer : peels.layers) {
    Json row = Json::array();
    for (Vertex v : layer) row.push_back(g.label(v));
    layers.push_back(row);
  }
  return {{"k", peels.k()}, {"layers", layers}};
}

Json forest_json(const Embedding& g, const RootedForest& forest, int k) {
  Json roots = Json::array();
  for (Vertex r : forest.roots) roots.push_back(g.label(r));
  Json vertices = Json::array();
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    Vertex p = forest.parent[v];
    vertices.push_back({{"v", g.label(static_cast<Vertex>(v))},
                        {"parent", p == kNoVertex ? Json(nullptr) : Json(g.label(p))},
                        {"depth", forest.depth[v]}});
  }
  return {{"height", forest.height()}, {"k", k}, {"roots", roots}, {"vertices", vertices}};
}

RootedForest forest_from_json(const Embedding& g, const Json& j) {
  const std::size_t n = g.num_vertices();
  RootedForest f;
  f.parent.assign(n, kNoVertex);
  f.depth.assign(n, -1);
  auto vertices = field<Json>(j, "vertices");
  if (!vertices.is_array() || vertices.size() != n) fail(ErrorCode::kInvalidArtifact, "forest must list every vertex once");
  for (const Json& entry : vertices) {
    Vertex v = vertex_or_fail(g, field<Label>(entry, "v"));
    if (f.depth[static_cast<std::size_t>(v)] != -1) fail(ErrorCode::kInvalidArtifact, "vertex listed twice");
    f.depth[static_cast<std::size_t>(v)] = field<int>(entry, "depth");
    const Json& p = entry.at("parent");
    if (!p.is_null()) f.parent[static_cast<std::size_t>(v)] = vertex_or_fail(g, field<Label>(entry, "parent"));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (f.parent[v] == kNoVertex) f.roots.push_back(static_cast<Vertex>(v));
  }
  return f;
}

Json trace_json(const DiskConversionTrace& trace, int k_in, int k_out) {
  Json added = Json::array();
  for (const TracedEdge& e : trace.added) added.push_back({e.u, e.v, std::string(stage_name(e.stage))});
  return {{"added", added}, {"k_in", k_in}, {"k_out", k_out}};
}

Json bd_json(const Embedding& disk, const DualTree& tree, const BranchDecomposition& bd, const WidthCertificate& cert) {
  const FaceTable t = face_table(disk);
  Json nodes = Json::array();
  for (std::size_t i = 0; i < bd.nodes.size(); ++i) {
    const BranchNode& n = bd.nodes[i];
    Json node = {{"id", i}, {"kind", std::string(node_kind_name(n.kind))}};
    if (n.kind == NodeKind::kFace) {
      Json face = Json::array();
      for (Dart d : t.walks[static_cast<std::size_t>(tree.face_walk[static_cast<std::size_t>(n.face)])].darts) {
        face.push_back(disk.label(disk.origin(d)));
      }
      node["face"] = face;
    } else {
      node["edge"] = {n.edge.first, n.edge.second};
    }
    nodes.push_back(node);
  }
  Json arcs = Json::array();
  for (const auto& [a, b] : bd.arcs) arcs.push_back({a, b});
  Json assignment = Json::object();
  for (std::size_t j = 0; j < bd.edges.size(); ++j) assignment[edge_key(bd.edges[j])] = bd.leaf_of_edge[j];
  return {{"nodes", nodes},
          {"arcs", arcs},
          {"assignment", assignment},
          {"width", bd.width},
          {"bounds", {{"2h", cert.bound_2h}, {"tw", cert.tw_bound}}}};
}

BranchDecomposition bd_from_json(const Json& j) {
  BranchDecomposition bd;
  auto nodes = field<Json>(j, "nodes");
  if (!nodes.is_array()) fail(ErrorCode::kInvalidArtifact, "nodes must be an array");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Json& n = nodes[i];
    if (field<std::size_t>(n, "id") != i) fail(ErrorCode::kInvalidArtifact, "node ids must be 0..n-1 in order");
    auto kind = field<std::string>(n, "kind");
    BranchNode node;
    if (kind == "face") {
      node.kind = NodeKind::kFace;
      node.face = static_cast<std::int32_t>(i);
    } else if (kind == "arc" || kind == "edge") {
      node.kind = kind == "arc" ? NodeKind::kArc : NodeKind::kEdge;
      auto e = field<std::vector<Label>>(n, "edge");
      if (e.size() != 2) fail(ErrorCode::kInvalidArtifact, "edge must have two endpoints");
      node.edge = {e[0], e[1]};
    } else {
      fail(ErrorCode::kInvalidArtifact, "unknown node kind '" + kind + "'");
    }
    bd.nodes.push_back(node);
  }
  for (const auto& a : field<std::vector<std::vector<std::int32_t>>>(j, "arcs")) {
    if (a.size() != 2) fail(ErrorCode::kInvalidArtifact, "arcs must be pairs");
    bd.arcs.emplace_back(a[0], a[1]);
  }
  std::map<LabelEdge, std::int32_t> assignment;
  const auto claimed = field<Json>(j, "assignment");
  if (!claimed.is_object()) fail(ErrorCode::kInvalidArtifact, "assignment must be an object");
  for (const auto& [key, leaf] : claimed.items()) {
    auto dash = key.find('-', 1);
    if (dash == std::string::npos) fail(ErrorCode::kInvalidArtifact, "bad assignment key '" + key + "'");
    LabelEdge e;
    try {
      e = {std::stoll(key.substr(0, dash)), std::stoll(key.substr(dash + 1))};
    } catch (const std::exception&) {
      fail(ErrorCode::kInvalidArtifact, "bad assignment key '" + key + "'");
    }
    if (!leaf.is_number_integer()) fail(ErrorCode::kInvalidArtifact, "leaf ids must be integers");
    assignment[e] = leaf.get<std::int32_t>();
  }
  for (const auto& [e, leaf] : assignment) {
    bd.edges.push_back(e);
    bd.leaf_of_edge.push_back(leaf);
  }
  bd.width = field<int>(j, "width");
  return bd;
}

Json pipeline_json(const Embedding& g, bool timings) {
  using Clock = std::chrono::steady_clock;
  Json t = Json::object();
  auto start = Clock::now();
  const int k_in = onion_peels(g).k();
  t["peel"] = ms_since(start);

  start = Clock::now();
  DiskConversion c = convert_to_disk(g);
  t["disk"] = ms_since(start);

  start = Clock::now();
  ForestBound fb = verify_forest_bound(c.disk, c.forest);
  t["forest"] = ms_since(start);

  start = Clock::now();
  DualTree tree = build_dual_tree(c.disk, c.forest);
  BranchDecomposition bd = build_branch_tree(tree, c.disk, c.forest);
  t["bd"] = ms_since(start);

  start = Clock::now();
  WidthCertificate cert = certify_width_bound(c.disk, c.forest, bd);
  t["certify"] = ms_since(start);

  if (fb.height + 1 > k_in) {
    fail(ErrorCode::kBoundViolated, "forest height " + std::to_string(fb.height) + " exceeds k - 1");
  }
  if (cert.width > 2 * k_in) fail(ErrorCode::kBoundViolated, "width exceeds 2k");
  if (cert.tw_bound > 3 * k_in - 1) fail(ErrorCode::kBoundViolated, "treewidth bound exceeds 3k - 1");

  Json r = {{"command", "pipeline"},
            {"vertices", g.num_vertices()},
            {"edges", g.num_edges()},
            {"disk_edges", c.disk.num_edges()},
            {"k_in", k_in},
            {"k_out", fb.k},
            {"forest_height", fb.height},
            {"bd_width", cert.width},
            {"tw_bound", cert.tw_bound},
            {"separators_checked", cert.separators_checked},
            {"bounds", {{"2h", cert.bound_2h}, {"2k", 2 * k_in}, {"3k-1", 3 * k_in - 1}}}};
  if (timings) r["timings_ms"] = t;
  return r;
}

Json theorem1_json(const Theorem1Report& r) {
  return {{"theorem", 1},
          {"k", r.k},
          {"vertices", r.vertices},
          {"three_connected", r.three_connected},
          {"triangulations", r.triangulations},
          {"min_outerplanarity", r.min_outerplanarity},
          {"lower_bound", r.k + 1},
          {"holds", r.holds},
          {"method", r.method}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace onionpeel
