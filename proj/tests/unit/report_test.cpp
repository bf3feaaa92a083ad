// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#include "onionpeel/report.hpp"

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "onionpeel/generators.hpp"

namespace onionpeel {
namespace {

using testing::corpus;
using testing::error_of;

struct Artifacts {
  Embedding input;
  Embedding saturated;
  Embedding disk;
  Json peel;
  Json forest;
  Json trace;
  Json bd;
  Json pipeline;
};

Artifacts emit_all(const Embedding& g) {
  Artifacts a;
  a.input = g;
  a.peel = peel_json(g, onion_peels(g));
  a.saturated = saturate_inward_neighbors(g);
  RootedForest f = build_rooted_forest(a.saturated);
  a.forest = forest_json(a.saturated, f, verify_forest_bound(a.saturated, f).k);
  auto [disk, trace] = to_triangulated_disk(g);
  a.trace = trace_json(trace, onion_peels(g).k(), onion_peels(disk).k());
  PipelineResult r = decompose(g);
  a.disk = r.disk;
  a.bd = bd_json(r.disk, build_dual_tree(r.disk, r.forest), r.bd, r.certificate);
  a.pipeline = pipeline_json(g, false);
  return a;
}

TEST(Report, SelfConsistentOnCorpus) {
  for (const auto& inst : corpus()) {
    Artifacts a = emit_all(inst.g);
    EXPECT_EQ(verify_artifact(a.input, &a.peel)["artifact"], "peel") << inst.name;
    EXPECT_EQ(verify_artifact(a.saturated, &a.forest)["artifact"], "forest") << inst.name;
    EXPECT_EQ(verify_artifact(a.disk, &a.trace)["artifact"], "trace") << inst.name;
    EXPECT_EQ(verify_artifact(a.disk, &a.bd)["artifact"], "bd") << inst.name;
    EXPECT_EQ(verify_artifact(a.input, &a.pipeline)["artifact"], "pipeline") << inst.name;
    EXPECT_TRUE(verify_artifact(a.input, nullptr)["verified"].get<bool>()) << inst.name;
  }
}

TEST(Report, ForestRoundTrip) {
  Embedding g = saturate_inward_neighbors(gen_nested_triangles(4));
  RootedForest f = build_rooted_forest(g);
  RootedForest back = forest_from_json(g, forest_json(g, f, 4));
  EXPECT_EQ(back.parent, f.parent);
  EXPECT_EQ(back.depth, f.depth);
  EXPECT_EQ(back.roots, f.roots);
}

TEST(Report, BranchDecompositionRoundTrip) {
  PipelineResult r = decompose(gen_counterexample(2));
  Json j = bd_json(r.disk, build_dual_tree(r.disk, r.forest), r.bd, r.certificate);
  BranchDecomposition back = bd_from_json(j);
  EXPECT_EQ(back.arcs, r.bd.arcs);
  EXPECT_EQ(back.edges, r.bd.edges);
  EXPECT_EQ(back.leaf_of_edge, r.bd.leaf_of_edge);
  EXPECT_EQ(back.width, r.bd.width);
  EXPECT_EQ(j["bounds"]["tw"], treewidth_bound(r.bd.width));
}

TEST(Report, PipelineFields) {
  Json p = pipeline_json(gen_counterexample(2), false);
  EXPECT_EQ(p["k_in"], 2);
  EXPECT_LE(p["bd_width"].get<int>(), 4);
  EXPECT_LE(p["tw_bound"].get<int>(), 5);
  EXPECT_FALSE(p.contains("timings_ms"));
  EXPECT_TRUE(pipeline_json(gen_cycle(4), true).contains("timings_ms"));
}

TEST(Verify, DetectsTampering) {
  Artifacts a = emit_all(gen_nested_triangles(3));

  Json peel = a.peel;
  peel["k"] = 2;
  EXPECT_EQ(error_of([&] { verify_artifact(a.input, &peel); }), ErrorCode::kInvalidArtifact);

  Json forest = a.forest;
  // Vertex 0 sits on the innermost triangle.
  forest["vertices"][0]["depth"] = 0;
  EXPECT_EQ(error_of([&] { verify_artifact(a.saturated, &forest); }), ErrorCode::kInvalidForest);

  Json trace = a.trace;
  trace["k_out"] = 1;
  EXPECT_EQ(error_of([&] { verify_artifact(a.disk, &trace); }), ErrorCode::kInvalidArtifact);

  Json bd = a.bd;
  bd["width"] = bd["width"].get<int>() - 1;
  EXPECT_EQ(error_of([&] { verify_artifact(a.disk, &bd); }), ErrorCode::kInvalidArtifact);

  Json bd_bounds = a.bd;
  bd_bounds["bounds"]["2h"] = 1;
  EXPECT_EQ(error_of([&] { verify_artifact(a.disk, &bd_bounds); }), ErrorCode::kBoundViolated);

  Json bd_arc = a.bd;
  bd_arc["arcs"].erase(0);
  EXPECT_EQ(error_of([&] { verify_artifact(a.disk, &bd_arc); }), ErrorCode::kInvalidArtifact);

  Json pipe = a.pipeline;
  pipe["bd_width"] = 99;
  EXPECT_EQ(error_of([&] { verify_artifact(a.input, &pipe); }), ErrorCode::kInvalidArtifact);

  // An artifact for one graph does not verify against another.
  Embedding other = gen_nested_triangles(2);
  EXPECT_TRUE(error_of([&] { verify_artifact(other, &a.bd); }).has_value());

  Json junk = {{"hello", 1}};
  EXPECT_EQ(error_of([&] { verify_artifact(a.input, &junk); }), ErrorCode::kInvalidArtifact);
  Json arr = Json::array();
  EXPECT_EQ(error_of([&] { verify_artifact(a.input, &arr); }), ErrorCode::kInvalidArtifact);
}

TEST(Verify, Theorem1) {
  Json t = theorem1_json(certify_theorem1(1));
  Embedding any = gen_cycle(3);
  EXPECT_TRUE(verify_artifact(any, &t)["holds"].get<bool>());
  t["min_outerplanarity"] = 1;
  EXPECT_EQ(error_of([&] { verify_artifact(any, &t); }), ErrorCode::kInvalidArtifact);
}

TEST(Dump, StableFormatting) {
  Json j = {{"b", 1}, {"a", {1, 2}}};
  EXPECT_EQ(dump(j), "{\n  \"a\": [\n    1,\n    2\n  ],\n  \"b\": 1\n}\n");
}

}  // namespace
}  // namespace onionpeel
