// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>

#include "corpus.hpp"
#include "onionpeel/epg.hpp"
#include "onionpeel/generators.hpp"

namespace onionpeel {
namespace {

using testing::corpus;
using testing::dart;
using testing::error_of;
using testing::inner_walks;
using testing::vx;

Embedding triangle() { return parse_epg("epg 1\nv 0: 1 2\nv 1: 2 0\nv 2: 0 1\nouter 0 1\n"); }

std::vector<std::size_t> walk_lengths(const Embedding& g) {
  std::vector<std::size_t> out;
  for (const FaceWalk& w : trace_faces(g)) out.push_back(w.darts.size());
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Build, TriangleHasTwoFaces) {
  Embedding g = triangle();
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 3u);
  auto faces = trace_faces(g);
  ASSERT_EQ(faces.size(), 2u);
  EXPECT_EQ(std::count_if(faces.begin(), faces.end(), [](const FaceWalk& w) { return w.is_outer; }), 1);
  for (const FaceWalk& w : faces) EXPECT_EQ(w.darts.size(), 3u);
}

TEST(Build, RejectsMalformedRotations) {
  EXPECT_EQ(error_of([] { parse_epg("epg 1\nv 0: 0 1\nv 1: 0\nouter 0 1\n"); }), ErrorCode::kSelfLoop);
  EXPECT_EQ(error_of([] { parse_epg("epg 1\nv 0: 1 1\nv 1: 0 0\nouter 0 1\n"); }), ErrorCode::kParallelEdge);
  EXPECT_EQ(error_of([] { parse_epg("epg 1\nv 0: 1 2\nv 1: 0\nv 2:\nouter 0 1\n"); }),
            ErrorCode::kAsymmetricAdjacency);
  EXPECT_EQ(error_of([] { parse_epg("epg 1\nv 0: 7\nouter 0 7\n"); }), ErrorCode::kUnknownVertex);
  EXPECT_EQ(error_of([] { parse_epg("epg 1\nv 0: 1 2\nv 1: 2 0\nv 2: 0 1\nouter 0 9\n"); }),
            ErrorCode::kBadOuterDart);
  EXPECT_EQ(error_of([] { parse_epg("epg 1\nv 0: 1 2\nv 1: 2 0\nv 2: 0 1\n"); }), ErrorCode::kNestedComponent);
  // Both orientations of the triangle at once: two different faces named outer.
  EXPECT_EQ(error_of([] { parse_epg("epg 1\nv 0: 1 2\nv 1: 2 0\nv 2: 0 1\nouter 0 1\nouter 1 0\n"); }),
            ErrorCode::kNestedComponent);
}

TEST(Build, RejectsToroidalRotation) {
  // K4 with the rotation at the hub reversed has V - E + F = 0.
  EXPECT_EQ(error_of([] {
              parse_epg("epg 1\nv 0: 1 2 3\nv 1: 0 3 2\nv 2: 0 1 3\nv 3: 0 1 2\nouter 0 2\n");
            }),
            ErrorCode::kEulerViolation);
}

TEST(Build, NestedTrianglesCounts) {
  Embedding t3 = gen_nested_triangles(3);
  EXPECT_EQ(t3.num_vertices(), 9u);
  EXPECT_EQ(t3.num_edges(), 21u);
  EXPECT_EQ(trace_faces(t3).size(), 14u);
}

TEST(Build, EulerHoldsPerComponentOnCorpus) {
  for (const auto& inst : corpus()) {
    const Embedding& g = inst.g;
    std::size_t comps = num_components(g);
    auto v = static_cast<long>(g.num_vertices());
    auto e = static_cast<long>(g.num_edges());
    // Each component has its own outer walk; the plane has one shared outer face.
    auto f = static_cast<long>(plane_face_count(g));
    EXPECT_EQ(v - e + f, 1 + static_cast<long>(comps)) << inst.name;
  }
}

TEST(Build, StructuralEqualityIgnoresDartNumbering) {
  for (const auto& inst : corpus()) {
    Embedding again = Embedding::build(inst.g.to_spec());
    EXPECT_TRUE(again == inst.g) << inst.name;
  }
}

TEST(Faces, CycleAndK4) {
  EXPECT_EQ(walk_lengths(gen_cycle(4)), (std::vector<std::size_t>{4, 4}));
  Embedding k4 = gen_wheel(3);
  EXPECT_EQ(walk_lengths(k4), (std::vector<std::size_t>{3, 3, 3, 3}));
}

TEST(Faces, EveryDartOnExactlyOneWalk) {
  for (const auto& inst : corpus()) {
    FaceTable t = face_table(inst.g);
    std::vector<int> seen(inst.g.num_darts(), 0);
    for (std::size_t i = 0; i < t.walks.size(); ++i) {
      const auto& darts = t.walks[i].darts;
      for (std::size_t j = 0; j < darts.size(); ++j) {
        ++seen[static_cast<std::size_t>(darts[j])];
        EXPECT_EQ(inst.g.face_next(darts[j]), darts[(j + 1) % darts.size()]);
        EXPECT_EQ(t.face_of[static_cast<std::size_t>(darts[j])], static_cast<std::int32_t>(i));
      }
    }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; })) << inst.name;
  }
}

TEST(AddEdge, SquareChordMakesTwoTriangles) {
  Embedding c4 = gen_cycle(4);
  auto inner = inner_walks(c4);
  ASSERT_EQ(inner.size(), 1u);
  Embedding g = add_edge_in_face(c4, vx(c4, 0), vx(c4, 2), inner[0]);
  EXPECT_EQ(walk_lengths(g), (std::vector<std::size_t>{3, 3, 4}));
  for (const FaceWalk& w : inner_walks(g)) EXPECT_EQ(w.darts.size(), 3u);
}

TEST(AddEdge, HexagonChordMakesTwoQuadrilaterals) {
  Embedding c6 = gen_cycle(6);
  Embedding g = add_edge_in_face(c6, vx(c6, 1), vx(c6, 4), inner_walks(c6)[0]);
  auto inner = inner_walks(g);
  ASSERT_EQ(inner.size(), 2u);
  EXPECT_EQ(inner[0].darts.size(), 4u);
  EXPECT_EQ(inner[1].darts.size(), 4u);
}

TEST(AddEdge, Errors) {
  Embedding t = triangle();
  FaceWalk f = trace_faces(t)[0];
  EXPECT_EQ(error_of([&] { add_edge_in_face(t, vx(t, 0), vx(t, 1), f); }), ErrorCode::kEdgeExists);
  EXPECT_EQ(error_of([&] { add_edge_in_face(t, vx(t, 0), vx(t, 0), f); }), ErrorCode::kSameVertex);
  Embedding c6 = gen_cycle(6);
  Embedding g = add_edge_in_face(c6, vx(c6, 1), vx(c6, 4), inner_walks(c6)[0]);
  for (const FaceWalk& w : inner_walks(g)) {
    bool has5 = false;
    for (Dart d : w.darts) has5 = has5 || g.label(g.origin(d)) == 5;
    if (!has5) {
      EXPECT_EQ(error_of([&] { add_edge_in_face(g, vx(g, 2), vx(g, 5), w); }), ErrorCode::kNotOnFace);
    }
  }
}

TEST(RemoveVertices, K4OuterTriangleLeavesCenter) {
  Embedding k4 = gen_wheel(3);
  std::vector<Vertex> outer{vx(k4, 0), vx(k4, 1), vx(k4, 2)};
  Embedding rest = remove_vertices(k4, outer);
  ASSERT_EQ(rest.num_vertices(), 1u);
  EXPECT_EQ(rest.label(0), 3);
  EXPECT_EQ(rest.num_edges(), 0u);
  EXPECT_EQ(testing::outer_labels(rest), (std::vector<Label>{3}));
}

TEST(RemoveVertices, NestedTrianglesLeaveInnerTriangle) {
  Embedding t2 = gen_nested_triangles(2);
  std::vector<Vertex> outer{vx(t2, 3), vx(t2, 4), vx(t2, 5)};
  Embedding rest = remove_vertices(t2, outer);
  EXPECT_EQ(rest.num_vertices(), 3u);
  EXPECT_EQ(rest.num_edges(), 3u);
  auto faces = trace_faces(rest);
  ASSERT_EQ(faces.size(), 2u);
  EXPECT_EQ(testing::outer_labels(rest), (std::vector<Label>{0, 1, 2}));
}

TEST(RemoveVertices, InteriorVertexRejected) {
  Embedding k4 = gen_wheel(3);
  std::vector<Vertex> hub{vx(k4, 3)};
  EXPECT_EQ(error_of([&] { remove_vertices(k4, hub); }), ErrorCode::kNotOnOuterFace);
}

TEST(Dual, TriangleK4AndBridge) {
  DualGraph t = dual_graph(triangle());
  EXPECT_EQ(t.num_nodes, 2u);
  ASSERT_EQ(t.edges.size(), 3u);
  for (const DualEdge& e : t.edges) EXPECT_NE(e.a, e.b);

  DualGraph k4 = dual_graph(gen_wheel(3));
  EXPECT_EQ(k4.num_nodes, 4u);
  ASSERT_EQ(k4.edges.size(), 6u);
  std::vector<int> deg(4, 0);
  for (const DualEdge& e : k4.edges) {
    ++deg[static_cast<std::size_t>(e.a)];
    ++deg[static_cast<std::size_t>(e.b)];
  }
  EXPECT_EQ(deg, (std::vector<int>{3, 3, 3, 3}));

  DualGraph bridge = dual_graph(parse_epg("epg 1\nv 0: 1\nv 1: 0\nouter 0 1\n"));
  EXPECT_EQ(bridge.num_nodes, 1u);
  ASSERT_EQ(bridge.edges.size(), 1u);
  EXPECT_EQ(bridge.edges[0].a, bridge.edges[0].b);

  EXPECT_EQ(error_of([] { dual_graph(testing::two_triangles()); }), ErrorCode::kDisconnected);
}

TEST(Shape, DiskAndTriangulationChecks) {
  Embedding k4m = gen_k4_minus_edge();
  EXPECT_TRUE(is_triangulated_disk(k4m));
  EXPECT_FALSE(is_triangulation(k4m));
  Embedding k4 = gen_wheel(3);
  EXPECT_TRUE(is_triangulated_disk(k4));
  EXPECT_TRUE(is_triangulation(k4));
  EXPECT_FALSE(is_triangulated_disk(gen_cycle(5)));
  EXPECT_FALSE(is_triangulated_disk(testing::bowtie()));
  EXPECT_FALSE(is_triangulated_disk(testing::pendant_outside()));
  EXPECT_FALSE(is_triangulated_disk(testing::two_triangles()));
}

TEST(OuterFace, WithOuterFaceMovesTheOuterWalk) {
  Embedding k4 = gen_wheel(3);
  Embedding moved = with_outer_face(k4, dart(k4, 0, 3));
  auto outer = testing::outer_labels(moved);
  EXPECT_EQ(outer.size(), 3u);
  EXPECT_TRUE(std::find(outer.begin(), outer.end(), 3) != outer.end());
  EXPECT_EQ(error_of([] {
              Embedding g = testing::two_triangles();
              with_outer_face(g, 0);
            }),
            ErrorCode::kDisconnected);
}

}  // namespace
}  // namespace onionpeel
