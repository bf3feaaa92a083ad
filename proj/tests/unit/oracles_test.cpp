// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#include "onionpeel/oracles.hpp"

#include <gtest/gtest.h>

#include <set>

#include "corpus.hpp"
#include "onionpeel/branch.hpp"
#include "onionpeel/epg.hpp"
#include "onionpeel/generators.hpp"
#include "onionpeel/peel.hpp"

namespace onionpeel {
namespace {

using testing::corpus;
using testing::error_of;

SimpleGraph complete(int n) {
  SimpleGraph g;
  for (int i = 0; i < n; ++i) g.labels.push_back(i);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
  }
  return g;
}

SimpleGraph k33() {
  SimpleGraph g;
  for (int i = 0; i < 6; ++i) g.labels.push_back(i);
  for (int i = 0; i < 3; ++i) {
    for (int j = 3; j < 6; ++j) g.edges.emplace_back(i, j);
  }
  return g;
}

FaceWalk outer_walk(const Embedding& g) {
  for (const FaceWalk& w : trace_faces(g)) {
    if (w.is_outer) return w;
  }
  return {};
}

TEST(Branchwidth, SmallGraphs) {
  EXPECT_EQ(brute_branchwidth(complete(3)), 2);
  EXPECT_EQ(brute_branchwidth(complete(4)), 3);
  EXPECT_EQ(brute_branchwidth(complete(2)), 0);
  EXPECT_EQ(brute_branchwidth(underlying_graph(gen_cycle(5))), 2);
  EXPECT_EQ(brute_branchwidth(underlying_graph(gen_path(3))), 1);
  // An inner edge of a path sees both endpoints on the other side.
  EXPECT_EQ(brute_branchwidth(underlying_graph(gen_path(5))), 2);
  EXPECT_EQ(brute_branchwidth(underlying_graph(testing::star(4))), 1);
  EXPECT_EQ(brute_branchwidth(k33()), 3);
  EXPECT_EQ(error_of([] { brute_branchwidth(complete(5)); }), ErrorCode::kBudgetExceeded);
  OracleBudget wide;
  wide.max_edges = 10;
  EXPECT_EQ(brute_branchwidth(complete(5), wide), 4);
}

TEST(Outerplanarity, SmallGraphs) {
  EXPECT_EQ(brute_outerplanarity(underlying_graph(gen_cycle(4))), 1);
  EXPECT_EQ(brute_outerplanarity(complete(4)), 2);
  EXPECT_EQ(error_of([] { brute_outerplanarity(complete(5)); }), ErrorCode::kNotPlanar);
  EXPECT_EQ(error_of([] { brute_outerplanarity(k33()); }), ErrorCode::kNotPlanar);
  EXPECT_EQ(brute_outerplanarity(underlying_graph(gen_wheel(6))), 2);
  EXPECT_EQ(brute_outerplanarity(underlying_graph(gen_nested_triangles(2))), 2);
  EXPECT_EQ(brute_outerplanarity(underlying_graph(gen_k4_minus_edge())), 1);
  EXPECT_EQ(brute_outerplanarity(underlying_graph(testing::two_triangles())), 1);
  EXPECT_EQ(error_of([] { brute_outerplanarity(underlying_graph(gen_nested_triangles(3))); }),
            ErrorCode::kBudgetExceeded);
}

TEST(RadialPeels, FixedEmbeddings) {
  Embedding k4 = gen_wheel(3);
  EXPECT_EQ(radial_peel_count(k4, outer_walk(k4)), 2);
  EXPECT_EQ(min_peels_over_faces(k4), 2);
  Embedding c4 = gen_cycle(4);
  EXPECT_EQ(radial_peel_count(c4, outer_walk(c4)), 1);
  // Every face of the octahedron leaves the opposite triangle as a second peel.
  EXPECT_EQ(min_peels_over_faces(gen_nested_triangles(2)), 2);
  // Putting a rim triangle outside the wheel keeps two peels.
  EXPECT_EQ(min_peels_over_faces(gen_wheel(6)), 2);
  EXPECT_EQ(error_of([] {
              Embedding g = testing::two_triangles();
              min_peels_over_faces(g);
            }),
            ErrorCode::kDisconnected);
}

TEST(Catalan, Values) {
  const std::uint64_t expect[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 0; n < 8; ++n) EXPECT_EQ(catalan(n), expect[n]) << n;
}

TEST(FaceTriangulations, Counts) {
  Embedding w4 = gen_wheel(4);
  auto squares = enumerate_face_triangulations(w4, outer_walk(w4));
  ASSERT_EQ(squares.size(), 2u);
  EXPECT_FALSE(squares[0] == squares[1]);
  for (const Embedding& t : squares) EXPECT_TRUE(is_triangulation(t));

  Embedding k4 = gen_wheel(3);
  auto same = enumerate_face_triangulations(k4, outer_walk(k4));
  ASSERT_EQ(same.size(), 1u);
  EXPECT_EQ(same[0], k4);

  Embedding g2 = gen_counterexample(2);
  std::size_t n = 0;
  std::set<std::string> distinct;
  for_each_face_triangulation(g2, outer_walk(g2), {}, [&](const Embedding& t) {
    ++n;
    EXPECT_TRUE(is_triangulation(t));
    distinct.insert(write_epg(t));
  });
  EXPECT_EQ(n, catalan(6));
  EXPECT_EQ(distinct.size(), n);
}

TEST(FaceTriangulations, Errors) {
  Embedding c5 = gen_cycle(5);
  EXPECT_EQ(error_of([&] { enumerate_face_triangulations(c5, outer_walk(c5)); }), ErrorCode::kBadParameter);
  Embedding bow = testing::bowtie();
  EXPECT_EQ(error_of([&] { enumerate_face_triangulations(bow, outer_walk(bow)); }), ErrorCode::kFaceNotSimple);
  Embedding g2 = gen_counterexample(2);
  OracleBudget tight;
  tight.max_chord_sets = 10;
  EXPECT_EQ(error_of([&] { enumerate_face_triangulations(g2, outer_walk(g2), tight); }), ErrorCode::kBudgetExceeded);
  Embedding k4 = gen_wheel(3);
  EXPECT_EQ(error_of([&] { enumerate_face_triangulations(k4, outer_walk(gen_wheel(4))); }), ErrorCode::kNotOnFace);
}

TEST(ThreeConnected, SmallGraphs) {
  EXPECT_TRUE(is_three_connected(complete(4)));
  EXPECT_TRUE(is_three_connected(underlying_graph(gen_wheel(5))));
  EXPECT_FALSE(is_three_connected(underlying_graph(gen_cycle(4))));
  EXPECT_FALSE(is_three_connected(underlying_graph(gen_k4_minus_edge())));
  EXPECT_FALSE(is_three_connected(complete(3)));
  EXPECT_FALSE(is_three_connected(underlying_graph(testing::two_triangles())));
}

TEST(Theorem1, SmallK) {
  Theorem1Report k1 = certify_theorem1(1);
  EXPECT_EQ(k1.vertices, 4);
  EXPECT_EQ(k1.triangulations, 1u);
  EXPECT_EQ(k1.min_outerplanarity, 2);
  EXPECT_TRUE(k1.holds);

  Theorem1Report k2 = certify_theorem1(2, {}, 2);
  EXPECT_EQ(k2.vertices, 24);
  EXPECT_TRUE(k2.three_connected);
  EXPECT_EQ(k2.triangulations, 132u);
  EXPECT_EQ(k2.min_outerplanarity, 3);
  EXPECT_TRUE(k2.holds);

  EXPECT_EQ(error_of([] { certify_theorem1(0); }), ErrorCode::kBadParameter);
}

TEST(Theorem1, ThreadCountDoesNotChangeTheResult) {
  Theorem1Report one = certify_theorem1(2, {}, 1);
  Theorem1Report four = certify_theorem1(2, {}, 4);
  EXPECT_EQ(one.min_outerplanarity, four.min_outerplanarity);
  EXPECT_EQ(one.triangulations, four.triangulations);
  EXPECT_EQ(oracle_threads(3), 3);
}

TEST(Sandwich, BranchwidthOnSmallCorpusGraphs) {
  int checked = 0;
  for (const auto& inst : corpus()) {
    if (inst.g.num_edges() > 9) continue;
    const int bw = brute_branchwidth(underlying_graph(inst.g));
    PipelineResult r = decompose(inst.g);
    const int k = onion_peels(inst.g).k();
    EXPECT_LE(bw, r.bd.width) << inst.name;
    EXPECT_LE(r.bd.width, 2 * k) << inst.name;
    if (r.disk.num_edges() <= 9) {
      EXPECT_LE(brute_branchwidth(underlying_graph(r.disk)), r.bd.width) << inst.name;
    }
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

TEST(Sandwich, OuterplanarityOnSmallCorpusGraphs) {
  int checked = 0;
  for (const auto& inst : corpus()) {
    if (inst.g.num_vertices() > 7) continue;
    EXPECT_LE(brute_outerplanarity(underlying_graph(inst.g)), onion_peels(inst.g).k()) << inst.name;
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

}  // namespace
}  // namespace onionpeel
