// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#include "onionpeel/generators.hpp"

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "onionpeel/epg.hpp"
#include "onionpeel/oracles.hpp"
#include "onionpeel/peel.hpp"

namespace onionpeel {
namespace {

using testing::error_of;

std::size_t outer_walk_length(const Embedding& g) {
  for (const FaceWalk& w : trace_faces(g)) {
    if (w.is_outer) return w.darts.size();
  }
  return 0;
}

TEST(Nested, Counts) {
  EXPECT_EQ(gen_nested_triangles(1), gen_cycle(3));
  Embedding t2 = gen_nested_triangles(2);
  EXPECT_TRUE(is_triangulation(t2));
  for (int i = 1; i <= 6; ++i) {
    Embedding t = gen_nested_triangles(i);
    EXPECT_EQ(t.num_vertices(), static_cast<std::size_t>(3 * i));
    EXPECT_EQ(onion_peels(t).k(), i);
    EXPECT_TRUE(is_triangulated_disk(t));
  }
}

TEST(Counterexample, Counts) {
  for (int k = 2; k <= 6; ++k) {
    Embedding g = gen_counterexample(k);
    EXPECT_EQ(g.num_vertices(), static_cast<std::size_t>(12 * k));
    EXPECT_TRUE(is_triangulated_disk(g));
    EXPECT_EQ(onion_peels(g).k(), k);
    EXPECT_EQ(outer_walk_length(g), 8u);
  }
}

TEST(Counterexample, ThreeConnected) {
  for (int k = 2; k <= 4; ++k) EXPECT_TRUE(is_three_connected(underlying_graph(gen_counterexample(k)))) << k;
}

TEST(Small, Families) {
  Embedding k4m = gen_k4_minus_edge();
  EXPECT_EQ(onion_peels(k4m).k(), 1);
  EXPECT_TRUE(is_triangulated_disk(k4m));
  EXPECT_EQ(onion_peels(gen_cycle(4)).k(), 1);
  EXPECT_EQ(onion_peels(gen_wheel(5)).k(), 2);
  EXPECT_EQ(gen_wheel(5).num_vertices(), 6u);
  EXPECT_EQ(gen_path(4).num_edges(), 3u);
}

TEST(Random, Examples) {
  Embedding ring = gen_random_kouter(1, 5, 42);
  EXPECT_EQ(onion_peels(ring).k(), 1);
  EXPECT_EQ(outer_walk_length(ring), 5u);

  EXPECT_EQ(write_epg(gen_random_kouter(3, 4, 7)), write_epg(gen_random_kouter(3, 4, 7)));
  EXPECT_LE(onion_peels(gen_random_kouter(2, 6, 1)).k(), 2);
}

TEST(Random, PeelsAtMostKAcrossSeeds) {
  for (int k = 1; k <= 6; ++k) {
    for (int w = 3; w <= 8; ++w) {
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Embedding g = gen_random_kouter(k, w, seed);
        EXPECT_EQ(g.num_vertices(), static_cast<std::size_t>(k * w));
        EXPECT_LE(onion_peels(g).k(), k) << k << " " << w << " " << seed;
      }
    }
  }
}

TEST(Random, SeedsDiffer) {
  EXPECT_NE(write_epg(gen_random_kouter(3, 6, 1)), write_epg(gen_random_kouter(3, 6, 2)));
}

TEST(Generate, DispatchAndErrors) {
  for (const char* name : {"nested", "counterexample", "cycle", "wheel", "path", "k4minus", "random"}) {
    EXPECT_EQ(family_name(parse_family(name)), name);
  }
  EXPECT_EQ(generate({Family::kWheel, 4, 4, 0}), gen_wheel(4));
  EXPECT_EQ(generate({Family::kRandomKOuter, 2, 5, 9}), gen_random_kouter(2, 5, 9));
  EXPECT_EQ(error_of([] { parse_family("grid"); }), ErrorCode::kBadParameter);
  EXPECT_EQ(error_of([] { gen_nested_triangles(0); }), ErrorCode::kBadParameter);
  EXPECT_EQ(error_of([] { gen_counterexample(1); }), ErrorCode::kBadParameter);
  EXPECT_EQ(error_of([] { gen_cycle(2); }), ErrorCode::kBadParameter);
  EXPECT_EQ(error_of([] { gen_wheel(2); }), ErrorCode::kBadParameter);
  EXPECT_EQ(error_of([] { gen_path(1); }), ErrorCode::kBadParameter);
  EXPECT_EQ(error_of([] { gen_random_kouter(2, 2, 0); }), ErrorCode::kBadParameter);
}

TEST(FromFaces, RejectsInconsistentFaces) {
  EXPECT_EQ(error_of([] { embedding_from_faces({0, 1, 2}, {{0, 1, 2}, {0, 1, 2}}, {0, 1}); }), ErrorCode::kInternal);
}

}  // namespace
}  // namespace onionpeel
