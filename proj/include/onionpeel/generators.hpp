// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "onionpeel/embedding.hpp"

namespace onionpeel {

enum class Family { kNestedTriangles, kCounterexample, kCycle, kWheel, kPath, kK4MinusEdge, kRandomKOuter };

struct GadgetSpec {
  Family family = Family::kCycle;
  int parameter = 3;
  int width = 4;           // random family only
  std::uint64_t seed = 0;  // random family only
};

/// Parses "nested", "counterexample", "cycle", "wheel", "path", "k4minus",
/// "random". Throws BadParameter.
Family parse_family(std::string_view name);
std::string_view family_name(Family f);

Embedding generate(const GadgetSpec& spec);

/// i nested triangles t_1 (labels 0..2, innermost) .. t_i (outer face), each
/// consecutive pair joined by a 6-cycle alternating between them.
Embedding gen_nested_triangles(int i);

/// Four copies of T_k around a central region, 12k vertices, outer 8-cycle.
/// Copy c uses labels 3kc .. 3kc+3k-1; its outer triangle is (r, p, q) =
/// labels 3kc+3k-3, 3kc+3k-2, 3kc+3k-1.
Embedding gen_counterexample(int k);

Embedding gen_k4_minus_edge();
Embedding gen_cycle(int n);
/// Rim 0..n-1, hub n.
Embedding gen_wheel(int n);
Embedding gen_path(int n);

/// k nested `width`-cycles joined by random planar ladders between
/// consecutive rings, random fan chords inside the innermost ring.
Embedding gen_random_kouter(int k, int width, std::uint64_t seed);

/// Builds an embedding from its oriented face boundaries (every dart exactly
/// once). `outer` names a dart of the outer face.
Embedding embedding_from_faces(const std::vector<Label>& vertices, const std::vector<std::vector<Label>>& faces,
                               std::pair<Label, Label> outer);

}  // namespace onionpeel
