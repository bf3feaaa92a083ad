// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "onionpeel/embedding.hpp"
#include "onionpeel/peel.hpp"

namespace onionpeel {

enum class Stage { kSaturate, kConnect, kOuterCut, kInnerCut, kEar, kApex };

std::string_view stage_name(Stage s);

struct TracedEdge {
  Label u = 0;
  Label v = 0;
  Stage stage = Stage::kSaturate;
};

/// Audit trail of a conversion: the edges added, in insertion order.
struct DiskConversionTrace {
  std::vector<TracedEdge> added;
};

// Individual stages. Each only adds edges.
Embedding connect_components(const Embedding& g);
Embedding repair_outer_cut_vertices(const Embedding& g);
Embedding repair_inner_cut_vertices(const Embedding& g);
Embedding triangulate_inner_faces(const Embedding& g);

struct DiskConversion {
  Embedding disk;
  DiskConversionTrace trace;
  RootedForest forest;  // built right after saturation, valid for `disk`
};

/// saturate -> connect -> outer repair -> inner repair -> ears. The result is a
/// triangulated disk with the same outer vertex set and no more peels.
/// Throws TooSmall for fewer than three vertices.
DiskConversion convert_to_disk(const Embedding& g);
std::pair<Embedding, DiskConversionTrace> to_triangulated_disk(const Embedding& g);

/// Disk conversion followed by the apex fan from an outer vertex with exactly
/// two outer neighbors. At most one more peel than the input.
std::pair<Embedding, DiskConversionTrace> to_full_triangulation(const Embedding& g);

}  // namespace onionpeel
