// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "onionpeel/detail/editor.hpp"
#include "onionpeel/embedding.hpp"

namespace onionpeel {

/// Onion peels L_1..L_k of a fixed embedding, as vertex indices of that
/// embedding.
struct PeelDecomposition {
  std::vector<std::vector<Vertex>> layers;
  std::vector<int> layer_of;  // 1-based layer per vertex

  int k() const { return static_cast<int>(layers.size()); }
};

PeelDecomposition onion_peels(const Embedding& g);

struct InwardWitness {
  Vertex vertex = kNoVertex;
  int layer = 0;
  std::optional<int> face;  // index into trace_faces(g); empty would refute the property
};

/// For every vertex of layer i > 1, the first incident face (in face-table
/// order) that contains a vertex of layer i - 1.
std::vector<InwardWitness> check_inward_face(const Embedding& g, const PeelDecomposition& peels);

/// Fans every inner face from its vertex in the outermost layer (ties: smaller
/// id, then earlier occurrence) so that each vertex of L_i, i > 1, gains a
/// neighbor in L_{i-1}.
Embedding saturate_inward_neighbors(const Embedding& g);

/// Outer-face-rooted spanning forest; roots are the outer vertices.
struct RootedForest {
  std::vector<Vertex> parent;  // kNoVertex for roots
  std::vector<int> depth;
  std::vector<Vertex> roots;

  int height() const;
  Vertex root_of(Vertex v) const;
  std::vector<Vertex> path_to_root(Vertex v) const;
};

/// Multi-source BFS from all outer vertices; each vertex adopts its
/// smallest-id neighbor one level up. Throws UnreachableVertex.
RootedForest build_rooted_forest(const Embedding& g);

/// Parents are neighbors one level up, roots are exactly the outer vertices
/// at depth 0. Throws InvalidForest.
void validate_forest(const Embedding& g, const RootedForest& forest);

struct ForestBound {
  int k = 0;
  int height = 0;
};

/// validate_forest, then k <= height + 1 and
/// every depth-i vertex in L_1..L_{i+1} (BoundViolated).
ForestBound verify_forest_bound(const Embedding& g, const RootedForest& forest);

namespace detail {

struct AddedEdge {
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;
};

// Saturation on a working copy; peels are those of `original`.
std::vector<AddedEdge> saturate_in_place(EmbeddingEditor& ed, const PeelDecomposition& peels);

}  // namespace detail

}  // namespace onionpeel
