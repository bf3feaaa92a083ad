// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "onionpeel/embedding.hpp"

namespace onionpeel {

// A face corner: the vertex together with the face dart entering it. `in` is
// kNoDart only for isolated vertices.
struct Corner {
  Vertex vertex = kNoVertex;
  Dart in = kNoDart;
};

/// Mutable working copy used by the pipelines. Edges are only ever added, so
/// dart ids stay valid for the lifetime of the editor.
class EmbeddingEditor {
 public:
  explicit EmbeddingEditor(Embedding g) : g_(std::move(g)) {}

  const Embedding& view() const { return g_; }

  /// Adds edge (a.vertex, b.vertex) inside the face(s) the corners belong to.
  /// The new dart a->b follows twin(a.in) in rotation(a); likewise at b.
  /// Returns the new dart a->b.
  Dart insert_edge(Corner a, Corner b);

  void add_outer_dart(Dart d) { g_.outer_.push_back(d); }
  void set_outer_darts(std::vector<Dart> darts) { g_.outer_ = std::move(darts); }

  /// Canonicalizes rotations and outer darts, checks Euler per component.
  Embedding finish() &&;

 private:
  Embedding g_;
};

namespace detail {

// Builds an embedding from raw per-vertex neighbor lists given in dense
// index order without symmetric-adjacency validation. Used by oracles that
// enumerate rotation systems. Throws EulerViolation if not genus 0.
Embedding embedding_from_rotations(std::vector<Label> labels,
                                   const std::vector<std::vector<Vertex>>& rotations,
                                   std::pair<Vertex, Vertex> outer);

}  // namespace detail

}  // namespace onionpeel
