// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace onionpeel {

// Dense vertex index into one Embedding. Indices are ordered like labels, so
// "smallest id" tie-breaks can compare indices directly.
using Vertex = std::int32_t;
// Half-edge index. Darts 2e and 2e+1 are the two directions of edge e.
using Dart = std::int32_t;
// User-facing vertex id, stable across surgery.
using Label = std::int64_t;

inline constexpr Dart kNoDart = -1;
inline constexpr Vertex kNoVertex = -1;

// A face boundary. darts[i+1] == face_next(darts[i]) cyclically; the walk
// starts at its canonical (smallest (origin, target) label pair) dart.
struct FaceWalk {
  std::vector<Dart> darts;
  bool is_outer = false;
};

// Label-level description of an embedding, the input of Embedding::build and
// the output of Embedding::to_spec.
struct RotationSpec {
  std::vector<Label> vertices;
  std::map<Label, std::vector<Label>> rotation;
  std::vector<std::pair<Label, Label>> outer_darts;
};

class Embedding;
class EmbeddingEditor;
Embedding remove_vertices(const Embedding& g, std::span<const Vertex> removed);

/// Rotation-system embedding of a simple planar graph. Every connected
/// component lies in the outer region and carries one designated outer dart;
/// isolated vertices count as lying on the outer face.
///
/// Face rule: face_next(u->v) = (v->w) where w follows u in rotation(v).
///
/// Values are immutable; surgery returns new embeddings.
class Embedding {
 public:
  Embedding() = default;

  /// Validates eagerly: UnknownVertex, SelfLoop, ParallelEdge,
  /// AsymmetricAdjacency, BadOuterDart, EulerViolation, NestedComponent.
  static Embedding build(const RotationSpec& spec);

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return origin_.size() / 2; }
  std::size_t num_darts() const { return origin_.size(); }

  Label label(Vertex v) const { return labels_[static_cast<std::size_t>(v)]; }
  std::span<const Label> labels() const { return labels_; }
  std::optional<Vertex> vertex_of(Label label) const;

  static Dart twin(Dart d) { return d ^ 1; }
  Vertex origin(Dart d) const { return origin_[static_cast<std::size_t>(d)]; }
  Vertex target(Dart d) const { return origin_[static_cast<std::size_t>(twin(d))]; }

  std::span<const Dart> rotation(Vertex v) const { return rot_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return rot_[static_cast<std::size_t>(v)].size(); }
  Dart rot_next(Dart d) const;
  Dart rot_prev(Dart d) const;
  Dart face_next(Dart d) const { return rot_next(twin(d)); }
  Dart face_prev(Dart d) const { return twin(rot_prev(d)); }

  std::optional<Dart> find_dart(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return find_dart(u, v).has_value(); }

  /// One canonical dart per component that has edges, sorted by dart key.
  std::span<const Dart> outer_darts() const { return outer_; }

  std::pair<Label, Label> dart_key(Dart d) const { return {label(origin(d)), label(target(d))}; }
  bool dart_less(Dart a, Dart b) const { return dart_key(a) < dart_key(b); }

  RotationSpec to_spec() const;

  /// Structural equality on labels: same vertices, same rotations, same
  /// outer darts. Internal dart numbering is ignored.
  bool operator==(const Embedding& other) const;

 private:
  friend class EmbeddingEditor;
  friend Embedding remove_vertices(const Embedding& g, std::span<const Vertex> removed);

  std::vector<Label> labels_;
  std::vector<std::vector<Dart>> rot_;
  std::vector<Vertex> origin_;
  std::vector<std::int32_t> pos_;
  std::vector<Dart> outer_;
};

struct FaceTable {
  std::vector<FaceWalk> walks;
  std::vector<std::int32_t> face_of;  // dart -> index into walks
};

std::vector<FaceWalk> trace_faces(const Embedding& g);
FaceTable face_table(const Embedding& g);

/// Component id per vertex; ids are numbered by smallest vertex.
std::vector<std::int32_t> component_ids(const Embedding& g, std::size_t* count = nullptr);
std::size_t num_components(const Embedding& g);

/// Number of faces of the plane drawing (all outer walks count as one face).
std::size_t plane_face_count(const Embedding& g);

/// Vertices on an outer walk plus isolated vertices, ascending.
std::vector<Vertex> outer_vertices(const Embedding& g);
std::vector<bool> outer_vertex_mask(const Embedding& g);

/// Splits face `f` by the edge (u, v). `u_pos` / `v_pos` select the
/// occurrence (index into f.darts, occurrence i being origin(f.darts[i]));
/// the first occurrence is used when omitted. An isolated vertex counts as
/// lying on every outer face.
Embedding add_edge_in_face(const Embedding& g, Vertex u, Vertex v, const FaceWalk& f,
                           std::optional<std::size_t> u_pos = std::nullopt,
                           std::optional<std::size_t> v_pos = std::nullopt);

/// Deletes outer-face vertices. A surviving face is outer iff one of its darts
/// bounded the old outer face or an old face incident to a removed vertex.
Embedding remove_vertices(const Embedding& g, std::span<const Vertex> removed);

/// Re-designates the outer face of a connected embedding.
Embedding with_outer_face(const Embedding& g, Dart outer);

struct DualEdge {
  std::int32_t a = 0;  // face on the side of `primal`
  std::int32_t b = 0;  // face on the side of twin(primal)
  Dart primal = kNoDart;
};

struct DualGraph {
  std::size_t num_nodes = 0;  // == trace_faces(g).size()
  std::vector<DualEdge> edges;
};

/// One node per face walk, one edge per primal edge. Throws Disconnected.
DualGraph dual_graph(const Embedding& g);

bool is_triangulated_disk(const Embedding& g);
bool is_triangulation(const Embedding& g);

}  // namespace onionpeel
