// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#include "onionpeel/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "onionpeel/detail/editor.hpp"
#include "onionpeel/error.hpp"

namespace onionpeel {

namespace {

std::string label_str(const Embedding& g, Vertex v) { return std::to_string(g.label(v)); }

}  // namespace

std::optional<Vertex> Embedding::vertex_of(Label label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

Dart Embedding::rot_next(Dart d) const {
  const auto& r = rot_[static_cast<std::size_t>(origin(d))];
  auto p = static_cast<std::size_t>(pos_[static_cast<std::size_t>(d)]);
  return r[(p + 1) % r.size()];
}

Dart Embedding::rot_prev(Dart d) const {
  const auto& r = rot_[static_cast<std::size_t>(origin(d))];
  auto p = static_cast<std::size_t>(pos_[static_cast<std::size_t>(d)]);
  return r[(p + r.size() - 1) % r.size()];
}

std::optional<Dart> Embedding::find_dart(Vertex u, Vertex v) const {
  for (Dart d : rot_[static_cast<std::size_t>(u)]) {
    if (target(d) == v) return d;
  }
  return std::nullopt;
}

RotationSpec Embedding::to_spec() const {
  RotationSpec spec;
  spec.vertices = labels_;
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    auto& row = spec.rotation[labels_[v]];
    for (Dart d : rot_[v]) row.push_back(label(target(d)));
  }
  for (Dart d : outer_) spec.outer_darts.push_back(dart_key(d));
  return spec;
}

bool Embedding::operator==(const Embedding& other) const {
  if (labels_ != other.labels_ || outer_.size() != other.outer_.size()) return false;
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (rot_[v].size() != other.rot_[v].size()) return false;
    for (std::size_t i = 0; i < rot_[v].size(); ++i) {
      if (target(rot_[v][i]) != other.target(other.rot_[v][i])) return false;
    }
  }
  for (std::size_t i = 0; i < outer_.size(); ++i) {
    if (dart_key(outer_[i]) != other.dart_key(other.outer_[i])) return false;
  }
  return true;
}

Embedding Embedding::build(const RotationSpec& spec) {
  Embedding g;
  g.labels_ = spec.vertices;
  std::sort(g.labels_.begin(), g.labels_.end());
  if (std::adjacent_find(g.labels_.begin(), g.labels_.end()) != g.labels_.end()) {
    fail(ErrorCode::kParseError, "duplicate vertex declaration");
  }
  const std::size_t n = g.labels_.size();
  std::vector<std::vector<Vertex>> nbrs(n);
  for (const auto& [lbl, row] : spec.rotation) {
    auto u = g.vertex_of(lbl);
    if (!u) fail(ErrorCode::kUnknownVertex, "rotation given for undeclared vertex " + std::to_string(lbl));
    auto& out = nbrs[static_cast<std::size_t>(*u)];
    for (Label nl : row) {
      auto v = g.vertex_of(nl);
      if (!v) fail(ErrorCode::kUnknownVertex, "vertex " + std::to_string(lbl) + " lists undeclared neighbor " + std::to_string(nl));
      if (*v == *u) fail(ErrorCode::kSelfLoop, "loop at vertex " + std::to_string(lbl));
      out.push_back(*v);
    }
    std::vector<Vertex> sorted = out;
    std::sort(sorted.begin(), sorted.end());
    if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end()) {
      fail(ErrorCode::kParallelEdge, "vertex " + std::to_string(lbl) + " lists neighbor " +
                                         std::to_string(g.labels_[static_cast<std::size_t>(*it)]) + " twice");
    }
  }

  // Sorted neighbor copies give symmetric lookups and the dart numbering.
  std::vector<std::vector<Vertex>> sorted_nbrs = nbrs;
  for (auto& row : sorted_nbrs) std::sort(row.begin(), row.end());
  auto lookup = [&](Vertex u, Vertex v) {
    const auto& row = sorted_nbrs[static_cast<std::size_t>(u)];
    return std::binary_search(row.begin(), row.end(), v);
  };
  for (std::size_t u = 0; u < n; ++u) {
    for (Vertex v : nbrs[u]) {
      if (!lookup(v, static_cast<Vertex>(u))) {
        fail(ErrorCode::kAsymmetricAdjacency, "vertex " + std::to_string(g.labels_[u]) + " lists " +
                                                  std::to_string(g.labels_[static_cast<std::size_t>(v)]) +
                                                  " but not vice versa");
      }
    }
  }

  // dart_at[u][i] is the dart u -> sorted_nbrs[u][i].
  std::vector<std::vector<Dart>> dart_at(n);
  for (std::size_t u = 0; u < n; ++u) dart_at[u].assign(sorted_nbrs[u].size(), kNoDart);
  auto index_in = [&](Vertex u, Vertex v) {
    const auto& row = sorted_nbrs[static_cast<std::size_t>(u)];
    return static_cast<std::size_t>(std::lower_bound(row.begin(), row.end(), v) - row.begin());
  };
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t i = 0; i < sorted_nbrs[u].size(); ++i) {
      Vertex v = sorted_nbrs[u][i];
      if (static_cast<std::size_t>(v) < u) continue;
      auto d = static_cast<Dart>(g.origin_.size());
      g.origin_.push_back(static_cast<Vertex>(u));
      g.origin_.push_back(v);
      dart_at[u][i] = d;
      dart_at[static_cast<std::size_t>(v)][index_in(v, static_cast<Vertex>(u))] = twin(d);
    }
  }
  g.rot_.resize(n);
  g.pos_.assign(g.origin_.size(), 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (Vertex v : nbrs[u]) g.rot_[u].push_back(dart_at[u][index_in(static_cast<Vertex>(u), v)]);
  }
  for (const auto& [a, b] : spec.outer_darts) {
    auto u = g.vertex_of(a);
    auto v = g.vertex_of(b);
    if (!u || !v || !lookup(*u, *v)) {
      fail(ErrorCode::kBadOuterDart, "outer dart " + std::to_string(a) + " " + std::to_string(b) + " is not an edge");
    }
    g.outer_.push_back(dart_at[static_cast<std::size_t>(*u)][index_in(*u, *v)]);
  }
  return EmbeddingEditor(std::move(g)).finish();
}

FaceTable face_table(const Embedding& g) {
  const std::size_t m = g.num_darts();
  FaceTable t;
  t.face_of.assign(m, -1);
  std::vector<char> outer(m, 0);
  for (Dart d : g.outer_darts()) outer[static_cast<std::size_t>(d)] = 1;

  for (std::size_t start = 0; start < m; ++start) {
    if (t.face_of[start] != -1) continue;
    FaceWalk w;
    auto d = static_cast<Dart>(start);
    do {
      if (w.darts.size() > m) fail(ErrorCode::kInternal, "face walk does not close");
      t.face_of[static_cast<std::size_t>(d)] = 0;
      w.darts.push_back(d);
      w.is_outer = w.is_outer || outer[static_cast<std::size_t>(d)] != 0;
      d = g.face_next(d);
    } while (d != static_cast<Dart>(start));
    auto first = std::min_element(w.darts.begin(), w.darts.end(),
                                  [&](Dart a, Dart b) { return g.dart_less(a, b); });
    std::rotate(w.darts.begin(), first, w.darts.end());
    t.walks.push_back(std::move(w));
  }
  std::sort(t.walks.begin(), t.walks.end(),
            [&](const FaceWalk& a, const FaceWalk& b) { return g.dart_less(a.darts[0], b.darts[0]); });
  for (std::size_t i = 0; i < t.walks.size(); ++i) {
    for (Dart d : t.walks[i].darts) t.face_of[static_cast<std::size_t>(d)] = static_cast<std::int32_t>(i);
  }
  return t;
}

std::vector<FaceWalk> trace_faces(const Embedding& g) { return face_table(g).walks; }

std::vector<std::int32_t> component_ids(const Embedding& g, std::size_t* count) {
  const std::size_t n = g.num_vertices();
  std::vector<std::int32_t> comp(n, -1);
  std::int32_t next = 0;
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Dart d : g.rotation(u)) {
        auto v = static_cast<std::size_t>(g.target(d));
        if (comp[v] == -1) {
          comp[v] = next;
          stack.push_back(static_cast<Vertex>(v));
        }
      }
    }
    ++next;
  }
  if (count) *count = static_cast<std::size_t>(next);
  return comp;
}

std::size_t num_components(const Embedding& g) {
  std::size_t c = 0;
  component_ids(g, &c);
  return c;
}

std::size_t plane_face_count(const Embedding& g) {
  std::size_t walks = face_table(g).walks.size();
  std::size_t comps = 0;
  auto comp = component_ids(g, &comps);
  std::vector<char> has_edge(comps, 0);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(static_cast<Vertex>(v)) > 0) has_edge[static_cast<std::size_t>(comp[v])] = 1;
  }
  auto with_edges = static_cast<std::size_t>(std::count(has_edge.begin(), has_edge.end(), 1));
  return with_edges == 0 ? 1 : walks - with_edges + 1;
}

std::vector<bool> outer_vertex_mask(const Embedding& g) {
  std::vector<bool> mask(g.num_vertices(), false);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(static_cast<Vertex>(v)) == 0) mask[v] = true;
  }
  for (const FaceWalk& w : trace_faces(g)) {
    if (!w.is_outer) continue;
    for (Dart d : w.darts) mask[static_cast<std::size_t>(g.origin(d))] = true;
  }
  return mask;
}

std::vector<Vertex> outer_vertices(const Embedding& g) {
  std::vector<Vertex> out;
  auto mask = outer_vertex_mask(g);
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

namespace {

void check_walk(const Embedding& g, const FaceWalk& f) {
  if (f.darts.empty()) fail(ErrorCode::kNotOnFace, "empty face walk");
  for (std::size_t i = 0; i < f.darts.size(); ++i) {
    Dart d = f.darts[i];
    if (d < 0 || static_cast<std::size_t>(d) >= g.num_darts() ||
        g.face_next(d) != f.darts[(i + 1) % f.darts.size()]) {
      fail(ErrorCode::kNotOnFace, "face walk does not belong to this embedding");
    }
  }
}

Corner corner_on(const Embedding& g, Vertex v, const FaceWalk& f, std::optional<std::size_t> pos) {
  if (g.degree(v) == 0) {
    if (!f.is_outer) fail(ErrorCode::kNotOnFace, "isolated vertex " + label_str(g, v) + " is only on the outer face");
    return {v, kNoDart};
  }
  const std::size_t m = f.darts.size();
  if (pos) {
    if (*pos >= m || g.origin(f.darts[*pos]) != v) {
      fail(ErrorCode::kNotOnFace, "vertex " + label_str(g, v) + " does not occur at the given position");
    }
    return {v, f.darts[(*pos + m - 1) % m]};
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (g.origin(f.darts[i]) == v) return {v, f.darts[(i + m - 1) % m]};
  }
  fail(ErrorCode::kNotOnFace, "vertex " + label_str(g, v) + " is not on the face");
}

}  // namespace

Embedding add_edge_in_face(const Embedding& g, Vertex u, Vertex v, const FaceWalk& f,
                           std::optional<std::size_t> u_pos, std::optional<std::size_t> v_pos) {
  check_walk(g, f);
  if (u == v) fail(ErrorCode::kSameVertex, "edge endpoints coincide");
  if (g.adjacent(u, v)) fail(ErrorCode::kEdgeExists, "edge " + label_str(g, u) + " " + label_str(g, v) + " exists");
  Corner cu = corner_on(g, u, f, u_pos);
  Corner cv = corner_on(g, v, f, v_pos);
  const bool joins_isolated = cu.in == kNoDart || cv.in == kNoDart;
  EmbeddingEditor ed(g);
  Dart d = ed.insert_edge(cu, cv);
  if (joins_isolated) ed.add_outer_dart(d);
  return std::move(ed).finish();
}

Embedding remove_vertices(const Embedding& g, std::span<const Vertex> removed) {
  const std::size_t n = g.num_vertices();
  std::vector<char> gone(n, 0);
  auto outer = outer_vertex_mask(g);
  for (Vertex v : removed) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) fail(ErrorCode::kUnknownVertex, "vertex index out of range");
    if (!outer[static_cast<std::size_t>(v)]) {
      fail(ErrorCode::kNotOnOuterFace, "vertex " + label_str(g, v) + " is not on the outer face");
    }
    gone[static_cast<std::size_t>(v)] = 1;
  }

  FaceTable t = face_table(g);
  std::vector<char> merged(t.walks.size(), 0);
  for (std::size_t f = 0; f < t.walks.size(); ++f) {
    bool m = t.walks[f].is_outer;
    for (Dart d : t.walks[f].darts) m = m || gone[static_cast<std::size_t>(g.origin(d))] != 0;
    merged[f] = m ? 1 : 0;
  }

  Embedding r;
  std::vector<Vertex> new_index(n, kNoVertex);
  for (std::size_t v = 0; v < n; ++v) {
    if (gone[v]) continue;
    new_index[v] = static_cast<Vertex>(r.labels_.size());
    r.labels_.push_back(g.label(static_cast<Vertex>(v)));
  }
  std::vector<Dart> new_dart(g.num_darts(), kNoDart);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    auto d = static_cast<Dart>(2 * e);
    Vertex a = new_index[static_cast<std::size_t>(g.origin(d))];
    Vertex b = new_index[static_cast<std::size_t>(g.target(d))];
    if (a == kNoVertex || b == kNoVertex) continue;
    auto nd = static_cast<Dart>(r.origin_.size());
    r.origin_.push_back(a);
    r.origin_.push_back(b);
    new_dart[static_cast<std::size_t>(d)] = nd;
    new_dart[static_cast<std::size_t>(d) + 1] = nd + 1;
  }
  r.rot_.resize(r.labels_.size());
  r.pos_.assign(r.origin_.size(), 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (gone[v]) continue;
    auto& row = r.rot_[static_cast<std::size_t>(new_index[v])];
    for (Dart d : g.rotation(static_cast<Vertex>(v))) {
      if (Dart nd = new_dart[static_cast<std::size_t>(d)]; nd != kNoDart) row.push_back(nd);
    }
  }
  for (std::size_t d = 0; d < g.num_darts(); ++d) {
    if (new_dart[d] != kNoDart && merged[static_cast<std::size_t>(t.face_of[d])]) r.outer_.push_back(new_dart[d]);
  }
  return EmbeddingEditor(std::move(r)).finish();
}

Embedding with_outer_face(const Embedding& g, Dart outer) {
  if (outer < 0 || static_cast<std::size_t>(outer) >= g.num_darts()) fail(ErrorCode::kBadOuterDart, "no such dart");
  if (num_components(g) != 1) fail(ErrorCode::kDisconnected, "outer face can only be moved on a connected embedding");
  EmbeddingEditor ed(g);
  ed.set_outer_darts({outer});
  return std::move(ed).finish();
}

DualGraph dual_graph(const Embedding& g) {
  if (num_components(g) > 1) fail(ErrorCode::kDisconnected, "dual graph needs a connected embedding");
  FaceTable t = face_table(g);
  DualGraph dual;
  dual.num_nodes = t.walks.size();
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    auto d = static_cast<Dart>(2 * e);
    dual.edges.push_back({t.face_of[static_cast<std::size_t>(d)], t.face_of[static_cast<std::size_t>(d) + 1], d});
  }
  return dual;
}

bool is_triangulated_disk(const Embedding& g) {
  if (g.num_vertices() < 3 || num_components(g) != 1) return false;
  std::size_t outer_walks = 0;
  for (const FaceWalk& w : trace_faces(g)) {
    if (!w.is_outer) {
      if (w.darts.size() != 3) return false;
      continue;
    }
    ++outer_walks;
    if (w.darts.size() < 3) return false;
    std::set<Vertex> seen;
    for (Dart d : w.darts) {
      if (!seen.insert(g.origin(d)).second) return false;
    }
  }
  return outer_walks == 1;
}

bool is_triangulation(const Embedding& g) {
  if (g.num_vertices() < 3 || num_components(g) != 1) return false;
  for (const FaceWalk& w : trace_faces(g)) {
    if (w.darts.size() != 3) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Dart EmbeddingEditor::insert_edge(Corner a, Corner b) {
  if (a.vertex == b.vertex) fail(ErrorCode::kInternal, "insert_edge with equal endpoints");
  auto d = static_cast<Dart>(g_.origin_.size());
  g_.origin_.push_back(a.vertex);
  g_.origin_.push_back(b.vertex);
  g_.pos_.push_back(0);
  g_.pos_.push_back(0);
  auto place = [&](Dart nd, Corner c) {
    auto& row = g_.rot_[static_cast<std::size_t>(c.vertex)];
    std::size_t at = 0;
    if (c.in == kNoDart) {
      if (!row.empty()) fail(ErrorCode::kInternal, "corner without dart at a non-isolated vertex");
    } else {
      Dart after = Embedding::twin(c.in);
      if (g_.origin(after) != c.vertex) fail(ErrorCode::kInternal, "corner dart does not enter its vertex");
      at = static_cast<std::size_t>(g_.pos_[static_cast<std::size_t>(after)]) + 1;
    }
    row.insert(row.begin() + static_cast<std::ptrdiff_t>(at), nd);
    for (std::size_t j = at; j < row.size(); ++j) g_.pos_[static_cast<std::size_t>(row[j])] = static_cast<std::int32_t>(j);
  };
  place(d, a);
  place(Embedding::twin(d), b);
  return d;
}

Embedding EmbeddingEditor::finish() && {
  Embedding& g = g_;
  const std::size_t n = g.labels_.size();
  for (std::size_t v = 0; v < n; ++v) {
    auto& row = g.rot_[v];
    if (!row.empty()) {
      auto first = std::min_element(row.begin(), row.end(), [&](Dart a, Dart b) { return g.target(a) < g.target(b); });
      std::rotate(row.begin(), first, row.end());
    }
    for (std::size_t j = 0; j < row.size(); ++j) g.pos_[static_cast<std::size_t>(row[j])] = static_cast<std::int32_t>(j);
  }

  FaceTable t = face_table(g);
  std::size_t comps = 0;
  auto comp = component_ids(g, &comps);
  std::vector<std::int64_t> euler(comps, 0);
  std::vector<char> has_edge(comps, 0);
  for (std::size_t v = 0; v < n; ++v) {
    euler[static_cast<std::size_t>(comp[v])] += 1;
    if (!g.rot_[v].empty()) has_edge[static_cast<std::size_t>(comp[v])] = 1;
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) euler[static_cast<std::size_t>(comp[static_cast<std::size_t>(g.origin_[2 * e])])] -= 1;
  for (const FaceWalk& w : t.walks) euler[static_cast<std::size_t>(comp[static_cast<std::size_t>(g.origin(w.darts[0]))])] += 1;

  std::vector<std::int32_t> outer_walk(comps, -1);
  for (Dart d : g.outer_) {
    auto c = static_cast<std::size_t>(comp[static_cast<std::size_t>(g.origin(d))]);
    std::int32_t f = t.face_of[static_cast<std::size_t>(d)];
    if (outer_walk[c] != -1 && outer_walk[c] != f) {
      fail(ErrorCode::kNestedComponent, "component of vertex " + std::to_string(g.label(g.origin(d))) +
                                            " has more than one outer face");
    }
    outer_walk[c] = f;
  }
  std::vector<Dart> canonical;
  for (std::size_t c = 0; c < comps; ++c) {
    if (!has_edge[c]) continue;
    if (euler[c] != 2) fail(ErrorCode::kEulerViolation, "rotation system of a component is not planar (V-E+F != 2)");
    if (outer_walk[c] == -1) {
      auto v = std::find(comp.begin(), comp.end(), static_cast<std::int32_t>(c)) - comp.begin();
      fail(ErrorCode::kNestedComponent, "component of vertex " + std::to_string(g.labels_[static_cast<std::size_t>(v)]) +
                                            " has no outer dart");
    }
    canonical.push_back(t.walks[static_cast<std::size_t>(outer_walk[c])].darts[0]);
  }
  std::sort(canonical.begin(), canonical.end(), [&](Dart a, Dart b) { return g.dart_less(a, b); });
  g.outer_ = std::move(canonical);
  return std::move(g_);
}

namespace detail {

Embedding embedding_from_rotations(std::vector<Label> labels, const std::vector<std::vector<Vertex>>& rotations,
                                   std::pair<Vertex, Vertex> outer) {
  RotationSpec spec;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    spec.vertices.push_back(labels[v]);
    auto& row = spec.rotation[labels[v]];
    for (Vertex w : rotations[v]) row.push_back(labels[static_cast<std::size_t>(w)]);
  }
  spec.outer_darts.push_back({labels[static_cast<std::size_t>(outer.first)], labels[static_cast<std::size_t>(outer.second)]});
  return Embedding::build(spec);
}

}  // namespace detail

}  // namespace onionpeel
