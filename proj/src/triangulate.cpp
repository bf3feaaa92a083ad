// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#include "onionpeel/triangulate.hpp"

#include <algorithm>
#include <string>

#include "onionpeel/detail/editor.hpp"
#include "onionpeel/error.hpp"

namespace onionpeel {

std::string_view stage_name(Stage s) {
  switch (s) {
    case Stage::kSaturate: return "saturate";
    case Stage::kConnect: return "connect";
    case Stage::kOuterCut: return "outer-cut";
    case Stage::kInnerCut: return "inner-cut";
    case Stage::kEar: return "ear";
    case Stage::kApex: return "apex";
  }
  return "unknown";
}

namespace {

using Trace = std::vector<TracedEdge>;

void record(const EmbeddingEditor& ed, Trace& trace, Dart d, Stage stage) {
  const Embedding& g = ed.view();
  trace.push_back({g.label(g.origin(d)), g.label(g.target(d)), stage});
}

const FaceWalk& sole_outer_walk(const FaceTable& t) {
  const FaceWalk* outer = nullptr;
  for (const FaceWalk& w : t.walks) {
    if (!w.is_outer) continue;
    if (outer) fail(ErrorCode::kDisconnected, "more than one outer walk");
    outer = &w;
  }
  if (!outer) fail(ErrorCode::kInternal, "no outer walk");
  return *outer;
}

void connect_in_place(EmbeddingEditor& ed, Trace& trace) {
  for (;;) {
    const Embedding& g = ed.view();
    std::size_t comps = 0;
    auto comp = component_ids(g, &comps);
    if (comps <= 1) return;
    FaceTable t = face_table(g);

    // Smallest outer vertex of each component and the walk it was found on.
    std::vector<Vertex> best(comps, kNoVertex);
    std::vector<int> walk_of(comps, -1);
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      if (g.degree(static_cast<Vertex>(v)) == 0) best[static_cast<std::size_t>(comp[v])] = static_cast<Vertex>(v);
    }
    for (std::size_t f = 0; f < t.walks.size(); ++f) {
      if (!t.walks[f].is_outer) continue;
      for (Dart d : t.walks[f].darts) {
        Vertex v = g.origin(d);
        auto c = static_cast<std::size_t>(comp[static_cast<std::size_t>(v)]);
        if (best[c] == kNoVertex || v < best[c]) {
          best[c] = v;
          walk_of[c] = static_cast<int>(f);
        }
      }
    }
    std::vector<std::size_t> order(comps);
    for (std::size_t c = 0; c < comps; ++c) order[c] = c;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return best[a] < best[b]; });

    auto corner = [&](std::size_t c) -> Corner {
      Vertex v = best[c];
      if (walk_of[c] == -1) return {v, kNoDart};
      const auto& w = t.walks[static_cast<std::size_t>(walk_of[c])].darts;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (g.origin(w[i]) == v) return {v, w[(i + w.size() - 1) % w.size()]};
      }
      fail(ErrorCode::kInternal, "outer vertex vanished from its walk");
    };
    Corner a = corner(order[0]);
    Corner b = corner(order[1]);
    Dart d = ed.insert_edge(a, b);
    ed.add_outer_dart(d);
    record(ed, trace, d, Stage::kConnect);
  }
}

// Looks for an occurrence ...a, v, b... of a repeated vertex v with a != b
// non-adjacent; returns its index in the walk.
std::optional<std::size_t> find_cut_occurrence(const Embedding& g, const std::vector<Dart>& w, bool* has_repeat) {
  const std::size_t m = w.size();
  std::vector<int> count(g.num_vertices(), 0);
  for (Dart d : w) ++count[static_cast<std::size_t>(g.origin(d))];
  *has_repeat = false;
  for (std::size_t i = 0; i < m; ++i) {
    Vertex v = g.origin(w[i]);
    if (count[static_cast<std::size_t>(v)] < 2) continue;
    *has_repeat = true;
    Vertex a = g.origin(w[(i + m - 1) % m]);
    Vertex b = g.origin(w[(i + 1) % m]);
    if (a != b && !g.adjacent(a, b)) return i;
  }
  return std::nullopt;
}

// Adds the chord cutting off occurrence i of walk w; returns the new dart a->b,
// which lies on the remaining (larger) part of the face.
Dart cut_occurrence(EmbeddingEditor& ed, const std::vector<Dart>& w, std::size_t i) {
  const Embedding& g = ed.view();
  const std::size_t m = w.size();
  Vertex a = g.origin(w[(i + m - 1) % m]);
  Vertex b = g.origin(w[(i + 1) % m]);
  return ed.insert_edge({a, w[(i + m - 2) % m]}, {b, w[i]});
}

void outer_repair_in_place(EmbeddingEditor& ed, Trace& trace) {
  if (num_components(ed.view()) != 1) fail(ErrorCode::kDisconnected, "outer repair needs a connected embedding");
  for (;;) {
    FaceTable t = face_table(ed.view());
    const FaceWalk& outer = sole_outer_walk(t);
    bool repeat = false;
    auto i = find_cut_occurrence(ed.view(), outer.darts, &repeat);
    if (!repeat) return;
    if (!i) fail(ErrorCode::kRepairStuck, "every repeated outer vertex has adjacent flanking neighbors");
    Dart d = cut_occurrence(ed, outer.darts, *i);
    ed.set_outer_darts({d});
    record(ed, trace, d, Stage::kOuterCut);
  }
}

void inner_repair_in_place(EmbeddingEditor& ed, Trace& trace) {
  for (;;) {
    FaceTable t = face_table(ed.view());
    bool changed = false;
    for (const FaceWalk& w : t.walks) {
      if (w.is_outer) continue;
      bool repeat = false;
      auto i = find_cut_occurrence(ed.view(), w.darts, &repeat);
      if (!repeat) continue;
      if (!i) fail(ErrorCode::kRepairStuck, "every repeated vertex of an inner face has adjacent flanking neighbors");
      Dart d = cut_occurrence(ed, w.darts, *i);
      record(ed, trace, d, Stage::kInnerCut);
      changed = true;
      break;
    }
    if (!changed) return;
  }
}

void ears_in_place(EmbeddingEditor& ed, Trace& trace) {
  const FaceTable t = face_table(ed.view());
  for (const FaceWalk& walk : t.walks) {
    if (walk.is_outer || walk.darts.size() <= 3) continue;
    const Embedding& g = ed.view();
    const std::size_t m0 = walk.darts.size();
    // Corner i: vertex origin(darts[i]) entered by darts[i-1].
    std::vector<Vertex> vert(m0);
    std::vector<Dart> in(m0);
    for (std::size_t i = 0; i < m0; ++i) {
      vert[i] = g.origin(walk.darts[i]);
      in[i] = walk.darts[(i + m0 - 1) % m0];
    }
    while (vert.size() > 3) {
      const std::size_t m = vert.size();
      std::size_t start = 0;
      for (std::size_t i = 1; i < m; ++i) {
        if (ed.view().dart_less(in[(i + 1) % m], in[(start + 1) % m])) start = i;
      }
      bool clipped = false;
      for (std::size_t step = 0; step < m && !clipped; ++step) {
        std::size_t j = (start + step) % m;
        std::size_t prev = (j + m - 1) % m;
        std::size_t next = (j + 1) % m;
        if (ed.view().adjacent(vert[prev], vert[next])) continue;
        Dart d = ed.insert_edge({vert[prev], in[prev]}, {vert[next], in[next]});
        record(ed, trace, d, Stage::kEar);
        in[next] = d;
        vert.erase(vert.begin() + static_cast<std::ptrdiff_t>(j));
        in.erase(in.begin() + static_cast<std::ptrdiff_t>(j));
        clipped = true;
      }
      if (!clipped) fail(ErrorCode::kInternal, "no ear found in a simple face");
    }
  }
}

void apex_in_place(EmbeddingEditor& ed, Trace& trace) {
  const Embedding& g = ed.view();
  FaceTable t = face_table(g);
  const auto w = sole_outer_walk(t).darts;
  const std::size_t m = w.size();
  auto outer = outer_vertex_mask(g);

  std::optional<std::size_t> pick;
  for (std::size_t i = 0; i < m; ++i) {
    Vertex r = g.origin(w[i]);
    std::size_t outer_nbrs = 0;
    for (Dart d : g.rotation(r)) outer_nbrs += outer[static_cast<std::size_t>(g.target(d))] ? 1 : 0;
    if (outer_nbrs == 2 && (!pick || r < g.origin(w[*pick]))) pick = i;
  }
  if (!pick) fail(ErrorCode::kInternal, "outer cycle has no vertex with exactly two outer neighbors");
  const std::size_t p = *pick;
  const Vertex r = g.origin(w[p]);
  const Dart into_r = w[(p + m - 1) % m];
  for (std::size_t j = 2; j + 1 < m; ++j) {
    Vertex c = ed.view().origin(w[(p + j) % m]);
    Dart d = ed.insert_edge({r, into_r}, {c, w[(p + j - 1) % m]});
    record(ed, trace, d, Stage::kApex);
  }
  ed.set_outer_darts({w[p]});
}

template <typename Fn>
Embedding run_stage(const Embedding& g, Fn fn) {
  EmbeddingEditor ed(g);
  Trace trace;
  fn(ed, trace);
  return std::move(ed).finish();
}

}  // namespace

Embedding connect_components(const Embedding& g) { return run_stage(g, connect_in_place); }
Embedding repair_outer_cut_vertices(const Embedding& g) { return run_stage(g, outer_repair_in_place); }
Embedding repair_inner_cut_vertices(const Embedding& g) { return run_stage(g, inner_repair_in_place); }
Embedding triangulate_inner_faces(const Embedding& g) { return run_stage(g, ears_in_place); }

DiskConversion convert_to_disk(const Embedding& g) {
  if (g.num_vertices() < 3) fail(ErrorCode::kTooSmall, "need at least three vertices");
  Trace trace;
  PeelDecomposition peels = onion_peels(g);

  EmbeddingEditor sat(g);
  for (const auto& e : detail::saturate_in_place(sat, peels)) {
    trace.push_back({g.label(e.u), g.label(e.v), Stage::kSaturate});
  }
  Embedding saturated = std::move(sat).finish();
  RootedForest forest = build_rooted_forest(saturated);

  EmbeddingEditor ed(std::move(saturated));
  connect_in_place(ed, trace);
  outer_repair_in_place(ed, trace);
  inner_repair_in_place(ed, trace);
  ears_in_place(ed, trace);
  return {std::move(ed).finish(), DiskConversionTrace{std::move(trace)}, std::move(forest)};
}

std::pair<Embedding, DiskConversionTrace> to_triangulated_disk(const Embedding& g) {
  DiskConversion c = convert_to_disk(g);
  return {std::move(c.disk), std::move(c.trace)};
}

std::pair<Embedding, DiskConversionTrace> to_full_triangulation(const Embedding& g) {
  DiskConversion c = convert_to_disk(g);
  EmbeddingEditor ed(std::move(c.disk));
  apex_in_place(ed, c.trace.added);
  return {std::move(ed).finish(), std::move(c.trace)};
}

}  // namespace onionpeel
