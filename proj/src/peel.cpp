// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#include "onionpeel/peel.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <tuple>

#include "onionpeel/error.hpp"

namespace onionpeel {

PeelDecomposition onion_peels(const Embedding& g) {
  PeelDecomposition p;
  p.layer_of.assign(g.num_vertices(), 0);
  Embedding cur = g;
  while (cur.num_vertices() > 0) {
    auto outer = outer_vertices(cur);
    std::vector<Vertex> layer;
    layer.reserve(outer.size());
    for (Vertex v : outer) layer.push_back(*g.vertex_of(cur.label(v)));
    p.layers.push_back(layer);
    for (Vertex v : layer) p.layer_of[static_cast<std::size_t>(v)] = p.k();
    cur = remove_vertices(cur, outer);
  }
  return p;
}

std::vector<InwardWitness> check_inward_face(const Embedding& g, const PeelDecomposition& peels) {
  FaceTable t = face_table(g);
  std::vector<InwardWitness> report;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    int layer = peels.layer_of[v];
    if (layer <= 1) continue;
    InwardWitness w{static_cast<Vertex>(v), layer, std::nullopt};
    for (Dart d : g.rotation(static_cast<Vertex>(v))) {
      int f = t.face_of[static_cast<std::size_t>(d)];
      if (w.face && *w.face <= f) continue;
      for (Dart x : t.walks[static_cast<std::size_t>(f)].darts) {
        if (peels.layer_of[static_cast<std::size_t>(g.origin(x))] == layer - 1) {
          w.face = f;
          break;
        }
      }
    }
    report.push_back(w);
  }
  return report;
}

namespace detail {

std::vector<AddedEdge> saturate_in_place(EmbeddingEditor& ed, const PeelDecomposition& peels) {
  std::vector<AddedEdge> added;
  const FaceTable t = face_table(ed.view());
  for (const FaceWalk& walk : t.walks) {
    if (walk.is_outer) continue;
    const auto& w = walk.darts;
    const std::size_t m = w.size();
    const Embedding& g = ed.view();

    std::size_t p = 0;
    auto rank = [&](std::size_t i) {
      Vertex v = g.origin(w[i]);
      return std::make_tuple(peels.layer_of[static_cast<std::size_t>(v)], v, i);
    };
    for (std::size_t i = 1; i < m; ++i) {
      if (rank(i) < rank(p)) p = i;
    }
    const Vertex hub = g.origin(w[p]);

    std::vector<std::size_t> targets;
    std::vector<Vertex> seen;
    for (std::size_t i = 0; i < m; ++i) {
      Vertex v = g.origin(w[i]);
      if (v == hub || std::find(seen.begin(), seen.end(), v) != seen.end()) continue;
      seen.push_back(v);
      if (!g.adjacent(hub, v)) targets.push_back(i);
    }
    std::sort(targets.begin(), targets.end(),
              [&](std::size_t a, std::size_t b) { return (a + m - p) % m < (b + m - p) % m; });
    for (std::size_t q : targets) {
      Vertex v = ed.view().origin(w[q]);
      ed.insert_edge({hub, w[(p + m - 1) % m]}, {v, w[(q + m - 1) % m]});
      added.push_back({hub, v});
    }
  }
  return added;
}

}  // namespace detail

Embedding saturate_inward_neighbors(const Embedding& g) {
  PeelDecomposition peels = onion_peels(g);
  EmbeddingEditor ed(g);
  detail::saturate_in_place(ed, peels);
  return std::move(ed).finish();
}

int RootedForest::height() const {
  int h = 0;
  for (int d : depth) h = std::max(h, d);
  return h;
}

Vertex RootedForest::root_of(Vertex v) const {
  while (parent[static_cast<std::size_t>(v)] != kNoVertex) v = parent[static_cast<std::size_t>(v)];
  return v;
}

std::vector<Vertex> RootedForest::path_to_root(Vertex v) const {
  std::vector<Vertex> path{v};
  while (parent[static_cast<std::size_t>(v)] != kNoVertex) {
    v = parent[static_cast<std::size_t>(v)];
    path.push_back(v);
  }
  return path;
}

RootedForest build_rooted_forest(const Embedding& g) {
  const std::size_t n = g.num_vertices();
  RootedForest f;
  f.parent.assign(n, kNoVertex);
  f.depth.assign(n, -1);
  f.roots = outer_vertices(g);
  std::deque<Vertex> queue;
  for (Vertex r : f.roots) {
    f.depth[static_cast<std::size_t>(r)] = 0;
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Dart d : g.rotation(u)) {
      Vertex v = g.target(d);
      if (f.depth[static_cast<std::size_t>(v)] == -1) {
        f.depth[static_cast<std::size_t>(v)] = f.depth[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    int dv = f.depth[v];
    if (dv == -1) {
      fail(ErrorCode::kUnreachableVertex, "vertex " + std::to_string(g.label(static_cast<Vertex>(v))) +
                                              " has no path to the outer face");
    }
    if (dv == 0) continue;
    for (Dart d : g.rotation(static_cast<Vertex>(v))) {
      Vertex u = g.target(d);
      if (f.depth[static_cast<std::size_t>(u)] == dv - 1 && (f.parent[v] == kNoVertex || u < f.parent[v])) {
        f.parent[v] = u;
      }
    }
  }
  return f;
}

void validate_forest(const Embedding& g, const RootedForest& forest) {
  const std::size_t n = g.num_vertices();
  if (forest.parent.size() != n || forest.depth.size() != n) {
    fail(ErrorCode::kInvalidForest, "forest does not span the embedding");
  }
  auto outer = outer_vertex_mask(g);
  std::vector<Vertex> roots;
  for (std::size_t v = 0; v < n; ++v) {
    const std::string name = std::to_string(g.label(static_cast<Vertex>(v)));
    Vertex p = forest.parent[v];
    if (p == kNoVertex) {
      if (!outer[v]) fail(ErrorCode::kInvalidForest, "root " + name + " is not on the outer face");
      if (forest.depth[v] != 0) fail(ErrorCode::kInvalidForest, "root " + name + " has nonzero depth");
      roots.push_back(static_cast<Vertex>(v));
      continue;
    }
    if (p < 0 || static_cast<std::size_t>(p) >= n || !g.adjacent(static_cast<Vertex>(v), p)) {
      fail(ErrorCode::kInvalidForest, "parent of " + name + " is not a neighbor");
    }
    if (outer[v]) fail(ErrorCode::kInvalidForest, "outer vertex " + name + " is not a root");
    if (forest.depth[v] != forest.depth[static_cast<std::size_t>(p)] + 1) {
      fail(ErrorCode::kInvalidForest, "depth of " + name + " is not its parent's depth plus one");
    }
  }
  if (roots != forest.roots) fail(ErrorCode::kInvalidForest, "root list does not match the parentless vertices");
}

ForestBound verify_forest_bound(const Embedding& g, const RootedForest& forest) {
  validate_forest(g, forest);
  const std::size_t n = g.num_vertices();

  PeelDecomposition peels = onion_peels(g);
  ForestBound b{peels.k(), forest.height()};
  if (b.k > b.height + 1) {
    fail(ErrorCode::kBoundViolated, std::to_string(b.k) + " peels exceed forest height " + std::to_string(b.height) + " + 1");
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (peels.layer_of[v] > forest.depth[v] + 1) {
      fail(ErrorCode::kBoundViolated, "vertex " + std::to_string(g.label(static_cast<Vertex>(v))) + " at depth " +
                                          std::to_string(forest.depth[v]) + " lies in peel " +
                                          std::to_string(peels.layer_of[v]));
    }
  }
  return b;
}

}  // namespace onionpeel
