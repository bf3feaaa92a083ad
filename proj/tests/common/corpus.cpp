// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#include "corpus.hpp"

#include <algorithm>

#include "onionpeel/epg.hpp"
#include "onionpeel/generators.hpp"

namespace onionpeel::testing {

Embedding two_triangles() {
  return parse_epg(
      "epg 1\n"
      "v 0: 1 2\nv 1: 0 2\nv 2: 0 1\n"
      "v 3: 4 5\nv 4: 3 5\nv 5: 3 4\n"
      "outer 0 1\nouter 3 4\n");
}

Embedding bowtie() { return embedding_from_faces({0, 1, 2, 3, 4}, {{0, 1, 2}, {0, 3, 4}, {0, 2, 1, 0, 4, 3}}, {0, 2}); }

Embedding pendant_outside() { return embedding_from_faces({0, 1, 2, 3}, {{0, 1, 2}, {0, 3, 0, 2, 1}}, {0, 3}); }

Embedding pendant_inside() {
  Embedding g = pendant_outside();
  return with_outer_face(g, dart(g, 0, 1));
}

Embedding triangle_plus_isolated() {
  return parse_epg("epg 1\nv 0: 1 2\nv 1: 0 2\nv 2: 0 1\nv 3:\nouter 0 1\n");
}

Embedding star(int leaves) {
  std::vector<Label> vertices{0};
  std::vector<Label> walk;
  for (Label i = 1; i <= leaves; ++i) {
    vertices.push_back(i);
    walk.push_back(0);
    walk.push_back(i);
  }
  return embedding_from_faces(vertices, {walk}, {0, 1});
}

Embedding square_with_inner_pendant() {
  return embedding_from_faces({0, 1, 2, 3, 4}, {{3, 2, 1, 0}, {0, 1, 2, 3, 0, 4}}, {3, 2});
}

Embedding pentagon_with_outer_chord() {
  return embedding_from_faces({0, 1, 2, 3, 4}, {{0, 1, 2, 3, 4}, {1, 0, 2}, {0, 4, 3, 2}}, {0, 4});
}

Vertex vx(const Embedding& g, Label l) {
  auto v = g.vertex_of(l);
  if (!v) throw std::logic_error("no vertex " + std::to_string(l));
  return *v;
}

Dart dart(const Embedding& g, Label u, Label v) {
  auto d = g.find_dart(vx(g, u), vx(g, v));
  if (!d) throw std::logic_error("no dart " + std::to_string(u) + "->" + std::to_string(v));
  return *d;
}

std::vector<FaceWalk> inner_walks(const Embedding& g) {
  std::vector<FaceWalk> out;
  for (FaceWalk& w : trace_faces(g)) {
    if (!w.is_outer) out.push_back(std::move(w));
  }
  return out;
}

std::vector<Label> outer_labels(const Embedding& g) {
  std::vector<Label> out;
  for (Vertex v : outer_vertices(g)) out.push_back(g.label(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Label, Label>> edge_set(const Embedding& g) {
  std::vector<std::pair<Label, Label>> out;
  for (std::size_t d = 0; d < g.num_darts(); d += 2) {
    Label u = g.label(g.origin(static_cast<Dart>(d)));
    Label v = g.label(g.target(static_cast<Dart>(d)));
    out.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<Instance>& corpus() {
  static const std::vector<Instance> all = [] {
    std::vector<Instance> c;
    for (int i = 1; i <= 6; ++i) c.push_back({"nested-" + std::to_string(i), gen_nested_triangles(i)});
    for (int k = 2; k <= 6; ++k) c.push_back({"counterexample-" + std::to_string(k), gen_counterexample(k)});
    c.push_back({"k4minus", gen_k4_minus_edge()});
    for (int n = 3; n <= 9; ++n) c.push_back({"cycle-" + std::to_string(n), gen_cycle(n)});
    for (int n = 3; n <= 8; ++n) c.push_back({"wheel-" + std::to_string(n), gen_wheel(n)});
    for (int n = 3; n <= 7; ++n) c.push_back({"path-" + std::to_string(n), gen_path(n)});
    for (std::uint64_t s = 0; s < 100; ++s) {
      int k = 1 + static_cast<int>(s % 6);
      int w = 3 + static_cast<int>((s / 6) % 5);
      c.push_back({"random-" + std::to_string(k) + "-" + std::to_string(w) + "-" + std::to_string(s),
                   gen_random_kouter(k, w, s)});
    }
    c.push_back({"two-triangles", two_triangles()});
    c.push_back({"bowtie", bowtie()});
    c.push_back({"pendant-outside", pendant_outside()});
    c.push_back({"pendant-inside", pendant_inside()});
    c.push_back({"triangle-plus-isolated", triangle_plus_isolated()});
    c.push_back({"star-4", star(4)});
    c.push_back({"square-inner-pendant", square_with_inner_pendant()});
    c.push_back({"pentagon-outer-chord", pentagon_with_outer_chord()});
    return c;
  }();
  return all;
}

}  // namespace onionpeel::testing
