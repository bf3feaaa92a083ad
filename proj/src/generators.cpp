// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#include "onionpeel/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>

#include "onionpeel/error.hpp"

namespace onionpeel {

namespace {

std::vector<Label> iota_labels(Label n) {
  std::vector<Label> v;
  for (Label i = 0; i < n; ++i) v.push_back(i);
  return v;
}

// Faces of T_i with the given label offset, optionally without the outer face.
void nested_faces(int i, Label offset, bool with_outer, std::vector<std::vector<Label>>& faces) {
  auto tri = [&](int j, int m) { return offset + 3 * (j - 1) + (m % 3); };
  faces.push_back({tri(1, 0), tri(1, 1), tri(1, 2)});
  for (int j = 2; j <= i; ++j) {
    for (int m = 0; m < 3; ++m) {
      faces.push_back({tri(j, m), tri(j, m + 1), tri(j - 1, m)});
      faces.push_back({tri(j - 1, m), tri(j, m + 1), tri(j - 1, m + 1)});
    }
  }
  if (with_outer) faces.push_back({tri(i, 2), tri(i, 1), tri(i, 0)});
}

// Portable bounded draw; std distributions are implementation-defined.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

std::size_t longest_cyclic_run(const std::vector<char>& steps) {
  const std::size_t n = steps.size();
  std::size_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t len = 0;
    while (len < n && steps[(i + len) % n] == steps[i]) ++len;
    best = std::max(best, len);
  }
  return best;
}

}  // namespace

Family parse_family(std::string_view name) {
  if (name == "nested") return Family::kNestedTriangles;
  if (name == "counterexample") return Family::kCounterexample;
  if (name == "cycle") return Family::kCycle;
  if (name == "wheel") return Family::kWheel;
  if (name == "path") return Family::kPath;
  if (name == "k4minus") return Family::kK4MinusEdge;
  if (name == "random") return Family::kRandomKOuter;
  fail(ErrorCode::kBadParameter, "unknown generator family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kNestedTriangles: return "nested";
    case Family::kCounterexample: return "counterexample";
    case Family::kCycle: return "cycle";
    case Family::kWheel: return "wheel";
    case Family::kPath: return "path";
    case Family::kK4MinusEdge: return "k4minus";
    case Family::kRandomKOuter: return "random";
  }
  return "unknown";
}

Embedding generate(const GadgetSpec& spec) {
  switch (spec.family) {
    case Family::kNestedTriangles: return gen_nested_triangles(spec.parameter);
    case Family::kCounterexample: return gen_counterexample(spec.parameter);
    case Family::kCycle: return gen_cycle(spec.parameter);
    case Family::kWheel: return gen_wheel(spec.parameter);
    case Family::kPath: return gen_path(spec.parameter);
    case Family::kK4MinusEdge: return gen_k4_minus_edge();
    case Family::kRandomKOuter: return gen_random_kouter(spec.parameter, spec.width, spec.seed);
  }
  fail(ErrorCode::kBadParameter, "unknown family");
}

Embedding embedding_from_faces(const std::vector<Label>& vertices, const std::vector<std::vector<Label>>& faces,
                               std::pair<Label, Label> outer) {
  // succ[v][u] = w for every face corner (u, v, w): w follows u in rotation(v).
  std::map<Label, std::map<Label, Label>> succ;
  for (const auto& f : faces) {
    const std::size_t m = f.size();
    for (std::size_t i = 0; i < m; ++i) {
      Label u = f[(i + m - 1) % m];
      Label v = f[i];
      Label w = f[(i + 1) % m];
      if (!succ[v].emplace(u, w).second) {
        fail(ErrorCode::kInternal, "dart " + std::to_string(u) + "->" + std::to_string(v) + " used by two faces");
      }
    }
  }
  RotationSpec spec;
  spec.vertices = vertices;
  for (Label v : vertices) {
    auto& row = spec.rotation[v];
    auto it = succ.find(v);
    if (it == succ.end()) continue;
    const auto& next = it->second;
    Label first = next.begin()->first;
    Label x = first;
    do {
      row.push_back(x);
      auto nx = next.find(x);
      if (nx == next.end() || row.size() > next.size()) {
        fail(ErrorCode::kInternal, "corners at vertex " + std::to_string(v) + " do not form one cycle");
      }
      x = nx->second;
    } while (x != first);
    if (row.size() != next.size()) {
      fail(ErrorCode::kInternal, "corners at vertex " + std::to_string(v) + " do not form one cycle");
    }
  }
  spec.outer_darts.push_back(outer);
  return Embedding::build(spec);
}

Embedding gen_nested_triangles(int i) {
  if (i < 1) fail(ErrorCode::kBadParameter, "nested triangles need i >= 1");
  std::vector<std::vector<Label>> faces;
  nested_faces(i, 0, true, faces);
  Label outer_a = 3 * (i - 1) + 2;
  return embedding_from_faces(iota_labels(3 * i), faces, {outer_a, outer_a - 1});
}

Embedding gen_counterexample(int k) {
  if (k < 2) fail(ErrorCode::kBadParameter, "counterexample needs k >= 2 (use k4minus for k = 1)");
  const Label size = 3 * k;
  std::vector<std::vector<Label>> faces;
  auto r = [&](int c) { return size * (c % 4) + size - 3; };
  auto p = [&](int c) { return size * (c % 4) + size - 2; };
  auto q = [&](int c) { return size * (c % 4) + size - 1; };
  for (int c = 0; c < 4; ++c) nested_faces(k, size * c, false, faces);
  for (int c = 0; c < 4; ++c) {
    faces.push_back({q(c), p(c + 1), r(c + 1)});
    faces.push_back({r(c), q(c), r(c + 1)});
  }
  faces.push_back({r(0), r(1), r(2)});
  faces.push_back({r(0), r(2), r(3)});
  faces.push_back({q(3), p(3), q(2), p(2), q(1), p(1), q(0), p(0)});
  return embedding_from_faces(iota_labels(4 * size), faces, {q(3), p(3)});
}

Embedding gen_k4_minus_edge() {
  return embedding_from_faces(iota_labels(4), {{0, 1, 2}, {0, 2, 3}, {3, 2, 1, 0}}, {3, 2});
}

Embedding gen_cycle(int n) {
  if (n < 3) fail(ErrorCode::kBadParameter, "cycle needs n >= 3");
  std::vector<Label> inner = iota_labels(n);
  std::vector<Label> outer(inner.rbegin(), inner.rend());
  return embedding_from_faces(inner, {inner, outer}, {n - 1, n - 2});
}

Embedding gen_wheel(int n) {
  if (n < 3) fail(ErrorCode::kBadParameter, "wheel needs n >= 3");
  std::vector<std::vector<Label>> faces;
  for (Label i = 0; i < n; ++i) faces.push_back({i, (i + 1) % n, n});
  std::vector<Label> rim = iota_labels(n);
  faces.emplace_back(rim.rbegin(), rim.rend());
  return embedding_from_faces(iota_labels(n + 1), faces, {n - 1, n - 2});
}

Embedding gen_path(int n) {
  if (n < 2) fail(ErrorCode::kBadParameter, "path needs n >= 2");
  std::vector<Label> walk = iota_labels(n);
  for (Label i = n - 2; i >= 1; --i) walk.push_back(i);
  return embedding_from_faces(iota_labels(n), {walk}, {0, 1});
}

Embedding gen_random_kouter(int k, int width, std::uint64_t seed) {
  if (k < 1 || width < 3) fail(ErrorCode::kBadParameter, "random k-outerplanar needs k >= 1 and width >= 3");
  std::mt19937_64 rng(seed);
  const Label w = width;
  auto ring = [&](int r, Label i) { return r * w + ((i % w) + w) % w; };

  std::vector<std::vector<Label>> faces;
  std::vector<std::pair<Label, Label>> droppable;
  std::vector<std::vector<std::pair<Label, Label>>> ladders;
  {
    std::vector<Label> outer;
    for (Label i = w - 1; i >= 0; --i) outer.push_back(ring(0, i));
    faces.push_back(outer);
  }
  for (int r = 0; r + 1 < k; ++r) {
    auto shift = static_cast<Label>(draw(rng, static_cast<std::uint64_t>(w)));
    std::vector<char> steps(static_cast<std::size_t>(2 * w), 'o');
    std::fill(steps.begin() + w, steps.end(), 'i');
    // w equal steps in a row (cyclically) would repeat a rung.
    do {
      for (std::size_t i = steps.size() - 1; i > 0; --i) std::swap(steps[i], steps[draw(rng, i + 1)]);
    } while (longest_cyclic_run(steps) >= static_cast<std::size_t>(w));
    Label a = 0;
    Label b = 0;
    std::vector<std::pair<Label, Label>> rungs;
    for (char s : steps) {
      rungs.emplace_back(ring(r, a), ring(r + 1, shift + b));
      if (s == 'o') {
        faces.push_back({ring(r, a), ring(r, a + 1), ring(r + 1, shift + b)});
        ++a;
      } else {
        faces.push_back({ring(r + 1, shift + b), ring(r, a), ring(r + 1, shift + b + 1)});
        ++b;
      }
    }
    ladders.push_back(rungs);
  }
  {
    const int r = k - 1;
    auto hub = static_cast<Label>(draw(rng, static_cast<std::uint64_t>(w)));
    for (Label j = 1; j + 1 < w; ++j) {
      faces.push_back({ring(r, hub), ring(r, hub + j), ring(r, hub + j + 1)});
      if (j + 1 < w - 1) droppable.emplace_back(ring(r, hub), ring(r, hub + j + 1));
    }
  }
  Embedding full = embedding_from_faces(iota_labels(k * w), faces, {ring(0, w - 1), ring(0, w - 2)});

  std::set<std::pair<Label, Label>> dropped;
  auto drop = [&](std::pair<Label, Label> e) {
    dropped.insert(e);
    dropped.emplace(e.second, e.first);
  };
  for (const auto& rungs : ladders) {
    std::vector<std::pair<Label, Label>> kept;
    for (const auto& e : rungs) {
      if (draw(rng, 2) == 0) {
        drop(e);
      } else {
        kept.push_back(e);
      }
    }
    if (kept.empty()) {
      auto keep = rungs[draw(rng, rungs.size())];
      dropped.erase(keep);
      dropped.erase({keep.second, keep.first});
    }
  }
  for (const auto& e : droppable) {
    if (draw(rng, 2) == 0) drop(e);
  }

  RotationSpec spec = full.to_spec();
  for (auto& [v, row] : spec.rotation) {
    std::erase_if(row, [&, v = v](Label u) { return dropped.count({v, u}) > 0; });
  }
  return Embedding::build(spec);
}

}  // namespace onionpeel
