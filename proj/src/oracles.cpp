// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#include "onionpeel/oracles.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <limits>
#include <set>
#include <thread>

#include "onionpeel/error.hpp"
#include "onionpeel/generators.hpp"

namespace onionpeel {

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
  std::vector<std::vector<int>> adj(labels.size());
  for (const auto& [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

SimpleGraph underlying_graph(const Embedding& g) {
  SimpleGraph s;
  s.labels.assign(g.labels().begin(), g.labels().end());
  for (std::size_t d = 0; d < g.num_darts(); d += 2) {
    int u = g.origin(static_cast<Dart>(d));
    int v = g.target(static_cast<Dart>(d));
    s.edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(s.edges.begin(), s.edges.end());
  return s;
}

// ---------------------------------------------------------------------------
// Branchwidth: insert edge leaves one at a time into every arc. A partial
// tree's width never drops as leaves are added, so it prunes.

namespace {

class BranchSearch {
 public:
  explicit BranchSearch(const SimpleGraph& g) : m_(static_cast<int>(g.edges.size())) {
    masks_.assign(g.num_vertices(), 0);
    for (int e = 0; e < m_; ++e) {
      masks_[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].first)] |= 1u << e;
      masks_[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].second)] |= 1u << e;
    }
    masks_.erase(std::remove(masks_.begin(), masks_.end(), 0u), masks_.end());
  }

  int run() {
    if (m_ <= 1) return 0;
    // Leaves are nodes 0..m-1.
    if (m_ == 2) {
      arcs_ = {{0, 1}};
      next_node_ = 2;
      return width(2);
    }
    arcs_ = {{0, m_}, {1, m_}, {2, m_}};
    next_node_ = m_ + 1;
    best_ = std::numeric_limits<int>::max();
    int w = width(3);
    if (m_ == 3) return w;
    extend(3);
    return best_;
  }

 private:
  void extend(int leaf) {
    if (leaf == m_) return;
    const std::size_t count = arcs_.size();
    for (std::size_t a = 0; a < count; ++a) {
      auto [x, y] = arcs_[a];
      int z = next_node_++;
      arcs_[a] = {x, z};
      arcs_.push_back({z, y});
      arcs_.push_back({z, leaf});
      int w = width(leaf + 1);
      if (w < best_) {
        if (leaf + 1 == m_) {
          best_ = w;
        } else {
          extend(leaf + 1);
        }
      }
      arcs_.pop_back();
      arcs_.pop_back();
      arcs_[a] = {x, y};
      --next_node_;
    }
  }

  // Width with leaves 0..placed-1 present; rooted at leaf 0.
  int width(int placed) {
    const auto n = static_cast<std::size_t>(next_node_);
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : arcs_) {
      adj[static_cast<std::size_t>(a)].push_back(b);
      adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<int> parent(n, -1);
    std::vector<int> order;
    std::vector<int> stack{0};
    parent[0] = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      order.push_back(x);
      for (int y : adj[static_cast<std::size_t>(x)]) {
        if (parent[static_cast<std::size_t>(y)] != -1) continue;
        parent[static_cast<std::size_t>(y)] = x;
        stack.push_back(y);
      }
    }
    const std::uint32_t all = (placed >= 32 ? ~0u : (1u << placed) - 1);
    std::vector<std::uint32_t> below(n, 0);
    int w = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      auto x = static_cast<std::size_t>(*it);
      if (*it < m_) below[x] |= 1u << *it;
      if (*it == 0) continue;
      int cross = 0;
      for (std::uint32_t mv : masks_) {
        if ((mv & below[x]) && (mv & all & ~below[x])) ++cross;
      }
      w = std::max(w, cross);
      below[static_cast<std::size_t>(parent[x])] |= below[x];
    }
    return w;
  }

  int m_;
  std::vector<std::uint32_t> masks_;
  std::vector<std::pair<int, int>> arcs_;
  int next_node_ = 0;
  int best_ = std::numeric_limits<int>::max();
};

}  // namespace

int brute_branchwidth(const SimpleGraph& g, const OracleBudget& budget) {
  if (static_cast<int>(g.edges.size()) > budget.max_edges) {
    fail(ErrorCode::kBudgetExceeded, std::to_string(g.edges.size()) + " edges exceed the branchwidth budget of " +
                                         std::to_string(budget.max_edges));
  }
  if (g.edges.size() > 31) fail(ErrorCode::kBudgetExceeded, "branchwidth oracle supports at most 31 edges");
  return BranchSearch(g).run();
}

// ---------------------------------------------------------------------------
// Outerplanarity over rotation systems.

namespace {

// Faces of a rotation system on vertices 0..n-1; dart (u, i) is the i-th
// entry of order[u].
struct Faces {
  std::vector<int> offset;
  std::vector<int> face_of;
  int count = 0;
};

Faces trace(const std::vector<std::vector<int>>& order, const std::vector<std::vector<int>>& pos) {
  const std::size_t n = order.size();
  Faces f;
  f.offset.assign(n + 1, 0);
  for (std::size_t u = 0; u < n; ++u) f.offset[u + 1] = f.offset[u] + static_cast<int>(order[u].size());
  f.face_of.assign(static_cast<std::size_t>(f.offset[n]), -1);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t i = 0; i < order[u].size(); ++i) {
      if (f.face_of[static_cast<std::size_t>(f.offset[u]) + i] != -1) continue;
      auto cu = static_cast<int>(u);
      auto ci = static_cast<int>(i);
      while (f.face_of[static_cast<std::size_t>(f.offset[static_cast<std::size_t>(cu)] + ci)] == -1) {
        f.face_of[static_cast<std::size_t>(f.offset[static_cast<std::size_t>(cu)] + ci)] = f.count;
        int v = order[static_cast<std::size_t>(cu)][static_cast<std::size_t>(ci)];
        const auto& ov = order[static_cast<std::size_t>(v)];
        int p = pos[static_cast<std::size_t>(v)][static_cast<std::size_t>(cu)];
        cu = v;
        ci = (p + 1) % static_cast<int>(ov.size());
      }
      ++f.count;
    }
  }
  return f;
}

// Max over vertices of (radial distance + 1) / 2, from face `outer`.
int radial_peels(std::size_t n, const Faces& f, int outer) {
  const std::size_t total = n + static_cast<std::size_t>(f.count);
  std::vector<std::vector<int>> adj(total);
  for (std::size_t u = 0; u < n; ++u) {
    for (int d = f.offset[u]; d < f.offset[u + 1]; ++d) {
      auto face = static_cast<std::size_t>(n) + static_cast<std::size_t>(f.face_of[static_cast<std::size_t>(d)]);
      adj[u].push_back(static_cast<int>(face));
      adj[face].push_back(static_cast<int>(u));
    }
  }
  std::vector<int> dist(total, -1);
  std::deque<int> q{static_cast<int>(n) + outer};
  dist[n + static_cast<std::size_t>(outer)] = 0;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int y : adj[static_cast<std::size_t>(x)]) {
      if (dist[static_cast<std::size_t>(y)] != -1) continue;
      dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
      q.push_back(y);
    }
  }
  int peels = 0;
  for (std::size_t u = 0; u < n; ++u) peels = std::max(peels, (dist[u] + 1) / 2);
  return peels;
}

int component_outerplanarity(const std::vector<std::vector<int>>& adj) {
  const std::size_t n = adj.size();
  std::size_t edges = 0;
  for (const auto& row : adj) edges += row.size();
  edges /= 2;
  if (edges == 0) return 1;

  std::vector<std::vector<int>> order = adj;
  std::vector<std::vector<int>> pos(n, std::vector<int>(n, -1));
  auto refresh = [&](std::size_t u) {
    for (std::size_t i = 0; i < order[u].size(); ++i) pos[u][static_cast<std::size_t>(order[u][i])] = static_cast<int>(i);
  };
  for (std::size_t u = 0; u < n; ++u) refresh(u);

  const int want_faces = static_cast<int>(edges) - static_cast<int>(n) + 2;
  int best = std::numeric_limits<int>::max();
  bool planar = false;
  for (;;) {
    Faces f = trace(order, pos);
    if (f.count == want_faces) {
      planar = true;
      for (int outer = 0; outer < f.count && best > 1; ++outer) best = std::min(best, radial_peels(n, f, outer));
      if (best == 1) return 1;
    }
    // Odometer over rotations, first neighbor fixed at every vertex.
    std::size_t u = 0;
    for (; u < n; ++u) {
      if (order[u].size() > 2 && std::next_permutation(order[u].begin() + 1, order[u].end())) {
        refresh(u);
        break;
      }
      if (order[u].size() > 2) refresh(u);
    }
    if (u == n) break;
  }
  if (!planar) fail(ErrorCode::kNotPlanar, "no rotation system has genus 0");
  return best;
}

}  // namespace

int brute_outerplanarity(const SimpleGraph& g, const OracleBudget& budget) {
  const std::size_t n = g.num_vertices();
  if (static_cast<int>(n) > budget.max_vertices) {
    fail(ErrorCode::kBudgetExceeded, std::to_string(n) + " vertices exceed the outerplanarity budget of " +
                                         std::to_string(budget.max_vertices));
  }
  if (n == 0) return 0;
  const auto adj = g.adjacency();
  std::vector<int> comp(n, -1);
  int result = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> members{static_cast<int>(s)};
    comp[s] = static_cast<int>(s);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (int v : adj[static_cast<std::size_t>(members[i])]) {
        if (comp[static_cast<std::size_t>(v)] == -1) {
          comp[static_cast<std::size_t>(v)] = static_cast<int>(s);
          members.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<std::vector<int>> local(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (int v : adj[static_cast<std::size_t>(members[i])]) {
        local[i].push_back(static_cast<int>(std::lower_bound(members.begin(), members.end(), v) - members.begin()));
      }
    }
    result = std::max(result, component_outerplanarity(local));
  }
  return result;
}

// ---------------------------------------------------------------------------

namespace {

Faces embedding_faces(const Embedding& g, std::vector<std::vector<int>>& order) {
  const std::size_t n = g.num_vertices();
  order.assign(n, {});
  for (std::size_t u = 0; u < n; ++u) {
    for (Dart d : g.rotation(static_cast<Vertex>(u))) order[u].push_back(g.target(d));
  }
  Faces f;
  f.offset.assign(n + 1, 0);
  for (std::size_t u = 0; u < n; ++u) f.offset[u + 1] = f.offset[u] + static_cast<int>(order[u].size());
  f.face_of.assign(static_cast<std::size_t>(f.offset[n]), -1);
  auto index = [&](Vertex u, Vertex v) {
    const auto& row = order[static_cast<std::size_t>(u)];
    return static_cast<int>(std::find(row.begin(), row.end(), v) - row.begin());
  };
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t i = 0; i < order[u].size(); ++i) {
      if (f.face_of[static_cast<std::size_t>(f.offset[u]) + i] != -1) continue;
      auto cu = static_cast<Vertex>(u);
      auto ci = static_cast<int>(i);
      while (f.face_of[static_cast<std::size_t>(f.offset[static_cast<std::size_t>(cu)] + ci)] == -1) {
        f.face_of[static_cast<std::size_t>(f.offset[static_cast<std::size_t>(cu)] + ci)] = f.count;
        Vertex v = order[static_cast<std::size_t>(cu)][static_cast<std::size_t>(ci)];
        int p = index(v, cu);
        ci = (p + 1) % static_cast<int>(order[static_cast<std::size_t>(v)].size());
        cu = v;
      }
      ++f.count;
    }
  }
  return f;
}

void require_connected(const Embedding& g) {
  if (num_components(g) > 1) fail(ErrorCode::kDisconnected, "oracle needs a connected embedding");
}

}  // namespace

int radial_peel_count(const Embedding& g, const FaceWalk& outer) {
  require_connected(g);
  if (g.num_edges() == 0) return g.num_vertices() > 0 ? 1 : 0;
  std::vector<std::vector<int>> order;
  Faces f = embedding_faces(g, order);
  Dart d = outer.darts.front();
  Vertex u = g.origin(d);
  const auto& row = order[static_cast<std::size_t>(u)];
  auto i = std::find(row.begin(), row.end(), g.target(d)) - row.begin();
  return radial_peels(g.num_vertices(), f, f.face_of[static_cast<std::size_t>(f.offset[static_cast<std::size_t>(u)] + i)]);
}

int min_peels_over_faces(const Embedding& g) {
  require_connected(g);
  if (g.num_edges() == 0) return g.num_vertices() > 0 ? 1 : 0;
  std::vector<std::vector<int>> order;
  Faces f = embedding_faces(g, order);
  int best = std::numeric_limits<int>::max();
  for (int outer = 0; outer < f.count; ++outer) best = std::min(best, radial_peels(g.num_vertices(), f, outer));
  return best;
}

std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * static_cast<std::uint64_t>(2 * i + 1) / static_cast<std::uint64_t>(i + 2);
  return c;
}

void for_each_face_triangulation(const Embedding& g, const FaceWalk& face, const OracleBudget& budget,
                                 const std::function<void(const Embedding&)>& fn) {
  require_connected(g);
  const std::size_t m = face.darts.size();
  std::vector<Vertex> w;
  for (Dart d : face.darts) w.push_back(g.origin(d));
  if (std::set<Vertex>(w.begin(), w.end()).size() != m) fail(ErrorCode::kFaceNotSimple, "face repeats a vertex");

  const auto walks = trace_faces(g);
  std::vector<std::vector<Label>> kept;
  bool found = false;
  for (const FaceWalk& other : walks) {
    if (other.darts == face.darts) {
      found = true;
      continue;
    }
    if (other.darts.size() != 3) fail(ErrorCode::kBadParameter, "another face is not a triangle");
    std::vector<Label> f;
    for (Dart d : other.darts) f.push_back(g.label(g.origin(d)));
    kept.push_back(f);
  }
  if (!found) fail(ErrorCode::kNotOnFace, "face is not a face walk of the embedding");
  if (m == 3) {
    fn(g);
    return;
  }
  if (m - 2 > 33 || catalan(static_cast<int>(m) - 2) > budget.max_chord_sets) {
    fail(ErrorCode::kBudgetExceeded, "face of length " + std::to_string(m) + " has too many triangulations");
  }

  std::vector<Label> vertices(g.labels().begin(), g.labels().end());
  const auto outer = g.dart_key(g.outer_darts().front());
  std::vector<std::array<std::size_t, 3>> tris;
  std::vector<std::pair<std::size_t, std::size_t>> pending{{0, m - 1}};

  auto emit = [&]() {
    for (const auto& t : tris) {
      for (std::size_t a = 0; a < 3; ++a) {
        std::size_t i = t[a];
        std::size_t j = t[(a + 1) % 3];
        bool side = (j == i + 1) || (i == 0 && j == m - 1) || (j == 0 && i == m - 1);
        if (!side && g.adjacent(w[i], w[j])) return;
      }
    }
    auto faces = kept;
    for (const auto& t : tris) faces.push_back({g.label(w[t[0]]), g.label(w[t[1]]), g.label(w[t[2]])});
    fn(embedding_from_faces(vertices, faces, outer));
  };
  auto rec = [&](auto&& self) -> void {
    if (pending.empty()) {
      emit();
      return;
    }
    auto [i, j] = pending.back();
    pending.pop_back();
    if (j - i < 2) {
      self(self);
    } else {
      for (std::size_t k = i + 1; k < j; ++k) {
        tris.push_back({i, k, j});
        pending.emplace_back(k, j);
        pending.emplace_back(i, k);
        self(self);
        pending.pop_back();
        pending.pop_back();
        tris.pop_back();
      }
    }
    pending.emplace_back(i, j);
  };
  rec(rec);
}

std::vector<Embedding> enumerate_face_triangulations(const Embedding& g, const FaceWalk& face,
                                                     const OracleBudget& budget) {
  std::vector<Embedding> out;
  for_each_face_triangulation(g, face, budget, [&](const Embedding& t) { out.push_back(t); });
  return out;
}

bool is_three_connected(const SimpleGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 4) return false;
  const auto adj = g.adjacency();
  auto connected_without = [&](std::size_t a, std::size_t b) {
    std::vector<bool> seen(n, false);
    seen[a] = seen[b] = true;
    std::size_t start = 0;
    while (seen[start]) ++start;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (int y : adj[x]) {
        if (seen[static_cast<std::size_t>(y)]) continue;
        seen[static_cast<std::size_t>(y)] = true;
        ++reached;
        stack.push_back(static_cast<std::size_t>(y));
      }
    }
    return reached + (a == b ? 1 : 2) == n;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      if (!connected_without(a, b)) return false;
    }
  }
  return true;
}

int oracle_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ONIONPEEL_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 256L));
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

Theorem1Report certify_theorem1(int k, const OracleBudget& budget, int threads) {
  if (k < 1) fail(ErrorCode::kBadParameter, "certify_theorem1 needs k >= 1");
  Theorem1Report r;
  r.k = k;
  const Embedding g = k == 1 ? gen_k4_minus_edge() : gen_counterexample(k);
  const SimpleGraph sg = underlying_graph(g);
  r.vertices = static_cast<int>(g.num_vertices());
  r.three_connected = is_three_connected(sg);

  const FaceWalk* open = nullptr;
  const auto walks = trace_faces(g);
  for (const FaceWalk& w : walks) {
    if (w.darts.size() == 3) continue;
    if (open) fail(ErrorCode::kInternal, "more than one non-triangular face");
    open = &w;
  }
  if (!open) fail(ErrorCode::kInternal, "input is already a triangulation");
  std::vector<Embedding> tris = enumerate_face_triangulations(g, *open, budget);
  r.triangulations = tris.size();

  std::vector<int> value(tris.size(), 0);
  if (k == 1) {
    // Four vertices, six edges: every maximal planar supergraph is K4.
    for (std::size_t i = 0; i < tris.size(); ++i) {
      if (tris[i].num_edges() != 6) fail(ErrorCode::kInternal, "triangulation of K4 minus an edge is not K4");
      value[i] = brute_outerplanarity(underlying_graph(tris[i]), budget);
    }
    r.method = "K4 minus an edge: its only triangulation is K4; outerplanarity by brute force over all rotation systems";
  } else {
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
      for (std::size_t i = next++; i < tris.size(); i = next++) value[i] = min_peels_over_faces(tris[i]);
    };
    const int t = std::min<int>(oracle_threads(threads), static_cast<int>(std::max<std::size_t>(tris.size(), 1)));
    std::vector<std::thread> pool;
    for (int i = 1; i < t; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    r.method = r.three_connected
                   ? "3-connected, so the embedding is unique: every triangulation fills the octagon; minimum peel "
                     "count over all outer faces of each"
                   : "not 3-connected: embedding uniqueness unavailable, enumeration is not exhaustive";
  }
  r.min_outerplanarity = value.empty() ? 0 : *std::min_element(value.begin(), value.end());
  r.holds = !value.empty() && r.min_outerplanarity >= k + 1 && (k == 1 || r.three_connected);
  return r;
}

}  // namespace onionpeel
