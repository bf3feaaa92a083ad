// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#include "onionpeel/branch.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include "onionpeel/error.hpp"
#include "onionpeel/triangulate.hpp"

namespace onionpeel {

std::string_view node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::kFace: return "face";
    case NodeKind::kArc: return "arc";
    case NodeKind::kEdge: return "edge";
  }
  return "unknown";
}

namespace {

struct UnionFind {
  std::vector<std::int32_t> up;
  explicit UnionFind(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  std::int32_t find(std::int32_t x) {
    while (up[static_cast<std::size_t>(x)] != x) {
      up[static_cast<std::size_t>(x)] = up[static_cast<std::size_t>(up[static_cast<std::size_t>(x)])];
      x = up[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    up[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }
};

Dart canonical_dart(const Embedding& g, std::size_t e) {
  auto d = static_cast<Dart>(2 * e);
  return g.dart_less(d, Embedding::twin(d)) ? d : Embedding::twin(d);
}

// Edge indices sorted by canonical key.
std::vector<std::size_t> edges_by_key(const Embedding& g) {
  std::vector<std::size_t> order(g.num_edges());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return g.dart_less(canonical_dart(g, a), canonical_dart(g, b)); });
  return order;
}

std::vector<bool> forest_edge_mask(const Embedding& g, const RootedForest& forest) {
  std::vector<bool> in_forest(g.num_edges(), false);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    Vertex p = forest.parent[v];
    if (p == kNoVertex) continue;
    in_forest[static_cast<std::size_t>(*g.find_dart(static_cast<Vertex>(v), p) / 2)] = true;
  }
  return in_forest;
}

std::vector<bool> outer_edge_mask(const Embedding& g, const FaceTable& t) {
  std::vector<bool> outer(g.num_edges(), false);
  for (const FaceWalk& w : t.walks) {
    if (!w.is_outer) continue;
    for (Dart d : w.darts) outer[static_cast<std::size_t>(d / 2)] = true;
  }
  return outer;
}

LabelEdge label_edge(const Embedding& g, Dart d) {
  Label a = g.label(g.origin(d));
  Label b = g.label(g.target(d));
  return {std::min(a, b), std::max(a, b)};
}

std::vector<std::vector<std::int32_t>> adjacency(const BranchDecomposition& bd) {
  std::vector<std::vector<std::int32_t>> adj(bd.nodes.size());
  for (std::size_t i = 0; i < bd.arcs.size(); ++i) {
    adj[static_cast<std::size_t>(bd.arcs[i].first)].push_back(static_cast<std::int32_t>(i));
    adj[static_cast<std::size_t>(bd.arcs[i].second)].push_back(static_cast<std::int32_t>(i));
  }
  return adj;
}

std::int32_t other_end(const BranchDecomposition& bd, std::int32_t arc, std::int32_t x) {
  const auto& a = bd.arcs[static_cast<std::size_t>(arc)];
  return a.first == x ? a.second : a.first;
}

// Dense vertex ids in label order, plus edge count per vertex.
struct VertexIndex {
  std::vector<Label> labels;
  std::vector<int> degree;

  explicit VertexIndex(const std::vector<LabelEdge>& edges) {
    for (const auto& [u, v] : edges) {
      labels.push_back(u);
      labels.push_back(v);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    degree.assign(labels.size(), 0);
    for (const auto& [u, v] : edges) {
      ++degree[id(u)];
      ++degree[id(v)];
    }
  }
  std::size_t id(Label l) const {
    return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
  }
};

}  // namespace

DualTree build_dual_tree(const Embedding& disk, const RootedForest& forest) {
  if (!is_triangulated_disk(disk)) fail(ErrorCode::kNotADisk, "input is not a triangulated disk");
  validate_forest(disk, forest);
  const FaceTable t = face_table(disk);
  const auto in_forest = forest_edge_mask(disk, forest);
  const auto on_outer = outer_edge_mask(disk, t);
  const auto order = edges_by_key(disk);

  // F+ = forest plus every outer edge except the smallest one.
  {
    UnionFind uf(disk.num_vertices());
    std::size_t used = 0;
    bool skipped = false;
    for (std::size_t e : order) {
      bool take = in_forest[e];
      if (!take && on_outer[e]) {
        if (skipped) take = true;
        skipped = true;
      }
      if (!take) continue;
      ++used;
      if (!uf.unite(disk.origin(static_cast<Dart>(2 * e)), disk.target(static_cast<Dart>(2 * e)))) {
        fail(ErrorCode::kNotATree, "forest plus outer edges contains a cycle");
      }
    }
    if (used + 1 != disk.num_vertices()) fail(ErrorCode::kNotATree, "forest plus outer edges does not span");
  }

  DualTree tree;
  std::vector<std::int32_t> node_of(t.walks.size(), -1);
  for (std::size_t f = 0; f < t.walks.size(); ++f) {
    if (t.walks[f].is_outer) continue;
    node_of[f] = static_cast<std::int32_t>(tree.face_walk.size());
    tree.face_walk.push_back(static_cast<std::int32_t>(f));
  }
  UnionFind uf(tree.face_walk.size());
  for (std::size_t e : order) {
    if (in_forest[e] || on_outer[e]) continue;
    Dart c = canonical_dart(disk, e);
    std::int32_t a = node_of[static_cast<std::size_t>(t.face_of[static_cast<std::size_t>(c)])];
    std::int32_t b = node_of[static_cast<std::size_t>(t.face_of[static_cast<std::size_t>(Embedding::twin(c))])];
    if (!uf.unite(a, b)) fail(ErrorCode::kNotATree, "dual arcs contain a cycle");
    tree.arcs.push_back({a, b, c});
  }
  if (tree.arcs.size() + 1 != tree.face_walk.size()) fail(ErrorCode::kNotATree, "dual arcs do not connect the inner faces");
  return tree;
}

BranchDecomposition build_branch_tree(const DualTree& tree, const Embedding& disk, const RootedForest& forest) {
  (void)forest;
  const FaceTable t = face_table(disk);
  const std::size_t num_faces = tree.face_walk.size();
  const std::size_t num_arcs = tree.arcs.size();
  std::vector<std::int32_t> node_of(t.walks.size(), -1);
  for (std::size_t i = 0; i < num_faces; ++i) node_of[static_cast<std::size_t>(tree.face_walk[i])] = static_cast<std::int32_t>(i);

  BranchDecomposition bd;
  for (std::size_t i = 0; i < num_faces; ++i) bd.nodes.push_back({NodeKind::kFace, static_cast<std::int32_t>(i), {}});
  std::vector<std::int32_t> arc_of_edge(disk.num_edges(), -1);
  std::vector<int> tree_degree(num_faces, 0);
  for (std::size_t i = 0; i < num_arcs; ++i) {
    const DualEdge& a = tree.arcs[i];
    auto id = static_cast<std::int32_t>(bd.nodes.size());
    bd.nodes.push_back({NodeKind::kArc, -1, label_edge(disk, a.primal)});
    bd.arcs.emplace_back(a.a, id);
    bd.arcs.emplace_back(a.b, id);
    arc_of_edge[static_cast<std::size_t>(a.primal / 2)] = id;
    ++tree_degree[static_cast<std::size_t>(a.a)];
    ++tree_degree[static_cast<std::size_t>(a.b)];
  }

  // Default attachment for edges off T*: the inner face on the canonical side.
  const auto order = edges_by_key(disk);
  std::vector<std::int32_t> attach(disk.num_edges(), -1);
  for (std::size_t e : order) {
    if (arc_of_edge[e] != -1) continue;
    Dart c = canonical_dart(disk, e);
    std::int32_t f = node_of[static_cast<std::size_t>(t.face_of[static_cast<std::size_t>(c)])];
    if (f == -1) f = node_of[static_cast<std::size_t>(t.face_of[static_cast<std::size_t>(Embedding::twin(c))])];
    attach[e] = f;
  }

  // A face node with one T* arc must keep at least one edge leaf, or it
  // would end up a leaf itself. Match such faces to distinct off-tree edges.
  if (num_faces > 1) {
    std::vector<std::vector<std::size_t>> options(num_faces);
    std::vector<std::size_t> needy;
    for (std::size_t f = 0; f < num_faces; ++f) {
      if (tree_degree[f] != 1) continue;
      needy.push_back(f);
      for (Dart d : t.walks[static_cast<std::size_t>(tree.face_walk[f])].darts) {
        auto e = static_cast<std::size_t>(d / 2);
        if (arc_of_edge[e] == -1) options[f].push_back(e);
      }
      std::sort(options[f].begin(), options[f].end(), [&](std::size_t a, std::size_t b) {
        return disk.dart_less(canonical_dart(disk, a), canonical_dart(disk, b));
      });
    }
    std::vector<std::int32_t> owner(disk.num_edges(), -1);
    std::vector<bool> matched(num_faces, false);
    for (std::size_t f : needy) {
      for (std::size_t e : options[f]) {
        if (attach[e] == static_cast<std::int32_t>(f) && owner[e] == -1) {
          owner[e] = static_cast<std::int32_t>(f);
          matched[f] = true;
          break;
        }
      }
    }
    std::vector<int> seen(disk.num_edges(), -1);
    auto augment = [&](auto&& self, std::size_t f, int round) -> bool {
      for (std::size_t e : options[f]) {
        if (seen[e] == round) continue;
        seen[e] = round;
        if (owner[e] == -1 || self(self, static_cast<std::size_t>(owner[e]), round)) {
          owner[e] = static_cast<std::int32_t>(f);
          return true;
        }
      }
      return false;
    };
    int round = 0;
    for (std::size_t f : needy) {
      if (matched[f]) continue;
      if (!augment(augment, f, round++)) {
        fail(ErrorCode::kInternal, "face node " + std::to_string(f) + " cannot keep an edge leaf");
      }
      matched[f] = true;
    }
    for (std::size_t e = 0; e < owner.size(); ++e) {
      if (owner[e] != -1) attach[e] = owner[e];
    }
  }

  for (std::size_t e : order) {
    auto id = static_cast<std::int32_t>(bd.nodes.size());
    LabelEdge le = label_edge(disk, static_cast<Dart>(2 * e));
    bd.nodes.push_back({NodeKind::kEdge, -1, le});
    bd.edges.push_back(le);
    bd.leaf_of_edge.push_back(id);
    bd.arcs.emplace_back(arc_of_edge[e] != -1 ? arc_of_edge[e] : attach[e], id);
  }

  std::vector<int> degree(bd.nodes.size(), 0);
  for (const auto& [a, b] : bd.arcs) {
    ++degree[static_cast<std::size_t>(a)];
    ++degree[static_cast<std::size_t>(b)];
  }
  for (std::size_t x = 0; x < degree.size(); ++x) {
    if (degree[x] > 3) {
      fail(ErrorCode::kDegreeOverflow, "node " + std::to_string(x) + " has degree " + std::to_string(degree[x]));
    }
  }
  bd.width = compute_width(bd).width;
  return bd;
}

WidthReport compute_width(const BranchDecomposition& bd) {
  WidthReport report;
  const std::size_t n = bd.nodes.size();
  report.cuts.resize(bd.arcs.size());
  for (std::size_t i = 0; i < bd.arcs.size(); ++i) report.cuts[i].arc = static_cast<std::int32_t>(i);
  if (n == 0) return report;

  const VertexIndex vi(bd.edges);
  const auto adj = adjacency(bd);
  std::vector<std::vector<std::size_t>> edges_at(n);
  for (std::size_t j = 0; j < bd.edges.size(); ++j) edges_at[static_cast<std::size_t>(bd.leaf_of_edge[j])].push_back(j);

  // Preorder from node 0; parent arc per node.
  std::vector<std::int32_t> up_arc(n, -1);
  std::vector<std::int32_t> order;
  std::vector<bool> visited(n, false);
  std::vector<std::int32_t> stack{0};
  visited[0] = true;
  while (!stack.empty()) {
    std::int32_t x = stack.back();
    stack.pop_back();
    order.push_back(x);
    for (std::int32_t a : adj[static_cast<std::size_t>(x)]) {
      std::int32_t y = other_end(bd, a, x);
      if (visited[static_cast<std::size_t>(y)]) continue;
      visited[static_cast<std::size_t>(y)] = true;
      up_arc[static_cast<std::size_t>(y)] = a;
      stack.push_back(y);
    }
  }

  struct Side {
    std::unordered_map<std::size_t, int> count;
    std::set<std::size_t> partial;  // 0 < count < degree
  };
  std::vector<Side> side(n);
  auto bump = [&](Side& s, std::size_t v, int by) {
    int c = (s.count[v] += by);
    if (c == vi.degree[v]) {
      s.partial.erase(v);
    } else {
      s.partial.insert(v);
    }
  };
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto x = static_cast<std::size_t>(*it);
    Side& s = side[x];
    for (std::size_t j : edges_at[x]) {
      bump(s, vi.id(bd.edges[j].first), 1);
      bump(s, vi.id(bd.edges[j].second), 1);
    }
    if (up_arc[x] == -1) continue;
    ArcCut& cut = report.cuts[static_cast<std::size_t>(up_arc[x])];
    for (std::size_t v : s.partial) cut.crossing.push_back(vi.labels[v]);
    report.width = std::max(report.width, static_cast<int>(cut.crossing.size()));
    auto p = static_cast<std::size_t>(other_end(bd, up_arc[x], static_cast<std::int32_t>(x)));
    Side& ps = side[p];
    if (ps.count.size() < s.count.size()) std::swap(ps, s);
    for (const auto& [v, c] : s.count) bump(ps, v, c);
    s = Side{};
  }
  return report;
}

std::vector<ArcCut> crossing_sets_by_bipartition(const BranchDecomposition& bd) {
  const VertexIndex vi(bd.edges);
  const auto adj = adjacency(bd);
  std::vector<ArcCut> cuts;
  for (std::size_t i = 0; i < bd.arcs.size(); ++i) {
    std::vector<bool> near(bd.nodes.size(), false);
    std::vector<std::int32_t> stack{bd.arcs[i].first};
    near[static_cast<std::size_t>(bd.arcs[i].first)] = true;
    while (!stack.empty()) {
      std::int32_t x = stack.back();
      stack.pop_back();
      for (std::int32_t a : adj[static_cast<std::size_t>(x)]) {
        if (static_cast<std::size_t>(a) == i) continue;
        std::int32_t y = other_end(bd, a, x);
        if (near[static_cast<std::size_t>(y)]) continue;
        near[static_cast<std::size_t>(y)] = true;
        stack.push_back(y);
      }
    }
    std::vector<bool> in_near(vi.labels.size(), false);
    std::vector<bool> in_far(vi.labels.size(), false);
    for (std::size_t j = 0; j < bd.edges.size(); ++j) {
      auto& mark = near[static_cast<std::size_t>(bd.leaf_of_edge[j])] ? in_near : in_far;
      mark[vi.id(bd.edges[j].first)] = true;
      mark[vi.id(bd.edges[j].second)] = true;
    }
    ArcCut cut{static_cast<std::int32_t>(i), {}};
    for (std::size_t v = 0; v < vi.labels.size(); ++v) {
      if (in_near[v] && in_far[v]) cut.crossing.push_back(vi.labels[v]);
    }
    cuts.push_back(std::move(cut));
  }
  return cuts;
}

void validate_branch_decomposition(const BranchDecomposition& bd) {
  const std::size_t n = bd.nodes.size();
  if (n == 0) fail(ErrorCode::kInvalidArtifact, "empty tree");
  if (bd.arcs.size() + 1 != n) fail(ErrorCode::kInvalidArtifact, "arc count is not node count minus one");
  UnionFind uf(n);
  std::vector<int> degree(n, 0);
  for (const auto& [a, b] : bd.arcs) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
      fail(ErrorCode::kInvalidArtifact, "arc endpoint out of range");
    }
    if (!uf.unite(a, b)) fail(ErrorCode::kInvalidArtifact, "tree contains a cycle");
    ++degree[static_cast<std::size_t>(a)];
    ++degree[static_cast<std::size_t>(b)];
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (degree[x] > 3) fail(ErrorCode::kInvalidArtifact, "node " + std::to_string(x) + " has degree above 3");
    bool leaf = degree[x] <= 1;
    bool edge_node = bd.nodes[x].kind == NodeKind::kEdge;
    if (leaf != edge_node) {
      fail(ErrorCode::kInvalidArtifact, "node " + std::to_string(x) + (leaf ? " is a leaf but not an edge node"
                                                                            : " is an edge node but not a leaf"));
    }
  }
  if (bd.leaf_of_edge.size() != bd.edges.size()) fail(ErrorCode::kInvalidArtifact, "assignment size mismatch");
  std::vector<bool> used(n, false);
  for (std::size_t j = 0; j < bd.edges.size(); ++j) {
    const LabelEdge& e = bd.edges[j];
    if (e.first >= e.second) fail(ErrorCode::kInvalidArtifact, "edge endpoints not ordered");
    if (j > 0 && !(bd.edges[j - 1] < e)) fail(ErrorCode::kInvalidArtifact, "edges not sorted and distinct");
    std::int32_t leaf = bd.leaf_of_edge[j];
    if (leaf < 0 || static_cast<std::size_t>(leaf) >= n) fail(ErrorCode::kInvalidArtifact, "leaf out of range");
    const BranchNode& node = bd.nodes[static_cast<std::size_t>(leaf)];
    if (node.kind != NodeKind::kEdge || node.edge != e) {
      fail(ErrorCode::kInvalidArtifact, "edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                                            " assigned to a node that does not carry it");
    }
    if (used[static_cast<std::size_t>(leaf)]) fail(ErrorCode::kInvalidArtifact, "assignment is not injective");
    used[static_cast<std::size_t>(leaf)] = true;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (bd.nodes[x].kind == NodeKind::kEdge && !used[x]) {
      fail(ErrorCode::kInvalidArtifact, "edge node " + std::to_string(x) + " has no edge");
    }
  }
}

int treewidth_bound(int bw) {
  if (bw < 0) fail(ErrorCode::kBadParameter, "branchwidth must be non-negative");
  return std::max(1, 3 * bw / 2 - 1);
}

WidthCertificate certify_width_bound(const Embedding& disk, const RootedForest& forest, const BranchDecomposition& bd) {
  validate_forest(disk, forest);
  const WidthReport report = compute_width(bd);
  WidthCertificate cert;
  cert.k = onion_peels(disk).k();
  cert.height = forest.height();
  cert.width = report.width;
  cert.bound_2h = 2 * (cert.height + 1);
  cert.tw_bound = treewidth_bound(report.width);
  if (cert.width > cert.bound_2h) {
    fail(ErrorCode::kBoundViolated,
         "width " + std::to_string(cert.width) + " exceeds 2h = " + std::to_string(cert.bound_2h));
  }

  auto vertex = [&](Label l) {
    auto v = disk.vertex_of(l);
    if (!v) fail(ErrorCode::kInvalidArtifact, "decomposition names unknown vertex " + std::to_string(l));
    return *v;
  };
  auto check = [&](std::size_t i, const std::set<Label>& allowed, const std::string& what) {
    for (Label l : report.cuts[i].crossing) {
      if (!allowed.count(l)) {
        fail(ErrorCode::kBoundViolated, "vertex " + std::to_string(l) + " crosses arc " + std::to_string(i) +
                                            " but is not on its " + what);
      }
    }
  };

  for (std::size_t i = 0; i < bd.arcs.size(); ++i) {
    const BranchNode& x = bd.nodes[static_cast<std::size_t>(bd.arcs[i].first)];
    const BranchNode& y = bd.nodes[static_cast<std::size_t>(bd.arcs[i].second)];
    if (x.kind == NodeKind::kEdge || y.kind == NodeKind::kEdge) {
      const LabelEdge& e = (x.kind == NodeKind::kEdge ? x : y).edge;
      check(i, {e.first, e.second}, "edge");
      continue;
    }
    const LabelEdge& e = (x.kind == NodeKind::kArc ? x : y).edge;
    auto p1 = forest.path_to_root(vertex(e.first));
    auto p2 = forest.path_to_root(vertex(e.second));
    std::string what = "root-path separator";
    if (p1.back() == p2.back()) {
      while (p1.size() > 1 && p2.size() > 1 && p1[p1.size() - 2] == p2[p2.size() - 2]) {
        p1.pop_back();
        p2.pop_back();
      }
      what = "cycle separator";
    }
    std::set<Label> allowed;
    for (Vertex v : p1) allowed.insert(disk.label(v));
    for (Vertex v : p2) allowed.insert(disk.label(v));
    check(i, allowed, what);
    ++cert.separators_checked;
  }
  return cert;
}

PipelineResult decompose(const Embedding& g) {
  const int k = onion_peels(g).k();
  DiskConversion c = convert_to_disk(g);
  DualTree tree = build_dual_tree(c.disk, c.forest);
  BranchDecomposition bd = build_branch_tree(tree, c.disk, c.forest);
  WidthCertificate cert = certify_width_bound(c.disk, c.forest, bd);
  cert.k = k;
  if (cert.height + 1 > k) {
    fail(ErrorCode::kBoundViolated, "forest height " + std::to_string(cert.height) + " exceeds k - 1 = " +
                                        std::to_string(k - 1));
  }
  if (cert.width > 2 * k) {
    fail(ErrorCode::kBoundViolated, "width " + std::to_string(cert.width) + " exceeds 2k = " + std::to_string(2 * k));
  }
  if (cert.tw_bound > 3 * k - 1) {
    fail(ErrorCode::kBoundViolated,
         "treewidth bound " + std::to_string(cert.tw_bound) + " exceeds 3k - 1 = " + std::to_string(3 * k - 1));
  }
  return {std::move(c.disk), std::move(c.forest), std::move(bd), cert};
}

WidthCertificate decompose_pipeline(const Embedding& g) { return decompose(g).certificate; }

}  // namespace onionpeel
