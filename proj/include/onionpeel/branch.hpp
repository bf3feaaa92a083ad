// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "onionpeel/embedding.hpp"
#include "onionpeel/peel.hpp"

namespace onionpeel {

/// Inner-face dual minus the duals of forest edges and outer edges.
struct DualTree {
  std::vector<std::int32_t> face_walk;  // node -> index into face_table(disk).walks
  std::vector<DualEdge> arcs;           // a, b are node ids; primal is the canonical dart
};

/// Throws NotADisk, InvalidForest, NotATree. Also checks that the forest plus
/// all outer edges but the smallest one is a spanning tree.
DualTree build_dual_tree(const Embedding& disk, const RootedForest& forest);

enum class NodeKind { kFace, kArc, kEdge };
std::string_view node_kind_name(NodeKind k);

using LabelEdge = std::pair<Label, Label>;  // first < second

struct BranchNode {
  NodeKind kind = NodeKind::kFace;
  std::int32_t face = -1;  // face nodes: DualTree node id
  LabelEdge edge{};        // arc and edge nodes: the primal edge
};

/// Node ids: face nodes first, then arc nodes, then edge nodes (by edge).
struct BranchDecomposition {
  std::vector<BranchNode> nodes;
  std::vector<std::pair<std::int32_t, std::int32_t>> arcs;
  std::vector<LabelEdge> edges;            // sorted
  std::vector<std::int32_t> leaf_of_edge;  // parallel to `edges`
  int width = 0;
};

/// Subdivides every arc of T* and hangs one leaf per graph edge. Edges off
/// T* go to the inner face on their canonical dart's side unless a matching
/// step must move them to keep face nodes off the leaves. Throws
/// DegreeOverflow.
BranchDecomposition build_branch_tree(const DualTree& tree, const Embedding& disk, const RootedForest& forest);

struct ArcCut {
  std::int32_t arc = 0;
  std::vector<Label> crossing;  // sorted
};

struct WidthReport {
  int width = 0;
  std::vector<ArcCut> cuts;  // one per arc, in arc order
};

/// One bottom-up pass with small-to-large merging of per-vertex counts.
WidthReport compute_width(const BranchDecomposition& bd);

/// Same cuts straight from the definition, one traversal per arc.
std::vector<ArcCut> crossing_sets_by_bipartition(const BranchDecomposition& bd);

/// Checks the tree shape (acyclic, connected, max degree 3, leaves are
/// exactly the edge nodes, assignment injective). Throws InvalidArtifact.
void validate_branch_decomposition(const BranchDecomposition& bd);

int treewidth_bound(int bw);

struct WidthCertificate {
  int k = 0;          // peels of the input
  int height = 0;     // forest height
  int width = 0;
  int bound_2h = 0;   // 2 * (height + 1)
  int tw_bound = 0;   // treewidth_bound(width)
  std::size_t separators_checked = 0;
};

/// width <= 2 (height + 1), and every cut between a face node and an arc
/// node lies on the root-path separator of its edge. Throws BoundViolated.
WidthCertificate certify_width_bound(const Embedding& disk, const RootedForest& forest,
                                     const BranchDecomposition& bd);

struct PipelineResult {
  Embedding disk;
  RootedForest forest;
  BranchDecomposition bd;
  WidthCertificate certificate;
};

/// Disk conversion, forest, T*, T2, width and certificate; also checks
/// width <= 2k and tw bound <= 3k - 1 (BoundViolated).
PipelineResult decompose(const Embedding& g);
WidthCertificate decompose_pipeline(const Embedding& g);

}  // namespace onionpeel
