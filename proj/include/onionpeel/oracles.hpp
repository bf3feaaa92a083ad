// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "onionpeel/embedding.hpp"

namespace onionpeel {

struct OracleBudget {
  int max_edges = 9;
  int max_vertices = 7;
  std::uint64_t max_chord_sets = 1000000;
};

/// Abstract simple graph; edges are index pairs with first < second.
struct SimpleGraph {
  std::vector<Label> labels;
  std::vector<std::pair<int, int>> edges;

  std::size_t num_vertices() const { return labels.size(); }
  std::vector<std::vector<int>> adjacency() const;
};

SimpleGraph underlying_graph(const Embedding& g);

/// Exact branchwidth over all unrooted binary trees on the edges; 0 for
/// graphs with at most one edge. Throws BudgetExceeded.
int brute_branchwidth(const SimpleGraph& g, const OracleBudget& budget = {});

/// Exact outerplanarity: minimum peel count over every rotation system of
/// genus 0 and every outer face, per component. Throws BudgetExceeded,
/// NotPlanar.
int brute_outerplanarity(const SimpleGraph& g, const OracleBudget& budget = {});

/// Peel count of a fixed embedding with the given face walk as outer face,
/// by radial distance (vertex at distance 2i-1 from the outer face lies in
/// peel i). Connected embeddings only.
int radial_peel_count(const Embedding& g, const FaceWalk& outer);

/// Minimum of radial_peel_count over all faces.
int min_peels_over_faces(const Embedding& g);

std::uint64_t catalan(int n);

/// Every triangulation of the simple face `face` whose chords avoid
/// existing edges. The outer dart is kept. Throws FaceNotSimple,
/// BudgetExceeded, BadParameter (another face is not a triangle).
void for_each_face_triangulation(const Embedding& g, const FaceWalk& face, const OracleBudget& budget,
                                 const std::function<void(const Embedding&)>& fn);
std::vector<Embedding> enumerate_face_triangulations(const Embedding& g, const FaceWalk& face,
                                                     const OracleBudget& budget = {});

/// Connected, at least four vertices, and connected after removing any two.
bool is_three_connected(const SimpleGraph& g);

struct Theorem1Report {
  int k = 0;
  int vertices = 0;
  bool three_connected = false;
  std::size_t triangulations = 0;
  int min_outerplanarity = 0;
  bool holds = false;  // min_outerplanarity >= k + 1
  std::string method;
};

/// k = 1: K4 minus an edge, brute outerplanarity of its only triangulation.
/// k >= 2: counterexample G_k, 3-connectivity, then every triangulation of
/// its octagon with the minimum peel count over all outer faces.
/// `threads` <= 0 reads ONIONPEEL_THREADS (default: hardware concurrency).
Theorem1Report certify_theorem1(int k, const OracleBudget& budget = {}, int threads = 0);

int oracle_threads(int requested);

}  // namespace onionpeel
