// Copyright 2026 The OrbiDR Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbidr/errors.hpp"

namespace orbidr {

/// Dual graph of a stable curve: vertices carry genera, edges are nodes
/// (self-edges allowed), legs are the n ordered markings.
///
/// Half-edge numbering: legs are 0..n-1; edge e contributes half-edges
/// n + 2e (on edge(e).first) and n + 2e + 1 (on edge(e).second). Edges are
/// stored with first <= second.
class StableGraph {
 public:
  StableGraph() = default;
  StableGraph(std::vector<int> genus, std::vector<std::pair<int, int>> edges,
              std::vector<int> leg_vertex);

  int num_vertices() const { return static_cast<int>(genus_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_legs() const { return static_cast<int>(leg_vertex_.size()); }
  int num_half_edges() const { return num_legs() + 2 * num_edges(); }

  int genus_of(int v) const { return genus_[static_cast<size_t>(v)]; }
  const std::pair<int, int>& edge(int e) const { return edges_[static_cast<size_t>(e)]; }
  int leg_vertex(int i) const { return leg_vertex_[static_cast<size_t>(i)]; }

  bool is_leg(int h) const { return h < num_legs(); }
  int edge_of_half(int h) const { return (h - num_legs()) / 2; }
  int side_of_half(int h) const { return (h - num_legs()) % 2; }
  /// The other half of the same edge; legs have no partner.
  int other_half(int h) const;
  int vertex_of_half(int h) const;
  std::vector<int> half_edges_at(int v) const;
  int valence(int v) const { return static_cast<int>(half_edges_at(v).size()); }

  /// h1 = |E| - |V| + 1.
  int h1() const { return num_edges() - num_vertices() + 1; }
  /// Total genus: sum of vertex genera plus h1.
  int total_genus() const;

  bool is_connected() const;
  /// Stability at every vertex: 2 g(v) - 2 + valence(v) > 0.
  bool is_stable() const;
  /// Throws Error on malformed data, Unstable on a stability violation.
  void validate() const;

  /// Stable text encoding of the labeled graph, e.g.
  /// "v0:g=1;v1:g=0|E:0-1,1-1|L0@0,L1@1" (edges as vertex pairs in stored
  /// order, legs in marking order).
  std::string encode() const;

  /// Apply a relabeling of vertices: vertex v becomes perm[v].
  StableGraph relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const StableGraph& a, const StableGraph& b) {
    return a.genus_ == b.genus_ && a.edges_ == b.edges_ && a.leg_vertex_ == b.leg_vertex_;
  }
  friend bool operator<(const StableGraph& a, const StableGraph& b) {
    if (a.genus_ != b.genus_) return a.genus_ < b.genus_;
    if (a.edges_ != b.edges_) return a.edges_ < b.edges_;
    return a.leg_vertex_ < b.leg_vertex_;
  }

 private:
  std::vector<int> genus_;                   // per vertex
  std::vector<std::pair<int, int>> edges_;   // first <= second
  std::vector<int> leg_vertex_;              // per leg
};

/// A structure-preserving relabeling: a vertex permutation together with the
/// induced half-edge permutation (identity on legs).
struct GraphAut {
  std::vector<int> vertex_perm;
  std::vector<int> half_edge_perm;
};

/// Canonical representative of the isomorphism class: the relabeling with
/// lexicographically minimal (genus list, edge list, leg list). Idempotent.
StableGraph canonicalize(const StableGraph& graph);

/// All automorphisms fixing legs pointwise (including half-edge swaps within
/// self-edges). Graph must be valid.
std::vector<GraphAut> graph_automorphisms(const StableGraph& graph);

/// |Aut|, same counting as graph_automorphisms.
long automorphism_order(const StableGraph& graph);

/// All stable graphs of genus g with n legs, canonical, sorted by encoding.
/// Cached per (g, n). Throws Unstable when 2g - 2 + n <= 0.
const std::vector<StableGraph>& enumerate_graphs(int g, int n);

}  // namespace orbidr
