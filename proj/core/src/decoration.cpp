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

#include "orbidr/decoration.hpp"

#include <algorithm>
#include <vector>

namespace orbidr {

namespace {

long mod_pos(long a, long r) { return ((a % r) + r) % r; }

// Edge congruence constant: w(h+) + w(h-) must equal this mod r.
long edge_constant(const BundleRep& rep, const Decoration& dec, const StableGraph& graph,
                   int e, long r) {
  int h_plus = graph.num_legs() + 2 * e;
  Sector s(dec.chi[static_cast<size_t>(h_plus)]);
  return age(rep, s).is_zero() ? 0 : r - 1;
}

}  // namespace

std::vector<Decoration> enumerate_decorations(const StableGraph& graph, const BundleRep& rep,
                                              const std::vector<Sector>& leg_sectors) {
  const int n = graph.num_legs();
  const int ne = graph.num_edges();
  const int m = rep.m;
  if (static_cast<int>(leg_sectors.size()) != n)
    throw Error("enumerate_decorations: wrong number of leg sectors");

  std::vector<int> chi(static_cast<size_t>(graph.num_half_edges()), 0);
  for (int i = 0; i < n; ++i) {
    int g = leg_sectors[static_cast<size_t>(i)].g;
    if (g < 0 || g >= m) throw Error("enumerate_decorations: sector out of range");
    chi[static_cast<size_t>(i)] = g;
  }

  std::vector<Decoration> out;
  std::vector<int> choice(static_cast<size_t>(ne), 0);  // chi at h+ per edge
  while (true) {
    for (int e = 0; e < ne; ++e) {
      chi[static_cast<size_t>(n + 2 * e)] = choice[static_cast<size_t>(e)];
      chi[static_cast<size_t>(n + 2 * e + 1)] = (m - choice[static_cast<size_t>(e)]) % m;
    }
    bool ok = true;
    for (int v = 0; v < graph.num_vertices() && ok; ++v) {
      int sum = 0;
      for (int h : graph.half_edges_at(v)) sum += chi[static_cast<size_t>(h)];
      if (sum % m != 0) ok = false;
    }
    if (ok) out.push_back(Decoration{chi});
    // base-m odometer over edges
    int e = 0;
    while (e < ne && ++choice[static_cast<size_t>(e)] == m) {
      choice[static_cast<size_t>(e)] = 0;
      ++e;
    }
    if (e == ne) break;
  }
  return out;
}

long vertex_offset(const BundleRep& rep, const StableGraph& graph, const Decoration& dec, int v) {
  Rational sum(0);
  for (int h : graph.half_edges_at(v))
    sum += age(rep, Sector(dec.chi[static_cast<size_t>(h)]));
  Rational a = -sum;
  if (!a.is_integer())
    throw NonIntegralOffset("vertex_offset: non-integral age sum at vertex " + std::to_string(v));
  return a.to_long();
}

bool check_weight(const StableGraph& graph, const Decoration& dec, const BundleRep& rep,
                  const std::vector<Rational>& lifts, const WeightFunction& wf) {
  const long r = wf.r;
  const int n = graph.num_legs();
  for (long x : wf.w)
    if (x < 0 || x >= r) return false;
  for (int i = 0; i < n; ++i)
    if (wf.w[static_cast<size_t>(i)] !=
        leg_weight(rep, Sector(dec.chi[static_cast<size_t>(i)]), lifts[static_cast<size_t>(i)], r))
      return false;
  for (int e = 0; e < graph.num_edges(); ++e) {
    long sum = wf.w[static_cast<size_t>(n + 2 * e)] + wf.w[static_cast<size_t>(n + 2 * e + 1)];
    if (mod_pos(sum, r) != edge_constant(rep, dec, graph, e, r)) return false;
  }
  for (int v = 0; v < graph.num_vertices(); ++v) {
    long sum = 0;
    for (int h : graph.half_edges_at(v)) sum += wf.w[static_cast<size_t>(h)];
    if (mod_pos(sum, r) != mod_pos(vertex_offset(rep, graph, dec, v), r)) return false;
  }
  return true;
}

std::vector<WeightFunction> enumerate_weights(const StableGraph& graph, const Decoration& dec,
                                              const BundleRep& rep,
                                              const std::vector<Rational>& lifts, long r) {
  const int n = graph.num_legs();
  const int ne = graph.num_edges();
  const int nv = graph.num_vertices();
  if (static_cast<int>(lifts.size()) != n) throw Error("enumerate_weights: wrong lift count");
  if (r < 1) throw Error("enumerate_weights: r must be >= 1");

  std::vector<long> base(static_cast<size_t>(graph.num_half_edges()), -1);
  for (int i = 0; i < n; ++i)
    base[static_cast<size_t>(i)] =
        leg_weight(rep, Sector(dec.chi[static_cast<size_t>(i)]), lifts[static_cast<size_t>(i)], r);

  // BFS spanning tree; parent_edge[v] is the tree edge towards the root.
  std::vector<int> parent_edge(static_cast<size_t>(nv), -1);
  std::vector<int> order;  // BFS visit order
  std::vector<char> in_tree(static_cast<size_t>(ne), 0);
  {
    std::vector<char> seen(static_cast<size_t>(nv), 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      order.push_back(v);
      for (int e = 0; e < ne; ++e) {
        const auto& ed = graph.edge(e);
        int u = -1;
        if (ed.first == v) u = ed.second;
        else if (ed.second == v) u = ed.first;
        if (u < 0 || seen[static_cast<size_t>(u)]) continue;
        seen[static_cast<size_t>(u)] = 1;
        in_tree[static_cast<size_t>(e)] = 1;
        parent_edge[static_cast<size_t>(u)] = e;
        queue.push_back(u);
      }
    }
  }
  std::vector<int> free_edges;
  for (int e = 0; e < ne; ++e)
    if (!in_tree[static_cast<size_t>(e)]) free_edges.push_back(e);
  const int nfree = static_cast<int>(free_edges.size());

  std::vector<long> offsets(static_cast<size_t>(nv));
  for (int v = 0; v < nv; ++v) offsets[static_cast<size_t>(v)] = vertex_offset(rep, graph, dec, v);

  std::vector<WeightFunction> out;
  std::vector<long> choice(static_cast<size_t>(nfree), 0);
  while (true) {
    std::vector<long> w = base;
    for (int k = 0; k < nfree; ++k) {
      int e = free_edges[static_cast<size_t>(k)];
      long wp = choice[static_cast<size_t>(k)];
      w[static_cast<size_t>(n + 2 * e)] = wp;
      w[static_cast<size_t>(n + 2 * e + 1)] =
          mod_pos(edge_constant(rep, dec, graph, e, r) - wp, r);
    }
    // Solve tree edges leaf-first: at each non-root vertex the only unknown
    // is the half of its parent edge.
    for (size_t oi = order.size(); oi-- > 1;) {
      int v = order[oi];
      int e = parent_edge[static_cast<size_t>(v)];
      int h_at_v = graph.edge(e).first == v ? n + 2 * e : n + 2 * e + 1;
      long known = 0;
      for (int h : graph.half_edges_at(v))
        if (h != h_at_v) known += w[static_cast<size_t>(h)];
      w[static_cast<size_t>(h_at_v)] = mod_pos(offsets[static_cast<size_t>(v)] - known, r);
      int h_other = graph.other_half(h_at_v);
      w[static_cast<size_t>(h_other)] =
          mod_pos(edge_constant(rep, dec, graph, e, r) - w[static_cast<size_t>(h_at_v)], r);
    }
    long root_sum = 0;
    for (int h : graph.half_edges_at(order[0])) root_sum += w[static_cast<size_t>(h)];
    if (mod_pos(root_sum, r) == mod_pos(offsets[static_cast<size_t>(order[0])], r)) {
      WeightFunction wf{r, w};
      if (!check_weight(graph, dec, rep, lifts, wf))
        throw Error("enumerate_weights: internal consistency failure");
      out.push_back(std::move(wf));
    }
    int k = 0;
    while (k < nfree && ++choice[static_cast<size_t>(k)] == r) {
      choice[static_cast<size_t>(k)] = 0;
      ++k;
    }
    if (k == nfree) break;
  }
  return out;
}

long weight_count(const StableGraph& graph, const Decoration& dec, const BundleRep& rep,
                  const std::vector<Rational>& lifts, long r) {
  const int n = graph.num_legs();
  if (static_cast<int>(lifts.size()) != n) throw Error("weight_count: wrong lift count");
  // Summing the vertex congruences reproduces the leg and edge totals, so
  // solvability reduces to one global congruence; the free edges then give
  // exactly r^h1 solutions.
  long lhs = 0;
  for (int i = 0; i < n; ++i)
    lhs += leg_weight(rep, Sector(dec.chi[static_cast<size_t>(i)]), lifts[static_cast<size_t>(i)], r);
  for (int e = 0; e < graph.num_edges(); ++e) lhs += edge_constant(rep, dec, graph, e, r);
  long rhs = 0;
  for (int v = 0; v < graph.num_vertices(); ++v) rhs += vertex_offset(rep, graph, dec, v);
  if (mod_pos(lhs - rhs, r) != 0) return 0;
  long count = 1;
  for (int i = 0; i < graph.h1(); ++i) count *= r;
  return count;
}

}  // namespace orbidr
