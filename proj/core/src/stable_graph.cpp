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

#include "orbidr/stable_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace orbidr {

StableGraph::StableGraph(std::vector<int> genus, std::vector<std::pair<int, int>> edges,
                         std::vector<int> leg_vertex)
    : genus_(std::move(genus)), edges_(std::move(edges)), leg_vertex_(std::move(leg_vertex)) {
  for (auto& e : edges_)
    if (e.first > e.second) std::swap(e.first, e.second);
}

int StableGraph::other_half(int h) const {
  if (is_leg(h)) throw Error("other_half: legs are unpaired");
  return ((h - num_legs()) % 2 == 0) ? h + 1 : h - 1;
}

int StableGraph::vertex_of_half(int h) const {
  if (h < 0 || h >= num_half_edges()) throw Error("vertex_of_half: out of range");
  if (is_leg(h)) return leg_vertex_[static_cast<size_t>(h)];
  const auto& e = edges_[static_cast<size_t>(edge_of_half(h))];
  return side_of_half(h) == 0 ? e.first : e.second;
}

std::vector<int> StableGraph::half_edges_at(int v) const {
  std::vector<int> out;
  for (int h = 0; h < num_half_edges(); ++h)
    if (vertex_of_half(h) == v) out.push_back(h);
  return out;
}

int StableGraph::total_genus() const {
  return std::accumulate(genus_.begin(), genus_.end(), 0) + h1();
}

bool StableGraph::is_connected() const {
  const int nv = num_vertices();
  if (nv == 0) return false;
  std::vector<char> seen(static_cast<size_t>(nv), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& e : edges_) {
      int u = -1;
      if (e.first == v) u = e.second;
      else if (e.second == v) u = e.first;
      if (u >= 0 && !seen[static_cast<size_t>(u)]) {
        seen[static_cast<size_t>(u)] = 1;
        stack.push_back(u);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool StableGraph::is_stable() const {
  for (int v = 0; v < num_vertices(); ++v)
    if (2 * genus_of(v) - 2 + valence(v) <= 0) return false;
  return true;
}

void StableGraph::validate() const {
  if (num_vertices() == 0) throw Error("StableGraph: no vertices");
  for (int g : genus_)
    if (g < 0) throw Error("StableGraph: negative genus");
  for (const auto& e : edges_)
    if (e.first < 0 || e.second >= num_vertices() || e.first > e.second)
      throw Error("StableGraph: bad edge");
  for (int v : leg_vertex_)
    if (v < 0 || v >= num_vertices()) throw Error("StableGraph: bad leg vertex");
  if (!is_connected()) throw Error("StableGraph: not connected");
  if (!is_stable()) throw Unstable("StableGraph: stability violated at some vertex");
}

std::string StableGraph::encode() const {
  std::ostringstream os;
  for (int v = 0; v < num_vertices(); ++v) {
    if (v) os << ";";
    os << "v" << v << ":g=" << genus_of(v);
  }
  os << "|E:";
  for (int e = 0; e < num_edges(); ++e) {
    if (e) os << ",";
    os << edges_[static_cast<size_t>(e)].first << "-" << edges_[static_cast<size_t>(e)].second;
  }
  os << "|";
  for (int i = 0; i < num_legs(); ++i) {
    if (i) os << ",";
    os << "L" << i << "@" << leg_vertex_[static_cast<size_t>(i)];
  }
  return os.str();
}

StableGraph StableGraph::relabeled(const std::vector<int>& perm) const {
  std::vector<int> genus(genus_.size());
  for (int v = 0; v < num_vertices(); ++v)
    genus[static_cast<size_t>(perm[static_cast<size_t>(v)])] = genus_of(v);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_)
    edges.emplace_back(perm[static_cast<size_t>(e.first)], perm[static_cast<size_t>(e.second)]);
  std::vector<int> legs;
  legs.reserve(leg_vertex_.size());
  for (int v : leg_vertex_) legs.push_back(perm[static_cast<size_t>(v)]);
  StableGraph out(std::move(genus), std::move(edges), std::move(legs));
  // Edge storage order is part of the encoding; fix it by sorting.
  std::sort(out.edges_.begin(), out.edges_.end());
  return out;
}

StableGraph canonicalize(const StableGraph& graph) {
  const int nv = graph.num_vertices();
  std::vector<int> perm(static_cast<size_t>(nv));
  std::iota(perm.begin(), perm.end(), 0);
  StableGraph best = graph.relabeled(perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    StableGraph cand = graph.relabeled(perm);
    if (cand < best) best = cand;
  }
  return best;
}

namespace {

// Compatible vertex permutations: preserve genus, fix leg vertices, preserve
// the edge multiset.
std::vector<std::vector<int>> compatible_vertex_perms(const StableGraph& g) {
  const int nv = g.num_vertices();
  std::vector<int> perm(static_cast<size_t>(nv));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> orig;
  for (int e = 0; e < g.num_edges(); ++e) orig.push_back(g.edge(e));
  std::sort(orig.begin(), orig.end());

  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int v = 0; v < nv && ok; ++v)
      if (g.genus_of(perm[static_cast<size_t>(v)]) != g.genus_of(v)) ok = false;
    for (int i = 0; i < g.num_legs() && ok; ++i)
      if (perm[static_cast<size_t>(g.leg_vertex(i))] != g.leg_vertex(i)) ok = false;
    if (!ok) continue;
    std::vector<std::pair<int, int>> mapped;
    for (int e = 0; e < g.num_edges(); ++e) {
      int a = perm[static_cast<size_t>(g.edge(e).first)];
      int b = perm[static_cast<size_t>(g.edge(e).second)];
      mapped.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped == orig) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Backtrack over edge assignments (and self-edge flips) for a fixed vertex
// permutation, emitting full half-edge permutations.
void collect_edge_maps(const StableGraph& g, const std::vector<int>& vperm,
                       std::vector<GraphAut>& out) {
  const int ne = g.num_edges();
  const int n = g.num_legs();
  // image pair of each source edge under vperm
  std::vector<std::pair<int, int>> image(static_cast<size_t>(ne));
  for (int e = 0; e < ne; ++e) {
    int a = vperm[static_cast<size_t>(g.edge(e).first)];
    int b = vperm[static_cast<size_t>(g.edge(e).second)];
    image[static_cast<size_t>(e)] = {std::min(a, b), std::max(a, b)};
  }
  std::vector<int> target(static_cast<size_t>(ne), -1);
  std::vector<char> used(static_cast<size_t>(ne), 0);
  std::vector<int> flip(static_cast<size_t>(ne), 0);  // meaningful for loops only

  auto emit = [&]() {
    GraphAut aut;
    aut.vertex_perm = vperm;
    aut.half_edge_perm.resize(static_cast<size_t>(g.num_half_edges()));
    for (int h = 0; h < n; ++h) aut.half_edge_perm[static_cast<size_t>(h)] = h;
    for (int e = 0; e < ne; ++e) {
      int t = target[static_cast<size_t>(e)];
      int h0 = n + 2 * e, h1 = n + 2 * e + 1;
      if (g.edge(e).first == g.edge(e).second) {
        aut.half_edge_perm[static_cast<size_t>(h0)] = n + 2 * t + flip[static_cast<size_t>(e)];
        aut.half_edge_perm[static_cast<size_t>(h1)] = n + 2 * t + 1 - flip[static_cast<size_t>(e)];
      } else {
        int iu = vperm[static_cast<size_t>(g.edge(e).first)];
        // h0 sits on edge(e).first; send it to the side of t at vertex iu.
        if (g.edge(t).first == iu) {
          aut.half_edge_perm[static_cast<size_t>(h0)] = n + 2 * t;
          aut.half_edge_perm[static_cast<size_t>(h1)] = n + 2 * t + 1;
        } else {
          aut.half_edge_perm[static_cast<size_t>(h0)] = n + 2 * t + 1;
          aut.half_edge_perm[static_cast<size_t>(h1)] = n + 2 * t;
        }
      }
    }
    out.push_back(std::move(aut));
  };

  std::function<void(int)> rec = [&](int e) {
    if (e == ne) {
      emit();
      return;
    }
    for (int t = 0; t < ne; ++t) {
      if (used[static_cast<size_t>(t)]) continue;
      if (g.edge(t) != image[static_cast<size_t>(e)]) continue;
      used[static_cast<size_t>(t)] = 1;
      target[static_cast<size_t>(e)] = t;
      if (g.edge(e).first == g.edge(e).second) {
        for (int f = 0; f < 2; ++f) {
          flip[static_cast<size_t>(e)] = f;
          rec(e + 1);
        }
      } else {
        rec(e + 1);
      }
      used[static_cast<size_t>(t)] = 0;
    }
  };
  rec(0);
}

}  // namespace

std::vector<GraphAut> graph_automorphisms(const StableGraph& graph) {
  std::vector<GraphAut> out;
  for (const auto& vperm : compatible_vertex_perms(graph))
    collect_edge_maps(graph, vperm, out);
  return out;
}

long automorphism_order(const StableGraph& graph) {
  return static_cast<long>(graph_automorphisms(graph).size());
}

namespace {

// One-edge degenerations of a stable graph: genus drop + self-edge at a
// vertex, or a vertex split with an inserted edge. Every stable graph arises
// from the smooth one by iterating these.
std::vector<StableGraph> degenerations(const StableGraph& g) {
  std::vector<StableGraph> out;
  const int nv = g.num_vertices();
  for (int v = 0; v < nv; ++v) {
    if (g.genus_of(v) >= 1) {
      std::vector<int> genus;
      std::vector<std::pair<int, int>> edges;
      std::vector<int> legs;
      for (int u = 0; u < nv; ++u) genus.push_back(g.genus_of(u));
      genus[static_cast<size_t>(v)] -= 1;
      for (int e = 0; e < g.num_edges(); ++e) edges.push_back(g.edge(e));
      edges.emplace_back(v, v);
      for (int i = 0; i < g.num_legs(); ++i) legs.push_back(g.leg_vertex(i));
      out.emplace_back(std::move(genus), std::move(edges), std::move(legs));
    }
    // Split v into (v, new vertex nv): distribute genus and attached slots.
    std::vector<int> slots = g.half_edges_at(v);  // legs and edge-halves at v
    const int ns = static_cast<int>(slots.size());
    for (int g1 = 0; g1 <= g.genus_of(v); ++g1) {
      int g2 = g.genus_of(v) - g1;
      for (unsigned long mask = 0; mask < (1ul << ns); ++mask) {
        int kept = ns - __builtin_popcountl(mask);
        int moved = ns - kept;
        // Stability of the two pieces (the inserted edge adds one slot each).
        if (2 * g1 - 2 + kept + 1 <= 0) continue;
        if (2 * g2 - 2 + moved + 1 <= 0) continue;
        std::vector<int> genus;
        std::vector<std::pair<int, int>> edges;
        std::vector<int> legs;
        for (int u = 0; u < nv; ++u) genus.push_back(g.genus_of(u));
        genus[static_cast<size_t>(v)] = g1;
        genus.push_back(g2);
        for (int e = 0; e < g.num_edges(); ++e) edges.push_back(g.edge(e));
        for (int i = 0; i < g.num_legs(); ++i) legs.push_back(g.leg_vertex(i));
        for (int s = 0; s < ns; ++s) {
          if (!(mask & (1ul << s))) continue;
          int h = slots[static_cast<size_t>(s)];
          if (g.is_leg(h)) {
            legs[static_cast<size_t>(h)] = nv;
          } else {
            auto& e = edges[static_cast<size_t>(g.edge_of_half(h))];
            if (g.side_of_half(h) == 0) e.first = nv;
            else e.second = nv;
          }
        }
        edges.emplace_back(v, nv);
        out.emplace_back(std::move(genus), std::move(edges), std::move(legs));
      }
    }
  }
  return out;
}

std::mutex g_enum_mutex;
std::map<std::pair<int, int>, std::vector<StableGraph>> g_enum_cache;

}  // namespace

const std::vector<StableGraph>& enumerate_graphs(int g, int n) {
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0)
    throw Unstable("enumerate_graphs: 2g-2+n must be positive");
  std::lock_guard<std::mutex> lock(g_enum_mutex);
  auto it = g_enum_cache.find({g, n});
  if (it != g_enum_cache.end()) return it->second;

  std::set<StableGraph> seen;
  std::vector<StableGraph> frontier;
  {
    std::vector<int> legs(static_cast<size_t>(n), 0);
    StableGraph smooth({g}, {}, legs);
    smooth.validate();
    seen.insert(smooth);
    frontier.push_back(smooth);
  }
  while (!frontier.empty()) {
    std::vector<StableGraph> next;
    for (const auto& cur : frontier) {
      for (const auto& cand : degenerations(cur)) {
        if (!cand.is_stable()) continue;
        StableGraph canon = canonicalize(cand);
        if (seen.insert(canon).second) next.push_back(canon);
      }
    }
    frontier = std::move(next);
  }
  std::vector<StableGraph> result(seen.begin(), seen.end());
  std::sort(result.begin(), result.end(),
            [](const StableGraph& a, const StableGraph& b) { return a.encode() < b.encode(); });
  auto [pos, inserted] = g_enum_cache.emplace(std::make_pair(g, n), std::move(result));
  (void)inserted;
  return pos->second;
}

}  // namespace orbidr
