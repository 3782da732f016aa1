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

#include <vector>

#include "orbidr/orbifold.hpp"
#include "orbidr/stable_graph.hpp"

namespace orbidr {

/// Sector assignment to every half-edge of a graph. Legs carry the prescribed
/// input sectors; across each edge the sectors are inverse; at each vertex the
/// sectors sum to zero mod m (existence of an abelian cover with the given
/// monodromies).
struct Decoration {
  std::vector<int> chi;  // per half-edge, values in [0, m)

  friend bool operator==(const Decoration& a, const Decoration& b) { return a.chi == b.chi; }
};

/// All valid decorations, in deterministic order. Empty list is a valid
/// outcome (no vertex-compatible assignment).
std::vector<Decoration> enumerate_decorations(const StableGraph& graph, const BundleRep& rep,
                                              const std::vector<Sector>& leg_sectors);

/// A(v, chi) = -sum of ages of the sectors at v. Integral for every valid
/// decoration; a non-integral sum indicates a decoration bug and throws.
long vertex_offset(const BundleRep& rep, const StableGraph& graph, const Decoration& dec, int v);

/// Weight assignment w: half-edge -> {0..r-1} satisfying
///  (1) legs: w = leg_weight of the prescribed lift,
///  (2) edges: w(h+) + w(h-) = 0 mod r when age(chi(h+)) = 0, else r-1 mod r,
///  (3) vertices: sum of w over H(v) = A(v, chi) mod r.
struct WeightFunction {
  long r = 1;
  std::vector<long> w;  // per half-edge

  friend bool operator==(const WeightFunction& a, const WeightFunction& b) {
    return a.r == b.r && a.w == b.w;
  }
};

/// Independent validator for the three weight conditions.
bool check_weight(const StableGraph& graph, const Decoration& dec, const BundleRep& rep,
                  const std::vector<Rational>& lifts, const WeightFunction& wf);

/// All weight functions, via spanning-tree elimination: the h1 non-tree edges
/// range freely over Z_r, the rest are forced. Deterministic order.
std::vector<WeightFunction> enumerate_weights(const StableGraph& graph, const Decoration& dec,
                                              const BundleRep& rep,
                                              const std::vector<Rational>& lifts, long r);

/// Count without materialization: r^h1 when the global congruence is
/// consistent, else 0.
long weight_count(const StableGraph& graph, const Decoration& dec, const BundleRep& rep,
                  const std::vector<Rational>& lifts, long r);

}  // namespace orbidr
