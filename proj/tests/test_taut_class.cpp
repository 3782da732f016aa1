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

#include <doctest.h>

#include "orbidr/taut_class.hpp"

using namespace orbidr;

namespace {

GraphTerm smooth_psi_term(int g, int n, int leg, int exp) {
  GraphTerm t;
  t.graph = StableGraph(std::vector<int>{g}, {}, std::vector<int>(static_cast<size_t>(n), 0));
  t.chi.assign(static_cast<size_t>(n), 0);
  t.psi.assign(static_cast<size_t>(n), 0);
  t.psi[static_cast<size_t>(leg)] = exp;
  t.kappa.assign(1, {});
  return t;
}

}  // namespace

TEST_CASE("class algebra basics") {
  TautClass c(1, 2, 1);
  c.add_term(smooth_psi_term(1, 2, 0, 1), Rational(1, 2));
  TautClass neg = class_scale(c, Rational(-1));
  CHECK(class_add(c, neg).is_zero());
  CHECK(class_scale(c, Rational(1)) == c);
  CHECK(class_truncate(c, 0).is_zero());
  CHECK(class_truncate(c, 1) == c);
  TautClass other(2, 2, 1);
  CHECK_THROWS_AS(class_add(c, other), AmbientMismatch);
}

TEST_CASE("dimension-exceeding terms are dropped as zero") {
  TautClass c(1, 1, 1);
  c.add_term(smooth_psi_term(1, 1, 0, 2), Rational(1));  // psi^2 on Mbar_{1,1}
  CHECK(c.is_zero());
  TautClass c0(0, 3, 1);
  c0.add_term(smooth_psi_term(0, 3, 0, 1), Rational(1));  // psi on Mbar_{0,3}
  CHECK(c0.is_zero());
}

TEST_CASE("insertion order does not change the canonical map") {
  TautClass a(1, 2, 1), b(1, 2, 1);
  GraphTerm t1 = smooth_psi_term(1, 2, 0, 1), t2 = smooth_psi_term(1, 2, 1, 1);
  a.add_term(t1, Rational(1, 3));
  a.add_term(t2, Rational(2));
  b.add_term(t2, Rational(2));
  b.add_term(t1, Rational(1, 3));
  CHECK(a == b);
}

TEST_CASE("terms equivalent under a graph automorphism share a key") {
  // Two g=1 vertices joined by an edge, no legs: the flip swaps the psi
  // decorations at the two half-edges.
  StableGraph gr({1, 1}, {{0, 1}}, {});
  GraphTerm t1{gr, {0, 0}, {1, 0}, {{}, {}}};
  GraphTerm t2{gr, {0, 0}, {0, 1}, {{}, {}}};
  CHECK(canonicalize_term(t1).encode() == canonicalize_term(t2).encode());
}

TEST_CASE("truncated exponential examples") {
  LocalSeries x;
  x[LocalMono{{1}, {{}}}] = Rational(1);  // one half-edge variable, one vertex
  LocalSeries e = exp_truncated(x, 2);
  CHECK(e.at(LocalMono{{0}, {{}}}) == Rational(1));
  CHECK(e.at(LocalMono{{1}, {{}}}) == Rational(1));
  CHECK(e.at(LocalMono{{2}, {{}}}) == Rational(1, 2));
  CHECK(e.size() == 3);

  CHECK(exp_truncated(LocalSeries{}, 3, 1, 1) == local_one(1, 1));

  LocalSeries bad = local_one(1, 1);
  CHECK_THROWS_AS(exp_truncated(bad, 2), NonNilpotentInput);
}

TEST_CASE("edge series examples") {
  // exponent = -x (psi+ + psi-): (1 - exp(-xA))/A = x - x^2 A / 2 + ...
  Rational x(3, 7);
  auto m = edge_series({Rational(0), -x}, 2);
  CHECK(m[0][0] == x);
  CHECK(m[1][0] == -x * x / Rational(2));
  CHECK(m[0][1] == -x * x / Rational(2));

  auto zero = edge_series({}, 3);
  for (const auto& row : zero)
    for (const auto& c : row) CHECK(c.is_zero());
}
