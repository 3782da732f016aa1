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

#include "orbidr/psi_oracle.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "orbidr/stable_graph.hpp"

namespace orbidr {

namespace {

Rational double_factorial_odd(int k) {
  // (2k+1)!! for k >= -1; (-1)!! = 1.
  Rational out(1);
  for (int i = 2 * k + 1; i >= 1; i -= 2) out *= Rational(i);
  return out;
}

std::mutex g_memo_mutex;
std::map<std::pair<int, std::vector<int>>, Rational> g_memo;

Rational psi_rec(int g, std::vector<int> ks);

Rational psi_memo(int g, std::vector<int> ks) {
  std::sort(ks.begin(), ks.end());
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_memo.find({g, ks});
    if (it != g_memo.end()) return it->second;
  }
  Rational val = psi_rec(g, ks);
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  g_memo.emplace(std::make_pair(g, ks), val);
  return val;
}

Rational psi_rec(int g, std::vector<int> ks) {
  const int n = static_cast<int>(ks.size());
  const int dim = 3 * g - 3 + n;
  if (std::accumulate(ks.begin(), ks.end(), 0) != dim) return Rational(0);
  if (g == 0 && n == 3) return Rational(1);
  if (g == 1 && n == 1) return Rational(1, 24);

  // ks is sorted ascending; a zero exponent sits in front.
  if (ks[0] == 0) {
    // string equation
    std::vector<int> rest(ks.begin() + 1, ks.end());
    Rational sum(0);
    for (size_t j = 0; j < rest.size(); ++j) {
      if (rest[j] == 0) continue;
      std::vector<int> next = rest;
      next[j] -= 1;
      sum += psi_memo(g, next);
    }
    return sum;
  }
  if (ks[0] == 1) {
    // dilaton equation
    std::vector<int> rest(ks.begin() + 1, ks.end());
    return Rational(2 * g - 2 + n - 1) * psi_memo(g, rest);
  }

  // DVV recursion on the largest exponent k1 >= 2.
  const int k1 = ks.back();
  std::vector<int> rest(ks.begin(), ks.end() - 1);
  Rational sum(0);
  for (size_t j = 0; j < rest.size(); ++j) {
    std::vector<int> next = rest;
    next.erase(next.begin() + static_cast<long>(j));
    next.push_back(k1 + rest[j] - 1);
    sum += double_factorial_odd(k1 + rest[j] - 1) / double_factorial_odd(rest[j] - 1) *
           psi_memo(g, next);
  }
  for (int a = 0; a <= k1 - 2; ++a) {
    int b = k1 - 2 - a;
    Rational pref = double_factorial_odd(a) * double_factorial_odd(b) * Rational(1, 2);
    if (g >= 1) {
      std::vector<int> next = rest;
      next.push_back(a);
      next.push_back(b);
      if (2 * (g - 1) - 2 + static_cast<int>(next.size()) > 0)
        sum += pref * psi_memo(g - 1, next);
    }
    // ordered splittings of genus and of the remaining markings
    const size_t nr = rest.size();
    for (int g1 = 0; g1 <= g; ++g1) {
      int g2 = g - g1;
      for (unsigned long mask = 0; mask < (1ul << nr); ++mask) {
        std::vector<int> s1{a}, s2{b};
        for (size_t j = 0; j < nr; ++j)
          ((mask >> j) & 1ul ? s1 : s2).push_back(rest[j]);
        if (2 * g1 - 2 + static_cast<int>(s1.size()) <= 0) continue;
        if (2 * g2 - 2 + static_cast<int>(s2.size()) <= 0) continue;
        sum += pref * psi_memo(g1, s1) * psi_memo(g2, s2);
      }
    }
  }
  return sum / double_factorial_odd(k1);
}

}  // namespace

Rational psi_integral(int g, const std::vector<int>& exponents) {
  const int n = static_cast<int>(exponents.size());
  if (g < 0 || 2 * g - 2 + n <= 0)
    throw Unstable("psi_integral: 2g-2+n must be positive");
  for (int k : exponents)
    if (k < 0) throw Error("psi_integral: negative exponent");
  return psi_memo(g, exponents);
}

Rational kappa_psi_integral(int g, const std::vector<int>& exponents,
                            const std::vector<int>& kappa) {
  for (int b : kappa)
    if (b < 1) throw Error("kappa_psi_integral: kappa indices are positive");
  if (kappa.empty()) {
    if (exponents.empty()) return Rational(0);  // n = 0 and positive dimension
    return psi_integral(g, exponents);
  }
  // kappa_b = pi_*(psi_{n+1}^{b+1}); pulling the remaining kappas back along
  // pi expands kappa_c -> kappa_c - psi_{n+1}^c, giving a signed sum over the
  // subset absorbed into the new marking.
  const int b1 = kappa[0];
  std::vector<int> others(kappa.begin() + 1, kappa.end());
  const size_t no = others.size();
  Rational sum(0);
  for (unsigned long mask = 0; mask < (1ul << no); ++mask) {
    int extra = b1 + 1;
    std::vector<int> remaining;
    int sign = 1;
    for (size_t j = 0; j < no; ++j) {
      if ((mask >> j) & 1ul) {
        extra += others[j];
        sign = -sign;
      } else {
        remaining.push_back(others[j]);
      }
    }
    std::vector<int> ks = exponents;
    ks.push_back(extra);
    sum += Rational(sign) * kappa_psi_integral(g, ks, remaining);
  }
  return sum;
}

Rational evaluate_class_integral(const TautClass& c, const std::map<int, int>& psi_insertions,
                                 bool orbifold_vertex_factor) {
  const int dim = 3 * c.genus() - 3 + c.num_legs();
  int ins_total = 0;
  for (const auto& [leg, e] : psi_insertions) {
    if (leg < 0 || leg >= c.num_legs()) throw Error("evaluate_class_integral: bad leg index");
    if (e < 0) throw Error("evaluate_class_integral: negative insertion");
    ins_total += e;
  }
  if (!c.is_zero() && c.max_degree() + ins_total != dim)
    throw DimensionMismatch("evaluate_class_integral: degree " +
                            std::to_string(c.max_degree()) + " + insertions " +
                            std::to_string(ins_total) + " != dim " + std::to_string(dim));

  Rational total(0);
  for (const auto& [key, tc] : c.terms()) {
    const GraphTerm& t = tc.first;
    if (t.complex_degree() + ins_total != dim) continue;  // lower terms integrate to 0
    Rational prod = tc.second;
    for (int v = 0; v < t.graph.num_vertices() && !prod.is_zero(); ++v) {
      std::vector<int> ks;
      for (int h : t.graph.half_edges_at(v)) {
        int e = t.psi[static_cast<size_t>(h)];
        if (t.graph.is_leg(h)) {
          auto it = psi_insertions.find(h);
          if (it != psi_insertions.end()) e += it->second;
        }
        ks.push_back(e);
      }
      prod *= kappa_psi_integral(t.graph.genus_of(v), ks, t.kappa[static_cast<size_t>(v)]);
      if (orbifold_vertex_factor && c.order() > 1)
        prod *= pow_rational(Rational(c.order()), 2l * t.graph.genus_of(v) - 1);
    }
    if (prod.is_zero()) continue;
    total += prod / Rational(automorphism_order(t.graph));
  }
  return total;
}

}  // namespace orbidr
