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

#include "orbidr/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace orbidr {

namespace {
std::mutex g_mutex;
std::vector<Rational> g_numbers;  // g_numbers[k] = B_k

void extend_to(int k) {
  // sum_{j=0}^{k} C(k+1, j) B_j = 0 for k >= 1, with B_0 = 1.
  if (g_numbers.empty()) g_numbers.push_back(Rational(1));
  for (int m = static_cast<int>(g_numbers.size()); m <= k; ++m) {
    Rational s(0);
    for (int j = 0; j < m; ++j) s += binomial(m + 1, j) * g_numbers[static_cast<size_t>(j)];
    g_numbers.push_back(-s / binomial(m + 1, m));
  }
}
}  // namespace

Rational bernoulli_number(int k) {
  if (k < 0) throw Error("bernoulli_number: negative index");
  std::lock_guard<std::mutex> lock(g_mutex);
  extend_to(k);
  return g_numbers[static_cast<size_t>(k)];
}

UniPoly bernoulli_polynomial(int k) {
  if (k < 0) throw Error("bernoulli_polynomial: negative index");
  // B_k(x) = sum_j C(k, j) B_j x^{k-j}
  std::vector<Rational> coeffs(static_cast<size_t>(k) + 1, Rational(0));
  for (int j = 0; j <= k; ++j)
    coeffs[static_cast<size_t>(k - j)] = binomial(k, j) * bernoulli_number(j);
  return UniPoly(std::move(coeffs));
}

Rational bernoulli_at(int k, const Rational& x) {
  return bernoulli_polynomial(k).evaluate(x);
}

}  // namespace orbidr
