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

#include "orbidr/rational.hpp"
#include "orbidr/unipoly.hpp"

namespace orbidr {

// Convention: B_1 = -1/2, i.e. the expansion of t e^{tx} / (e^t - 1).
// The opposite sign convention silently corrupts every edge term downstream,
// so it is pinned here and asserted by the test suite (B_1(x) = x - 1/2,
// B_2(x) = x^2 - x + 1/6).

/// Bernoulli number B_k = B_k(0). Cached, thread-safe.
Rational bernoulli_number(int k);

/// Bernoulli polynomial B_k(x) as an exact polynomial in x.
UniPoly bernoulli_polynomial(int k);

/// B_k evaluated at a rational point.
Rational bernoulli_at(int k, const Rational& x);

}  // namespace orbidr
