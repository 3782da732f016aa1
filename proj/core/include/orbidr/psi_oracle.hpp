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

#include <map>
#include <vector>

#include "orbidr/rational.hpp"
#include "orbidr/taut_class.hpp"

namespace orbidr {

/// <tau_{k_1} ... tau_{k_n}>_g via the DVV recursion with string and dilaton
/// equations; memoized, exact. Returns 0 on dimension mismatch. Throws
/// Unstable when 2g - 2 + n <= 0.
Rational psi_integral(int g, const std::vector<int>& exponents);

/// Integral of prod psi_i^{k_i} * prod kappa_{b_j} over Mbar_{g,n} (n =
/// exponents.size()), reduced to pure psi integrals through the extra-marking
/// presentation kappa_b = pi_*(psi_{n+1}^{b+1}).
Rational kappa_psi_integral(int g, const std::vector<int>& exponents,
                            const std::vector<int>& kappa);

/// Pair a TautClass against extra psi insertions on the legs (leg index ->
/// exponent). Each term factorizes over vertices; a term contributes
///   coeff * prod_v (vertex integral) / |Aut(graph)|,
/// times prod_v m^{2g(v)-1} when orbifold_vertex_factor is set and m > 1
/// (covering-degree convention for decorated classes; off by default).
/// Throws DimensionMismatch when the top degree of c plus the insertions does
/// not fill the ambient dimension.
Rational evaluate_class_integral(const TautClass& c, const std::map<int, int>& psi_insertions,
                                 bool orbifold_vertex_factor = false);

}  // namespace orbidr
