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
#include <string>
#include <vector>

#include "orbidr/decoration.hpp"
#include "orbidr/orbifold.hpp"
#include "orbidr/taut_class.hpp"
#include "orbidr/unipoly.hpp"

namespace orbidr {

/// Topological data of a lifted problem: genus, governing line-bundle
/// character, one sector and one admissible lift exponent per leg.
struct TopData {
  int g = 0;
  BundleRep rep;
  std::vector<Sector> leg_sectors;
  std::vector<Rational> lifts;

  int n() const { return static_cast<int>(leg_sectors.size()); }
  /// Throws Unstable / NotAdmissible / Error on invalid data.
  void validate() const;
};

/// A double ramification problem: genus, the character of L, untwisted
/// absolute markings, and relative markings over the zero/infinity divisors
/// with positive rational contact orders.
struct DRProblem {
  int g = 0;
  BundleRep rep;
  std::vector<Sector> absolute;
  std::vector<std::pair<Sector, Rational>> mu_zero;
  std::vector<std::pair<Sector, Rational>> mu_infinity;

  int n() const {
    return static_cast<int>(absolute.size() + mu_zero.size() + mu_infinity.size());
  }
};

enum class Branch { zero, infinity };

/// A tautological class whose coefficients are polynomials in r.
struct RPolyClass {
  int g = 0, n = 0, m = 1;
  std::map<std::string, std::pair<GraphTerm, UniPoly>> terms;

  /// Coefficient-wise constant term in r.
  TautClass constant_term_class() const;
};

/// Lower bound for the "r large" regime: factor * (ceil(max |a_i|) + m) *
/// (2g + 1). The factor defaults to 4 and can be overridden through the
/// ORBIDR_RBOUND_FACTOR environment variable.
long working_bound(const TopData& data);

/// Consecutive integers working_bound + 1, ..., enough for degree bound 2d
/// plus the requested surplus verification points.
std::vector<long> default_r_samples(const TopData& data, int d, int surplus = 2);

/// The graph-sum class at a fixed r: degree-<=d truncation of
/// r^{2d-2g+1} times the triple sum over (graph, decoration, weight) with
/// prefactor r^{2g-1-h1}/|Aut|, Bernoulli leg/vertex/edge factors.
TautClass class_at_r(const TopData& data, int d, long r);

/// Interpolates class_at_r over the samples (all must exceed the working
/// bound; at least 2d + 3 of them) into per-term polynomials in r; every
/// surplus sample is verified exactly. Throws NotPolynomial when a sample
/// is off (the range is too low).
RPolyClass polynomial_class(const TopData& data, int d, const std::vector<long>& r_samples);

/// Direct constant-term formula (the degree-exactly-d part only), the
/// independent second path: prefactor
/// r^{-h1}/|Aut|, leg factors exp(a_i^2/2 psi_i), edge factors
/// [1 - exp(-x_e (psi+ + psi-)/2)]/(psi+ + psi-) with
/// x_e = (w(h+)+age+)(w(h-)+age-), the weight sums evaluated at sampled
/// large r, interpolated, and reduced to their r-constant terms.
TautClass leading_term_class(const TopData& data, int d);

struct ValidationReport {
  std::vector<std::pair<std::string, bool>> items;
  bool all_pass() const;
};

ValidationReport validate_dr_problem(const DRProblem& p);

/// The lifted topological data used by a branch: (rep, A_rho) for zero with
/// A_rho = (0,...,0, mu_0, -mu_inf), (dual rep, -A_rho) for infinity.
TopData branch_top_data(const DRProblem& p, Branch branch);

/// The bracket of the branch formula, sign included (+ for zero, - for
/// infinity), without the startup normalization.
TautClass dr_cycle_raw(const DRProblem& p, Branch branch);

/// Per-branch constant (+1 or -1) fixed once by requiring that a genus-0
/// problem produce +1 times the fundamental class.
Rational branch_normalization(Branch branch);

/// Normalized DR cycle of degree g on Mbar_{g,n}.
TautClass dr_cycle(const DRProblem& p, Branch branch);

/// dr_cycle with explicit r-samples (empty means default) and an optional
/// out-parameter for the interpolated per-term polynomials of the branch
/// bracket (sign and normalization not applied to the polynomials).
TautClass dr_cycle_with(const DRProblem& p, Branch branch, const std::vector<long>& r_samples,
                        RPolyClass* rpoly_out = nullptr);

}  // namespace orbidr
