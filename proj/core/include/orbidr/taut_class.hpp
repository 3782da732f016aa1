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
#include "orbidr/stable_graph.hpp"

namespace orbidr {

/// One decorated boundary term: the pushforward of a psi/kappa monomial from
/// the stratum of a decorated stable graph. Each edge contributes 1 to the
/// complex degree, each psi exponent and kappa index its value.
struct GraphTerm {
  StableGraph graph;                    // canonical
  std::vector<int> chi;                 // sector per half-edge
  std::vector<int> psi;                 // exponent per half-edge
  std::vector<std::vector<int>> kappa;  // per vertex, sorted list of kappa indices

  int complex_degree() const;
  /// Degree of the decorations living on vertex v (psi at its half-edges,
  /// kappa entries).
  int vertex_degree(int v) const;
  /// True when some vertex exceeds its dimension 3g(v)-3+val(v); such a term
  /// is zero.
  bool exceeds_dimension() const;
  /// Encoding of (graph, chi, psi, kappa) as stored (not minimized).
  std::string encode() const;
};

/// Rewrite the term along the graph automorphism with minimal encoding; the
/// resulting encoding is the term's canonical key. Terms equal up to
/// automorphism get identical keys.
GraphTerm canonicalize_term(const GraphTerm& term);

/// Formal tautological class: canonical-term -> coefficient, with ambient
/// (g, n, m) metadata. Zero coefficients are never stored.
class TautClass {
 public:
  TautClass(int g, int n, int m) : g_(g), n_(n), m_(m) {}

  int genus() const { return g_; }
  int num_legs() const { return n_; }
  int order() const { return m_; }

  /// Canonicalizes, drops dimension-exceeding terms, accumulates.
  void add_term(const GraphTerm& term, const Rational& coeff);

  const std::map<std::string, std::pair<GraphTerm, Rational>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Max complex degree over stored terms; -1 when zero.
  int max_degree() const;

  friend bool operator==(const TautClass& a, const TautClass& b) {
    if (a.g_ != b.g_ || a.n_ != b.n_ || a.m_ != b.m_) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto it = a.terms_.begin(), jt = b.terms_.begin(); it != a.terms_.end(); ++it, ++jt)
      if (it->first != jt->first || it->second.second != jt->second.second) return false;
    return true;
  }

 private:
  int g_, n_, m_;
  std::map<std::string, std::pair<GraphTerm, Rational>> terms_;
};

TautClass class_add(const TautClass& a, const TautClass& b);
TautClass class_scale(const TautClass& a, const Rational& c);
/// Keep terms of complex degree <= degree.
TautClass class_truncate(const TautClass& a, int degree);

/// Truncated multivariate series local to one decorated graph: monomials in
/// one psi variable per half-edge and kappa_d generators per vertex.
struct LocalMono {
  std::vector<int> psi;                 // per half-edge
  std::vector<std::vector<int>> kappa;  // per vertex, kept sorted

  int degree() const;
  friend bool operator<(const LocalMono& a, const LocalMono& b) {
    if (a.psi != b.psi) return a.psi < b.psi;
    return a.kappa < b.kappa;
  }
  friend bool operator==(const LocalMono& a, const LocalMono& b) {
    return a.psi == b.psi && a.kappa == b.kappa;
  }
};

using LocalSeries = std::map<LocalMono, Rational>;

/// The constant series 1 on nh half-edge variables and nv vertices.
LocalSeries local_one(int nh, int nv);
LocalSeries local_mul(const LocalSeries& a, const LocalSeries& b, int max_degree);
/// exp of a series with no degree-0 part, truncated. Throws NonNilpotentInput.
/// Variable counts are inferred from gen; for an empty (zero) generator pass
/// them explicitly.
LocalSeries exp_truncated(const LocalSeries& gen, int max_degree, int nh = -1, int nv = -1);

/// Coefficients M[i][j] of x^i y^j (i + j <= max_degree) of
///   (1 - exp(sum_k a_k (x^k - (-y)^k))) / (x + y),
/// a indexed by psi-degree k (a[0] ignored, must be zero if present). The
/// numerator vanishes on x = -y, so the division is exact; a nonzero
/// remainder throws NotDivisible.
std::vector<std::vector<Rational>> edge_series(const std::vector<Rational>& a, int max_degree);

}  // namespace orbidr
