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

#include "orbidr/taut_class.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace orbidr {

int GraphTerm::complex_degree() const {
  int d = graph.num_edges();
  for (int p : psi) d += p;
  for (const auto& ks : kappa)
    for (int k : ks) d += k;
  return d;
}

int GraphTerm::vertex_degree(int v) const {
  int d = 0;
  for (int h : graph.half_edges_at(v)) d += psi[static_cast<size_t>(h)];
  for (int k : kappa[static_cast<size_t>(v)]) d += k;
  return d;
}

bool GraphTerm::exceeds_dimension() const {
  for (int v = 0; v < graph.num_vertices(); ++v)
    if (vertex_degree(v) > 3 * graph.genus_of(v) - 3 + graph.valence(v)) return true;
  return false;
}

std::string GraphTerm::encode() const {
  std::ostringstream os;
  os << graph.encode() << "|chi:";
  for (size_t i = 0; i < chi.size(); ++i) {
    if (i) os << ",";
    os << chi[i];
  }
  os << "|psi:";
  for (size_t i = 0; i < psi.size(); ++i) {
    if (i) os << ",";
    os << psi[i];
  }
  os << "|kappa:";
  for (size_t v = 0; v < kappa.size(); ++v) {
    if (v) os << ";";
    os << "[";
    for (size_t i = 0; i < kappa[v].size(); ++i) {
      if (i) os << ",";
      os << kappa[v][i];
    }
    os << "]";
  }
  return os.str();
}

GraphTerm canonicalize_term(const GraphTerm& term) {
  if (!(term.graph == canonicalize(term.graph)))
    throw Error("canonicalize_term: graph must already be canonical");
  const int nh = term.graph.num_half_edges();
  const int nv = term.graph.num_vertices();
  GraphTerm best = term;
  for (auto& ks : best.kappa) std::sort(ks.begin(), ks.end());
  std::string best_key = best.encode();
  for (const auto& aut : graph_automorphisms(term.graph)) {
    GraphTerm cand = term;
    for (int h = 0; h < nh; ++h) {
      cand.chi[static_cast<size_t>(aut.half_edge_perm[static_cast<size_t>(h)])] =
          term.chi[static_cast<size_t>(h)];
      cand.psi[static_cast<size_t>(aut.half_edge_perm[static_cast<size_t>(h)])] =
          term.psi[static_cast<size_t>(h)];
    }
    for (int v = 0; v < nv; ++v)
      cand.kappa[static_cast<size_t>(aut.vertex_perm[static_cast<size_t>(v)])] =
          term.kappa[static_cast<size_t>(v)];
    for (auto& ks : cand.kappa) std::sort(ks.begin(), ks.end());
    std::string key = cand.encode();
    if (key < best_key) {
      best = std::move(cand);
      best_key = std::move(key);
    }
  }
  return best;
}

void TautClass::add_term(const GraphTerm& term, const Rational& coeff) {
  if (coeff.is_zero()) return;
  if (term.graph.total_genus() != g_ || term.graph.num_legs() != n_)
    throw AmbientMismatch("add_term: term does not live on Mbar_{" + std::to_string(g_) + "," +
                          std::to_string(n_) + "}");
  if (term.exceeds_dimension()) return;
  GraphTerm canon = canonicalize_term(term);
  std::string key = canon.encode();
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), std::make_pair(std::move(canon), coeff));
  } else {
    it->second.second += coeff;
    if (it->second.second.is_zero()) terms_.erase(it);
  }
}

int TautClass::max_degree() const {
  int d = -1;
  for (const auto& [key, tc] : terms_) d = std::max(d, tc.first.complex_degree());
  return d;
}

namespace {
void check_ambient(const TautClass& a, const TautClass& b) {
  if (a.genus() != b.genus() || a.num_legs() != b.num_legs() || a.order() != b.order())
    throw AmbientMismatch("class operation: mismatched (g, n, m)");
}
}  // namespace

TautClass class_add(const TautClass& a, const TautClass& b) {
  check_ambient(a, b);
  TautClass out = a;
  for (const auto& [key, tc] : b.terms()) out.add_term(tc.first, tc.second);
  return out;
}

TautClass class_scale(const TautClass& a, const Rational& c) {
  TautClass out(a.genus(), a.num_legs(), a.order());
  for (const auto& [key, tc] : a.terms()) out.add_term(tc.first, tc.second * c);
  return out;
}

TautClass class_truncate(const TautClass& a, int degree) {
  TautClass out(a.genus(), a.num_legs(), a.order());
  for (const auto& [key, tc] : a.terms())
    if (tc.first.complex_degree() <= degree) out.add_term(tc.first, tc.second);
  return out;
}

int LocalMono::degree() const {
  int d = std::accumulate(psi.begin(), psi.end(), 0);
  for (const auto& ks : kappa)
    for (int k : ks) d += k;
  return d;
}

LocalSeries local_one(int nh, int nv) {
  LocalMono one;
  one.psi.assign(static_cast<size_t>(nh), 0);
  one.kappa.assign(static_cast<size_t>(nv), {});
  return LocalSeries{{one, Rational(1)}};
}

LocalSeries local_mul(const LocalSeries& a, const LocalSeries& b, int max_degree) {
  LocalSeries out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      if (ma.degree() + mb.degree() > max_degree) continue;
      LocalMono m = ma;
      for (size_t i = 0; i < m.psi.size(); ++i) m.psi[i] += mb.psi[i];
      for (size_t v = 0; v < m.kappa.size(); ++v) {
        m.kappa[v].insert(m.kappa[v].end(), mb.kappa[v].begin(), mb.kappa[v].end());
        std::sort(m.kappa[v].begin(), m.kappa[v].end());
      }
      auto [it, inserted] = out.emplace(std::move(m), ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

LocalSeries exp_truncated(const LocalSeries& gen, int max_degree, int nh, int nv) {
  for (const auto& [m, c] : gen) {
    nh = static_cast<int>(m.psi.size());
    nv = static_cast<int>(m.kappa.size());
    if (m.degree() == 0 && !c.is_zero())
      throw NonNilpotentInput("exp_truncated: generator has a degree-0 part");
  }
  if (nh < 0 || nv < 0)
    throw Error("exp_truncated: variable counts needed for an empty generator");
  LocalSeries result = local_one(nh, nv);
  LocalSeries power = result;
  for (int k = 1; k <= max_degree; ++k) {
    power = local_mul(power, gen, max_degree);
    if (power.empty()) break;
    for (const auto& [m, c] : power) {
      Rational contrib = c / factorial(k);
      auto [it, inserted] = result.emplace(m, contrib);
      if (!inserted) it->second += contrib;
    }
  }
  for (auto it = result.begin(); it != result.end();)
    it = it->second.is_zero() ? result.erase(it) : std::next(it);
  return result;
}

namespace {

using BiPoly = std::vector<std::vector<Rational>>;  // [x-deg][y-deg]

BiPoly bi_zero(int d) {
  return BiPoly(static_cast<size_t>(d) + 1,
                std::vector<Rational>(static_cast<size_t>(d) + 1, Rational(0)));
}

BiPoly bi_mul(const BiPoly& a, const BiPoly& b, int max_degree) {
  BiPoly out = bi_zero(max_degree);
  for (int i = 0; i <= max_degree; ++i)
    for (int j = 0; i + j <= max_degree; ++j) {
      if (a[static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero()) continue;
      for (int k = 0; i + k <= max_degree; ++k)
        for (int l = 0; i + j + k + l <= max_degree; ++l)
          out[static_cast<size_t>(i + k)][static_cast<size_t>(j + l)] +=
              a[static_cast<size_t>(i)][static_cast<size_t>(j)] *
              b[static_cast<size_t>(k)][static_cast<size_t>(l)];
    }
  return out;
}

}  // namespace

std::vector<std::vector<Rational>> edge_series(const std::vector<Rational>& a, int max_degree) {
  if (!a.empty() && !a[0].is_zero()) throw Error("edge_series: degree-0 exponent coefficient");
  const int dn = max_degree + 1;  // numerator degree before dividing by (x+y)
  BiPoly expo = bi_zero(dn);
  for (int k = 1; k < static_cast<int>(a.size()) && k <= dn; ++k) {
    expo[static_cast<size_t>(k)][0] += a[static_cast<size_t>(k)];
    // -(-y)^k
    Rational sgn = (k % 2 == 0) ? Rational(-1) : Rational(1);
    expo[0][static_cast<size_t>(k)] += sgn * a[static_cast<size_t>(k)];
  }
  // numerator = 1 - exp(expo), truncated at dn
  BiPoly num = bi_zero(dn);
  BiPoly power = bi_zero(dn);
  power[0][0] = Rational(1);
  for (int k = 1; k <= dn; ++k) {
    power = bi_mul(power, expo, dn);
    Rational inv_fact = Rational(1) / factorial(k);
    for (int i = 0; i <= dn; ++i)
      for (int j = 0; i + j <= dn; ++j)
        num[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
            inv_fact * power[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  // Synthetic division by (x + y), viewing num as a polynomial in x with
  // y-polynomial coefficients: q_{i-1} = c_i - y q_i, remainder c_0 - y q_0.
  BiPoly q = bi_zero(dn);
  std::vector<Rational> carry(static_cast<size_t>(dn) + 1, Rational(0));  // y q_i
  for (int i = dn; i >= 1; --i) {
    for (int j = 0; j <= dn; ++j)
      q[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] =
          num[static_cast<size_t>(i)][static_cast<size_t>(j)] - carry[static_cast<size_t>(j)];
    for (int j = dn; j >= 1; --j)
      carry[static_cast<size_t>(j)] = q[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
    carry[0] = Rational(0);
  }
  for (int j = 0; j <= dn; ++j)
    if (num[0][static_cast<size_t>(j)] != carry[static_cast<size_t>(j)])
      throw NotDivisible("edge_series: numerator not divisible by (psi+ + psi-)");

  std::vector<std::vector<Rational>> out(static_cast<size_t>(max_degree) + 1,
                                         std::vector<Rational>(static_cast<size_t>(max_degree) + 1,
                                                               Rational(0)));
  for (int i = 0; i <= max_degree; ++i)
    for (int j = 0; i + j <= max_degree; ++j)
      out[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          q[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return out;
}

}  // namespace orbidr
