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

#include <string>
#include <utility>
#include <vector>

#include "orbidr/rational.hpp"

namespace orbidr {

/// Univariate polynomial over Q in the formal variable r. Coefficients are
/// indexed by degree, trailing zeros trimmed. degree() of the zero polynomial
/// is -1 (stand-in for the -infinity sentinel).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Rational c) { coeffs_.push_back(std::move(c)); trim(); }
  explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UniPoly monomial(const Rational& c, int degree) {
    std::vector<Rational> v(static_cast<size_t>(degree) + 1, Rational(0));
    v.back() = c;
    return UniPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  const Rational& coeff(int d) const {
    static const Rational zero(0);
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(d)];
  }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) { return *this += -o; }
  UniPoly operator-() const {
    UniPoly p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(out));
  }

  UniPoly scale(const Rational& c) const {
    UniPoly p(*this);
    for (auto& x : p.coeffs_) x *= c;
    p.trim();
    return p;
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string str(const std::string& var = "r") const {
    if (is_zero()) return "0";
    std::string s;
    for (int d = degree(); d >= 0; --d) {
      const Rational& c = coeff(d);
      if (c.is_zero()) continue;
      if (!s.empty()) s += c < Rational(0) ? " - " : " + ";
      else if (c < Rational(0)) s += "-";
      Rational ac = c.abs();
      if (d == 0 || ac != Rational(1)) s += ac.str();
      if (d > 0) {
        if (ac != Rational(1)) s += "*";
        s += var;
        if (d > 1) s += "^" + std::to_string(d);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

/// Coefficient of r^0.
inline Rational constant_term(const UniPoly& p) { return p.coeff(0); }

/// Exact Lagrange interpolation through the first degree_bound + 1 samples;
/// every extra sample is verified to lie on the result. Throws NotPolynomial
/// when an extra sample disagrees (the sampled range is too low).
inline UniPoly lagrange_interpolate(const std::vector<std::pair<long, Rational>>& samples,
                                    int degree_bound) {
  if (degree_bound < 0) throw Error("lagrange_interpolate: negative degree bound");
  const size_t need = static_cast<size_t>(degree_bound) + 1;
  if (samples.size() < need) throw Error("lagrange_interpolate: not enough samples");
  for (size_t i = 0; i < samples.size(); ++i)
    for (size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i].first == samples[j].first)
        throw Error("lagrange_interpolate: duplicate sample point");

  UniPoly result;
  for (size_t i = 0; i < need; ++i) {
    UniPoly basis(Rational(1));
    Rational denom(1);
    for (size_t j = 0; j < need; ++j) {
      if (j == i) continue;
      // basis *= (r - x_j)
      basis = basis * UniPoly(std::vector<Rational>{Rational(-samples[j].first), Rational(1)});
      denom *= Rational(samples[i].first - samples[j].first);
    }
    result += basis.scale(samples[i].second / denom);
  }
  for (size_t i = need; i < samples.size(); ++i) {
    if (result.evaluate(Rational(samples[i].first)) != samples[i].second)
      throw NotPolynomial("surplus sample at r=" + std::to_string(samples[i].first) +
                          " is off the interpolated polynomial");
  }
  return result;
}

}  // namespace orbidr
