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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "orbidr/errors.hpp"

namespace orbidr {

/// Exact rational number, always in lowest terms with positive denominator.
/// Value type; all operations are pure. Serializes as "p/q" ("p" when q = 1)
/// with the sign on the numerator.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design
  Rational(long n, long d) : q_(n, d) {
    if (d == 0) throw Error("Rational: zero denominator");
    q_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  explicit Rational(const mpz_class& z) : q_(z) {}

  static Rational parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw Error("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw Error("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
  }

  std::string str() const { return q_.get_str(); }

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  bool is_zero() const { return q_ == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// Largest integer <= value.
  mpz_class floor() const {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return f;
  }

  /// Fractional part in [0, 1).
  Rational frac() const { return *this - Rational(mpz_class(floor())); }

  Rational abs() const { return q_ < 0 ? Rational(mpq_class(-q_)) : *this; }

  long to_long() const {
    if (!is_integer()) throw Error("Rational: " + str() + " is not an integer");
    if (!q_.get_num().fits_slong_p()) throw Error("Rational: out of long range");
    return q_.get_num().get_si();
  }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  mpq_class q_;
};

/// Remainder [a]_r in [0, r) with a - [a]_r an integer multiple of r.
/// a may be rational; the remainder then lives in [0, r) ∩ Q.
inline Rational rational_mod(const Rational& a, long r) {
  if (r < 1) throw Error("rational_mod: modulus must be >= 1");
  Rational q = a / Rational(r);
  return a - Rational(q.floor()) * Rational(r);
}

inline Rational binomial(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

inline Rational factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

/// Integer power of r as an exact rational; e negative gives 1/r^|e|.
inline Rational pow_rational(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  Rational b = e > 0 ? base : Rational(1) / base;
  long k = e > 0 ? e : -e;
  Rational out(1);
  for (long i = 0; i < k; ++i) out *= b;
  return out;
}

}  // namespace orbidr
