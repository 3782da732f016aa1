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

#include <random>

#include "orbidr/bernoulli.hpp"
#include "orbidr/rational.hpp"
#include "orbidr/unipoly.hpp"

using namespace orbidr;

TEST_CASE("rational_mod remainder lives in [0, r)") {
  CHECK(rational_mod(Rational(7, 2), 3) == Rational(1, 2));
  CHECK(rational_mod(Rational(-2), 5) == Rational(3));
  CHECK(rational_mod(Rational(6), 3) == Rational(0));
  for (long p = -20; p <= 20; ++p)
    for (long q = 1; q <= 4; ++q)
      for (long r = 1; r <= 6; ++r) {
        Rational a(p, q), m = rational_mod(a, r);
        CHECK(Rational(0) <= m);
        CHECK(m < Rational(r));
        CHECK(((a - m) / Rational(r)).is_integer());
      }
}

TEST_CASE("rational parsing and serialization round-trip") {
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational(-4, 6).str() == "-2/3");
  CHECK(Rational(5, 1).str() == "5");
}

TEST_CASE("bernoulli polynomials match the quoted low-degree forms") {
  CHECK(bernoulli_polynomial(0) == UniPoly(Rational(1)));
  CHECK(bernoulli_polynomial(1) ==
        UniPoly(std::vector<Rational>{Rational(-1, 2), Rational(1)}));
  CHECK(bernoulli_polynomial(2) ==
        UniPoly(std::vector<Rational>{Rational(1, 6), Rational(-1), Rational(1)}));
  CHECK(bernoulli_number(0) == Rational(1));
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(2) == Rational(1, 6));
  CHECK(bernoulli_number(3) == Rational(0));
  CHECK(bernoulli_number(4) == Rational(-1, 30));
}

TEST_CASE("bernoulli addition formula at random rational points") {
  std::mt19937 rng(20260823);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 9);
  for (int trial = 0; trial < 25; ++trial) {
    Rational x(num(rng), den(rng)), y(num(rng), den(rng));
    for (int m = 0; m <= 8; ++m) {
      Rational lhs = bernoulli_at(m, x + y);
      Rational rhs(0);
      for (int k = 0; k <= m; ++k)
        rhs += binomial(m, k) * bernoulli_at(k, x) * pow_rational(y, m - k);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("bernoulli multiplication property by direct summation") {
  for (int n = 0; n <= 4; ++n)
    for (long r = 1; r <= 12; ++r) {
      Rational sum(0);
      for (long w = 0; w < r; ++w) sum += bernoulli_at(n, Rational(w, r));
      CHECK(sum == pow_rational(Rational(1, r), n - 1) * bernoulli_number(n));
    }
}

TEST_CASE("lagrange interpolation examples") {
  UniPoly sq = lagrange_interpolate({{1, Rational(1)}, {2, Rational(4)}, {3, Rational(9)},
                                     {4, Rational(16)}},
                                    2);
  CHECK(sq == UniPoly(std::vector<Rational>{Rational(0), Rational(0), Rational(1)}));
  Rational c(7, 3);
  UniPoly cc = lagrange_interpolate({{5, c}, {6, c}, {7, c}}, 0);
  CHECK(cc == UniPoly(c));
  CHECK_THROWS_AS(
      lagrange_interpolate({{1, Rational(1)}, {2, Rational(2)}, {3, Rational(4)}}, 1),
      NotPolynomial);
}

TEST_CASE("interpolate after evaluate is the identity on polynomials") {
  UniPoly p(std::vector<Rational>{Rational(1, 3), Rational(-2), Rational(0), Rational(5, 7)});
  std::vector<std::pair<long, Rational>> samples;
  for (long r = 10; r < 16; ++r) samples.push_back({r, p.evaluate(Rational(r))});
  CHECK(lagrange_interpolate(samples, 3) == p);
}

TEST_CASE("constant_term extraction") {
  UniPoly p(std::vector<Rational>{Rational(1, 2), Rational(-1, 2), Rational(1, 12)});
  CHECK(constant_term(p) == Rational(1, 2));
  CHECK(constant_term(UniPoly()) == Rational(0));
  CHECK(constant_term(UniPoly(Rational(-1, 24))) == Rational(-1, 24));
}
