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
//
// Acceptance gate: one pass/fail line per criterion. Exit code is the number
// of failing criteria.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "orbidr/bernoulli.hpp"
#include "orbidr/dr_engine.hpp"
#include "orbidr/psi_oracle.hpp"

using namespace orbidr;

namespace {

int g_failures = 0;

void report(int idx, const std::string& what, bool ok, double seconds) {
  std::printf("criterion %2d: %s  %s  (%.1fs)\n", idx, ok ? "PASS" : "FAIL", what.c_str(),
              seconds);
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

template <typename F>
void criterion(int idx, const std::string& what, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::printf("criterion %2d: exception: %s\n", idx, e.what());
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(idx, what, ok, dt);
}

DRProblem make_problem(int g, int m, int s,
                       std::vector<std::pair<int, std::string>> mu0,
                       std::vector<std::pair<int, std::string>> muInf,
                       std::vector<int> absolute = {}) {
  DRProblem p;
  p.g = g;
  p.rep = BundleRep(m, s);
  for (int a : absolute) p.absolute.push_back(Sector(a));
  for (auto& [sec, mu] : mu0) p.mu_zero.push_back({Sector(sec), Rational::parse(mu)});
  for (auto& [sec, mu] : muInf) p.mu_infinity.push_back({Sector(sec), Rational::parse(mu)});
  return p;
}

// The genus-0 matrix: >= 5 balanced contact vectors per m in {1, 2, 3}.
std::vector<DRProblem> genus0_matrix() {
  std::vector<DRProblem> ps;
  // m = 1
  ps.push_back(make_problem(0, 1, 0, {{0, "2"}}, {{0, "1"}, {0, "1"}}));
  ps.push_back(make_problem(0, 1, 0, {{0, "1"}, {0, "1"}}, {{0, "2"}}));
  ps.push_back(make_problem(0, 1, 0, {{0, "3"}}, {{0, "1"}, {0, "2"}}));
  ps.push_back(make_problem(0, 1, 0, {{0, "1"}, {0, "3"}}, {{0, "2"}, {0, "2"}}));
  ps.push_back(make_problem(0, 1, 0, {{0, "4"}}, {{0, "1"}, {0, "3"}}));
  // m = 2, s = 1: zero sector 1 <-> frac 1/2; infinity sector 1 <-> frac 1/2
  ps.push_back(make_problem(0, 2, 1, {{1, "3/2"}}, {{1, "1/2"}, {0, "1"}}));
  ps.push_back(make_problem(0, 2, 1, {{1, "1/2"}, {0, "1"}}, {{1, "3/2"}}));
  ps.push_back(make_problem(0, 2, 1, {{1, "1/2"}, {1, "1/2"}}, {{0, "1"}}));
  ps.push_back(make_problem(0, 2, 1, {{0, "1"}}, {{1, "1/2"}, {1, "1/2"}}));
  ps.push_back(make_problem(0, 2, 1, {{1, "5/2"}}, {{0, "2"}, {1, "1/2"}}));
  // m = 3, s = 1: zero sectors 1 -> 1/3, 2 -> 2/3; infinity 1 -> 2/3, 2 -> 1/3
  ps.push_back(make_problem(0, 3, 1, {{1, "4/3"}}, {{0, "1"}, {2, "1/3"}}));
  ps.push_back(make_problem(0, 3, 1, {{1, "1/3"}, {2, "2/3"}}, {{0, "1"}}));
  ps.push_back(make_problem(0, 3, 1, {{0, "1"}}, {{2, "1/3"}, {1, "2/3"}}));
  ps.push_back(make_problem(0, 3, 1, {{2, "2/3"}, {2, "2/3"}}, {{2, "4/3"}}, {0}));
  ps.push_back(make_problem(0, 3, 1, {{1, "1/3"}, {1, "1/3"}, {1, "1/3"}}, {{0, "1"}}));
  return ps;
}

// g <= 2, n <= 4, m <= 3 matrix for branch equality (>= 20 problems).
std::vector<DRProblem> branch_matrix() {
  std::vector<DRProblem> ps = genus0_matrix();  // 15 problems
  ps.push_back(make_problem(1, 1, 0, {{0, "1"}}, {{0, "1"}}));
  ps.push_back(make_problem(1, 1, 0, {{0, "2"}}, {{0, "2"}}));
  ps.push_back(make_problem(1, 1, 0, {{0, "3"}}, {{0, "1"}, {0, "2"}}));
  ps.push_back(make_problem(1, 1, 0, {{0, "1"}}, {{0, "1"}}, {0}));
  ps.push_back(make_problem(1, 2, 1, {{1, "3/2"}}, {{1, "3/2"}}));
  ps.push_back(make_problem(1, 2, 1, {{1, "1/2"}, {1, "1/2"}}, {{0, "1"}}));
  ps.push_back(make_problem(1, 3, 1, {{1, "4/3"}}, {{2, "4/3"}}));
  ps.push_back(make_problem(1, 3, 1, {{1, "1/3"}, {2, "2/3"}}, {{0, "1"}}));
  ps.push_back(make_problem(2, 1, 0, {{0, "3"}}, {{0, "3"}}));
  ps.push_back(make_problem(2, 1, 0, {{0, "1"}, {0, "1"}}, {{0, "2"}}));
  ps.push_back(make_problem(2, 2, 1, {{1, "3/2"}, {0, "1"}}, {{1, "5/2"}}));
  return ps;
}

struct PathCase {
  TopData data;
  int d;
};

std::vector<PathCase> path_matrix() {
  std::vector<PathCase> cases;
  TopData g0;
  g0.g = 0;
  g0.rep = BundleRep(1, 0);
  g0.leg_sectors = {Sector(0), Sector(0), Sector(0)};
  g0.lifts = {Rational(1), Rational(-1), Rational(0)};
  cases.push_back({g0, 0});

  for (long a : {1L, 2L}) {
    TopData g1;
    g1.g = 1;
    g1.rep = BundleRep(1, 0);
    g1.leg_sectors = {Sector(0), Sector(0)};
    g1.lifts = {Rational(a), Rational(-a)};
    cases.push_back({g1, 1});
  }

  // Twisted lifts must sum to zero (degree of L on B Z_m), like the DR
  // vectors (mu_0, -mu_inf) do; otherwise no weight function exists and the
  // class is empty.
  TopData tw2;
  tw2.g = 1;
  tw2.rep = BundleRep(2, 1);
  tw2.leg_sectors = {Sector(1), Sector(1)};
  tw2.lifts = {Rational(3, 2), Rational(-3, 2)};
  cases.push_back({tw2, 1});

  TopData tw3;
  tw3.g = 1;
  tw3.rep = BundleRep(3, 1);
  tw3.leg_sectors = {Sector(1), Sector(2)};
  tw3.lifts = {Rational(1, 3), Rational(-1, 3)};
  cases.push_back({tw3, 1});

  TopData g2;
  g2.g = 2;
  g2.rep = BundleRep(1, 0);
  g2.leg_sectors = {Sector(0), Sector(0)};
  g2.lifts = {Rational(2), Rational(-2)};
  cases.push_back({g2, 2});

  TopData g2m2;
  g2m2.g = 2;
  g2m2.rep = BundleRep(2, 1);
  g2m2.leg_sectors = {Sector(1), Sector(1)};
  g2m2.lifts = {Rational(3, 2), Rational(-3, 2)};
  cases.push_back({g2m2, 2});
  return cases;
}

}  // namespace

int main() {
  criterion(1, "genus-0 DR is the fundamental class (m in {1,2,3}, 5 vectors each)", [] {
    for (const DRProblem& p : genus0_matrix()) {
      if (!validate_dr_problem(p).all_pass()) return false;
      for (Branch b : {Branch::zero, Branch::infinity}) {
        TautClass c = dr_cycle(p, b);
        if (c.terms().size() != 1) return false;
        const auto& [term, coeff] = c.terms().begin()->second;
        if (term.graph.num_edges() != 0 || term.complex_degree() != 0) return false;
        if (coeff != Rational(1)) return false;
      }
    }
    return true;
  });

  criterion(2, "branch equality on the g<=2, n<=4, m<=3 matrix (26 problems)", [] {
    for (const DRProblem& p : branch_matrix())
      if (!(dr_cycle(p, Branch::zero) == dr_cycle(p, Branch::infinity))) return false;
    return true;
  });

  criterion(3, "polynomiality with 4 surplus r-samples (d <= 2, m <= 3)", [] {
    for (const PathCase& c : path_matrix()) {
      // 2d+1 interpolation points + 4 surplus; lagrange_interpolate verifies
      // each surplus point exactly and throws NotPolynomial on any mismatch.
      RPolyClass rp = polynomial_class(c.data, c.d, default_r_samples(c.data, c.d, 4));
      if (rp.terms.empty()) return false;
    }
    return true;
  });

  criterion(4, "leading-term path equals interpolated constant term, term-by-term", [] {
    for (const PathCase& c : path_matrix()) {
      TautClass lead = leading_term_class(c.data, c.d);
      TautClass cons =
          polynomial_class(c.data, c.d, default_r_samples(c.data, c.d)).constant_term_class();
      if (!(lead == cons)) return false;
    }
    return true;
  });

  criterion(5, "JPPZ regression: psi coefficients a^2/2, loop coefficient -1/24", [] {
    // Hand oracle for the loop coefficient, recorded here: the loop term sums
    // B_2((w + 0)/r) over the r weights w, and the multiplication theorem
    // gives sum_w B_2(w/r) = B_2(0)/r = 1/(6r). With the vertex prefactor
    // r^{2g-1-h1} = r^0, the 1/|Aut| = 1/2, the edge-series constant -1/2
    // per B_2, and the overall r^{2d-2g+1} = r, the term is
    // r * (1/2) * (-1/2) * (1/(6r)) = -1/24, independent of r.
    for (long r : {5L, 7L, 11L}) {
      Rational s(0);
      for (long w = 0; w < r; ++w) s += bernoulli_at(2, Rational(w, r));
      if (s != Rational(1, 6 * r)) return false;
      if (Rational(r) * Rational(1, 2) * Rational(-1, 2) * s != Rational(-1, 24)) return false;
    }
    for (long a : {1L, 2L, 3L}) {
      DRProblem p = make_problem(1, 1, 0, {{0, std::to_string(a)}}, {{0, std::to_string(a)}});
      TautClass c = dr_cycle(p, Branch::zero);
      int psi_found = 0, loop_found = 0;
      for (const auto& [key, tc] : c.terms()) {
        if (tc.first.graph.num_edges() == 0) {
          if (tc.second != Rational(a * a, 2)) return false;
          ++psi_found;
        } else if (tc.first.graph.num_vertices() == 1) {
          if (tc.second != Rational(-1, 24)) return false;
          ++loop_found;
        }
      }
      if (psi_found != 2 || loop_found != 1) return false;
    }
    return true;
  });

  criterion(6, "weight counts: brute force = tree-based = r^h1 or 0 (r in {5,7,11})", [] {
    for (int m : {1, 2, 3}) {
      BundleRep rep(m, 1 % m);
      for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {1, 2}, {2, 1}}) {
        std::vector<Sector> legs(static_cast<size_t>(n), Sector(0));
        std::vector<Rational> lifts(static_cast<size_t>(n), Rational(0));
        for (const StableGraph& gr : enumerate_graphs(g, n)) {
          if (gr.h1() > 2) continue;
          for (const Decoration& dec : enumerate_decorations(gr, rep, legs)) {
            for (long r : {5L, 7L, 11L}) {
              long fast = weight_count(gr, dec, rep, lifts, r);
              long enumd = static_cast<long>(enumerate_weights(gr, dec, rep, lifts, r).size());
              if (fast != enumd) return false;
              long rh1 = 1;
              for (int i = 0; i < gr.h1(); ++i) rh1 *= r;
              if (fast != 0 && fast != rh1) return false;
              // Raw assignment search where affordable.
              double space = 1;
              for (int e = 0; e < 2 * gr.num_edges(); ++e) space *= static_cast<double>(r);
              if (space <= 2e5 &&
                  testing::brute_force_weights(gr, dec, rep, lifts, r) != fast)
                return false;
            }
          }
        }
      }
    }
    return true;
  });

  criterion(7, "Bernoulli addition formula (m <= 8, 50 random points) and quoted B1, B2", [] {
    if (bernoulli_polynomial(1) !=
        UniPoly(std::vector<Rational>{Rational(-1, 2), Rational(1)}))
      return false;
    if (bernoulli_polynomial(2) !=
        UniPoly(std::vector<Rational>{Rational(1, 6), Rational(-1), Rational(1)}))
      return false;
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 11);
    for (int trial = 0; trial < 50; ++trial) {
      Rational x(num(rng), den(rng)), y(num(rng), den(rng));
      for (int m = 0; m <= 8; ++m) {
        Rational rhs(0);
        for (int k = 0; k <= m; ++k)
          rhs += binomial(m, k) * bernoulli_at(k, x) * pow_rational(y, m - k);
        if (bernoulli_at(m, x + y) != rhs) return false;
      }
    }
    return true;
  });

  criterion(8, "psi oracle: genus-0 closed form n <= 7, <tau_1>_1, string/dilaton", [] {
    std::function<bool(int, std::vector<int>&, int)> rec = [&](int n, std::vector<int>& ks,
                                                               int left) {
      if (static_cast<int>(ks.size()) == n - 1) {
        ks.push_back(left);
        Rational expect = factorial(n - 3);
        for (int k : ks) expect /= factorial(k);
        bool ok = psi_integral(0, ks) == expect;
        ks.pop_back();
        return ok;
      }
      for (int k = 0; k <= left; ++k) {
        ks.push_back(k);
        bool ok = rec(n, ks, left - k);
        ks.pop_back();
        if (!ok) return false;
      }
      return true;
    };
    for (int n = 3; n <= 7; ++n) {
      std::vector<int> ks;
      if (!rec(n, ks, n - 3)) return false;
    }
    if (psi_integral(1, {1}) != Rational(1, 24)) return false;
    // String and dilaton across g <= 2, n <= 6.
    std::mt19937 rng(777);
    for (int g = 0; g <= 2; ++g)
      for (int n = 1; n <= 5; ++n) {
        if (2 * g - 2 + n <= 0) continue;
        int dim = 3 * g - 3 + n;
        for (int trial = 0; trial < 6; ++trial) {
          std::vector<int> ks(static_cast<size_t>(n), 0);
          int left = dim;
          for (size_t i = 0; i + 1 < ks.size(); ++i) {
            std::uniform_int_distribution<int> pick(0, left);
            ks[i] = pick(rng);
            left -= ks[i];
          }
          ks.back() = left;
          std::vector<int> with0 = ks;
          with0.push_back(0);
          Rational lhs = psi_integral(g, with0), rhs(0);
          for (size_t i = 0; i < ks.size(); ++i) {
            if (ks[i] == 0) continue;
            std::vector<int> low = ks;
            --low[i];
            rhs += psi_integral(g, low);
          }
          if (lhs != rhs) return false;
          std::vector<int> with1 = ks;
          with1.push_back(1);
          if (psi_integral(g, with1) != Rational(2 * g - 2 + n) * psi_integral(g, ks))
            return false;
        }
      }
    return true;
  });

  criterion(9, "lift-shift invariance of class_at_r on 10 random problems", [] {
    std::mt19937 rng(987654);
    std::uniform_int_distribution<long> amp(1, 4);
    std::uniform_int_distribution<int> pick_m(1, 3);
    for (int trial = 0; trial < 10; ++trial) {
      TopData td;
      td.g = 1;
      int m = pick_m(rng);
      td.rep = BundleRep(m, m > 1 ? 1 : 0);
      int sec = (trial % 2 == 0 || m == 1) ? 0 : 1;
      td.leg_sectors = {Sector(sec), Sector((m - sec) % m)};
      // Lifts sum to zero so weight functions exist and the class is nonzero.
      long A = amp(rng);
      Rational a0 = Rational(A) + age(td.rep, td.leg_sectors[0]);
      td.lifts = {a0, -a0};
      long r = working_bound(td) + 1 + static_cast<long>(trial);
      size_t which = trial % 2;
      TopData shifted = td;
      shifted.lifts[which] += Rational(r);
      if (!(class_at_r(td, 1, r) == class_at_r(shifted, 1, r))) return false;
    }
    return true;
  });

  criterion(10, "cmd_dr determinism: byte-identical payloads across runs", [] {
    const char* path = "/tmp/orbidr_acceptance_det.json";
    {
      std::ofstream f(path);
      f << R"({
        "target": {"m": 2, "s": 1},
        "genus": 1,
        "relative_zero": [{"sector": 1, "contact": "3/2"}],
        "relative_infinity": [{"sector": 1, "contact": "3/2"}]
      })";
    }
    std::ostringstream out1, out2, err;
    int c1 = cli::run({"dr", path, "--emit-rpoly"}, out1, err);
    int c2 = cli::run({"dr", path, "--emit-rpoly"}, out2, err);
    std::remove(path);
    return c1 == 0 && c2 == 0 && out1.str() == out2.str() && !out1.str().empty();
  });

  std::printf("%s (%d criteria failed)\n", g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              g_failures);
  return g_failures;
}
