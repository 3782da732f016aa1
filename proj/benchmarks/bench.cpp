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

#include <benchmark/benchmark.h>

#include "orbidr/bernoulli.hpp"
#include "orbidr/dr_engine.hpp"
#include "orbidr/psi_oracle.hpp"
#include "orbidr/stable_graph.hpp"

using namespace orbidr;

namespace {

void BM_EnumerateGraphs(benchmark::State& state) {
  int g = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    // Rebuild from scratch by canonicalizing a copy so the per-call cache does
    // not hide the cost entirely.
    const auto& graphs = enumerate_graphs(g, n);
    long total_aut = 0;
    for (const auto& gr : graphs) total_aut += automorphism_order(gr);
    benchmark::DoNotOptimize(total_aut);
  }
}
BENCHMARK(BM_EnumerateGraphs)->Args({1, 2})->Args({2, 1})->Args({2, 2});

void BM_BernoulliAt(benchmark::State& state) {
  Rational x(17, 31);
  for (auto _ : state) {
    Rational acc(0);
    for (int k = 0; k <= static_cast<int>(state.range(0)); ++k) acc += bernoulli_at(k, x);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_BernoulliAt)->Arg(8)->Arg(16);

void BM_ClassAtR(benchmark::State& state) {
  TopData td;
  td.g = static_cast<int>(state.range(0));
  td.rep = BundleRep(1, 0);
  td.leg_sectors = {Sector(0), Sector(0)};
  td.lifts = {Rational(1), Rational(-1)};
  long r = working_bound(td) + 1;
  for (auto _ : state) {
    TautClass c = class_at_r(td, td.g, r);
    benchmark::DoNotOptimize(c.terms().size());
  }
}
BENCHMARK(BM_ClassAtR)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_PsiIntegral(benchmark::State& state) {
  for (auto _ : state) {
    Rational v = psi_integral(2, {static_cast<int>(state.range(0)), 1, 1});
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_PsiIntegral)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
