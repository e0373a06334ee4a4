// Copyright 2026 The symquery Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "symquery/polydeg.hpp"
#include "symquery/symfun.hpp"

namespace {

void BM_DegreeDj(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = symquery::family_dj(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(symquery::degree(f, symquery::Rational(0)));
}
BENCHMARK(BM_DegreeDj)->Arg(8)->Arg(16)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_DegreeTwoFeasibility(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto f = symquery::family_dw(4 * m, m, 3 * m);
  for (auto _ : state) benchmark::DoNotOptimize(symquery::lp_feasible(f, symquery::Rational(0), 2));
}
BENCHMARK(BM_DegreeTwoFeasibility)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_ClassifyDegreeTwo(benchmark::State& state) {
  const auto f = symquery::family_f2(12, 3);
  for (auto _ : state) benchmark::DoNotOptimize(symquery::classify_deg2(f));
}
BENCHMARK(BM_ClassifyDegreeTwo);

}  // namespace
