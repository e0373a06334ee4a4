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

#include "symquery/algos.hpp"
#include "symquery/symfun.hpp"

namespace {

symquery::Bits half_weight(int n) {
  symquery::Bits x(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n / 2; ++i) x[static_cast<std::size_t>(i)] = 1;
  return x;
}

void BM_XqueryDistribution(benchmark::State& state) {
  const auto x = half_weight(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(symquery::xquery_distribution(x));
}
BENCHMARK(BM_XqueryDistribution)->RangeMultiplier(2)->Range(4, 32);

void BM_GroverDistribution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  symquery::Bits x(static_cast<std::size_t>(n), 0);
  x[0] = 1;
  for (auto _ : state) benchmark::DoNotOptimize(symquery::grover_distribution(x));
}
BENCHMARK(BM_GroverDistribution)->RangeMultiplier(2)->Range(4, 64);

void BM_RunDj(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto x = half_weight(n);
  for (auto _ : state) benchmark::DoNotOptimize(symquery::dj(n, 1, x));
}
BENCHMARK(BM_RunDj)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_VerifyDj(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const symquery::AlgorithmSpec spec{symquery::AlgorithmId::Dj, n, 1};
  const auto f = symquery::promise_function(spec);
  for (auto _ : state) benchmark::DoNotOptimize(symquery::verify_exact(spec, f));
}
BENCHMARK(BM_VerifyDj)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_VerifyF2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const symquery::AlgorithmSpec spec{symquery::AlgorithmId::F2, n, n / 4};
  const auto f = symquery::promise_function(spec);
  for (auto _ : state) benchmark::DoNotOptimize(symquery::verify_exact(spec, f));
}
BENCHMARK(BM_VerifyF2)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace
