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

#include "symquery/classical.hpp"
#include "symquery/identities.hpp"
#include "symquery/symfun.hpp"

namespace {

void BM_DComplexity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = symquery::family_dj(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(symquery::d_complexity(f));
}
BENCHMARK(BM_DComplexity)->Arg(10)->Arg(20)->Arg(30);

void BM_BinomDet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(symquery::binom_det(n, 6));
}
BENCHMARK(BM_BinomDet)->Arg(14)->Arg(20)->Arg(30);

void BM_BinomDetClosed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(symquery::binom_det_closed(n, 6));
}
BENCHMARK(BM_BinomDetClosed)->Arg(14)->Arg(20)->Arg(30);

}  // namespace
