// Copyright 2026 The coprimality Authors
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

#include "coprimality/density.hpp"
#include "coprimality/empirical.hpp"
#include "coprimality/euler_product.hpp"
#include "coprimality/primes.hpp"

namespace coprimality {
namespace {

void BM_SievePrimes(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sieve_primes(limit));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SievePrimes)->RangeMultiplier(10)->Range(100'000, 10'000'000)
    ->Unit(benchmark::kMillisecond);

// Sieve cost excluded: the shared table is warmed once.
void BM_EvaluateEulerProduct(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  const UniLocalFactor q({1, 0, -6, 8, -3});
  shared_prime_table(limit);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(q, limit, {.threads = 1}));
  }
}
BENCHMARK(BM_EvaluateEulerProduct)->RangeMultiplier(10)
    ->Range(100'000, 10'000'000)->Unit(benchmark::kMillisecond);

void BM_BuildIsoTable(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_iso_table(k));
  }
}
BENCHMARK(BM_BuildIsoTable)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_DensityExactR(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    DensityEngine engine(1'000'000, {.threads = 1});
    benchmark::DoNotOptimize(engine.density_exact_r(k, 0));
  }
}
BENCHMARK(BM_DensityExactR)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_CountBetaExact(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        count_beta_exact(4, 0, PairCountMode::kExactly, x, {.threads = 1}));
  }
  state.SetItemsProcessed(state.iterations() * x * x * x * x);
}
BENCHMARK(BM_CountBetaExact)->Arg(15)->Arg(30)->Arg(60)
    ->Unit(benchmark::kMillisecond);

void BM_CountDeltaExactCycle(benchmark::State& state) {
  const CoprimalityGraph g = cycle_graph(4);
  const auto x = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_delta_exact(g, x, {.threads = 1}));
  }
}
BENCHMARK(BM_CountDeltaExactCycle)->Arg(40)->Arg(80)
    ->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  const TupleCondition condition = PairCountCondition{4, 0, PairCountMode::kExactly};
  const auto samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        monte_carlo(condition, 1'000'000, samples, 1, {.threads = 1}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(100'000)->Arg(1'000'000)
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace coprimality

BENCHMARK_MAIN();
