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

#ifndef COPRIMALITY_EMPIRICAL_HPP_
#define COPRIMALITY_EMPIRICAL_HPP_

// Ground truth for the densities.  Exact tuple counts over boxes [1,x]^k
// are recounted by inclusion-exclusion from per-graph counts; larger boxes
// are sampled by seeded Monte Carlo.
//
// Monte Carlo generator (stateless, counter based).  Sample i, coordinate
// c of a k-tuple uses counter n = i*k + c and the SplitMix64 output
//   z = seed + (n + 1) * 0x9E3779B97F4A7C15           (mod 2^64)
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   z =  z ^ (z >> 31)
// mapped to [1, X] as 1 + floor(z * X / 2^64).  The mapping bias is below
// X / 2^64 per draw.  Hit counts are therefore reproducible across
// thread counts and across implementations.

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "coprimality/density.hpp"
#include "coprimality/graph.hpp"

namespace coprimality {

inline constexpr std::uint64_t kMaxExactTuples = 100'000'000;
inline constexpr std::uint64_t kMaxInclusionExclusionWork = 500'000'000;
inline constexpr int kMaxInclusionExclusionK = 4;
inline constexpr std::uint64_t kMinMonteCarloBox = 10'000;
inline constexpr std::uint64_t kMinMonteCarloSamples = 10'000;

enum class CountMode { kExact, kMonteCarlo };

struct CountResult {
  CountMode mode = CountMode::kExact;
  std::uint64_t x = 0;  // box bound: x (exact) or X (Monte Carlo)
  std::optional<std::uint64_t> samples;
  std::uint64_t count = 0;  // tuples counted, or Monte Carlo hits
  long double estimate = 0.0L;
  // 4 standard errors for Monte Carlo, 0 for exact counts.
  long double ci_halfwidth = 0.0L;
  std::optional<std::uint64_t> seed;
};

// Tuples with exactly r (or at least r) coprime pairs among all k(k-1)/2.
struct PairCountCondition {
  int k = 2;
  int r = 0;
  PairCountMode mode = PairCountMode::kExactly;
};

using TupleCondition = std::variant<CoprimalityGraph, PairCountCondition>;

int arity(const TupleCondition& condition);

// 0 selects std::thread::hardware_concurrency().
struct CountOptions {
  unsigned threads = 0;
};

// sum over [1,x]^k of delta_G, by direct gcd checks.  Needs x^k <= 1e8.
CountResult count_delta_exact(const CoprimalityGraph& g, std::uint64_t x,
                              const CountOptions& options = {});

// Tuples in [1,x]^k whose number of coprime pairs is r (or >= r).
CountResult count_beta_exact(int k, int r, PairCountMode mode, std::uint64_t x,
                             const CountOptions& options = {});

// The same count as count_beta_exact, assembled as
//   sum_j (-1)^{j-r} w(j, r) sum_{|E| = j} count_delta_exact(G_E, x)
// with w = C(j, r) (exactly) or C(j-1, r-1) (at least).  k <= 4.
CountResult count_beta_via_inclusion_exclusion(int k, int r,
                                               PairCountMode mode,
                                               std::uint64_t x,
                                               const CountOptions& options = {});

// Uniform samples from [1,X]^k.  X, samples >= 1e4.
CountResult monte_carlo(const TupleCondition& condition, std::uint64_t box,
                        std::uint64_t samples, std::uint64_t seed,
                        const CountOptions& options = {});

// One word of the Monte Carlo stream (see the header comment).
std::uint64_t counter_rng_word(std::uint64_t seed, std::uint64_t counter);
std::uint64_t counter_rng_uniform(std::uint64_t seed, std::uint64_t counter,
                                  std::uint64_t box);

struct DiagnosticRow {
  std::uint64_t x = 0;
  std::uint64_t count = 0;
  long double estimate = 0.0L;
  // |estimate - A_G| * x / (log x)^{d_G}
  long double normalized_remainder = 0.0L;
};

// Each x must be >= 2 and within the exact-count guard.
std::vector<DiagnosticRow> convergence_diagnostic(
    const CoprimalityGraph& g, const std::vector<std::uint64_t>& xs,
    long double density, const CountOptions& options = {});
// A_G taken from `engine`.
std::vector<DiagnosticRow> convergence_diagnostic(
    const CoprimalityGraph& g, const std::vector<std::uint64_t>& xs,
    DensityEngine& engine, const CountOptions& options = {});

}  // namespace coprimality

#endif  // COPRIMALITY_EMPIRICAL_HPP_
