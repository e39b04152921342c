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

#include "coprimality/empirical.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>

#include "coprimality/error.hpp"

namespace coprimality {

namespace {

constexpr std::uint64_t kTableLimit = 2048;
constexpr std::uint64_t kSampleChunk = 1 << 14;

std::optional<std::uint64_t> checked_power(std::uint64_t base, int exponent,
                                           std::uint64_t cap) {
  std::uint64_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (base != 0 && result > cap / base) return std::nullopt;
    result *= base;
  }
  return result;
}

std::uint64_t guarded_box_size(std::uint64_t x, int k) {
  if (x < 1) throw Error(ErrorCode::kOutOfRange, "box bound x must be >= 1");
  auto total = checked_power(x, k, kMaxExactTuples);
  if (!total || *total > kMaxExactTuples) {
    throw Error(ErrorCode::kGuardExceeded,
                "x^k exceeds the exact-count guard of " +
                    std::to_string(kMaxExactTuples) + " tuples");
  }
  return *total;
}

// gcd(a, b) == 1 for 1 <= a, b <= x, tabulated for small boxes.
class CoprimeTest {
 public:
  explicit CoprimeTest(std::uint64_t x) : x_(x) {
    if (x <= kTableLimit) {
      table_.resize((x + 1) * (x + 1));
      for (std::uint64_t a = 1; a <= x; ++a) {
        for (std::uint64_t b = 1; b <= x; ++b) {
          table_[a * (x + 1) + b] = std::gcd(a, b) == 1 ? 1 : 0;
        }
      }
    }
  }

  bool operator()(std::uint64_t a, std::uint64_t b) const {
    if (!table_.empty()) return table_[a * (x_ + 1) + b] != 0;
    return std::gcd(a, b) == 1;
  }

 private:
  std::uint64_t x_;
  std::vector<std::uint8_t> table_;
};

unsigned resolve_threads(unsigned requested, std::uint64_t work_items) {
  unsigned n = requested == 0 ? std::thread::hardware_concurrency() : requested;
  n = std::max(1u, n);
  return static_cast<unsigned>(std::min<std::uint64_t>(n, std::max<std::uint64_t>(work_items, 1)));
}

// Sums fn(item) for item in [0, items).  Integer addition, so the result
// does not depend on scheduling.
template <typename Fn>
std::uint64_t parallel_sum(std::uint64_t items, unsigned threads, Fn fn) {
  std::atomic<std::uint64_t> cursor{0};
  std::atomic<std::uint64_t> total{0};
  auto work = [&] {
    std::uint64_t local = 0;
    for (std::uint64_t i = cursor++; i < items; i = cursor++) local += fn(i);
    total += local;
  };
  const unsigned n = resolve_threads(threads, items);
  if (n <= 1) {
    work();
  } else {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < n; ++t) workers.emplace_back(work);
  }
  return total.load();
}

CountResult exact_result(std::uint64_t x, std::uint64_t count,
                         std::uint64_t box_size) {
  CountResult out;
  out.mode = CountMode::kExact;
  out.x = x;
  out.count = count;
  out.estimate =
      static_cast<long double>(count) / static_cast<long double>(box_size);
  return out;
}

struct GraphCounter {
  const CoprimeTest& coprime;
  // Earlier neighbors of each vertex (0-based indices).
  std::vector<std::vector<int>> earlier;
  std::uint64_t x;

  std::uint64_t count(std::vector<std::uint64_t>& values, int v) const {
    const int k = static_cast<int>(earlier.size());
    if (v == k) return 1;
    std::uint64_t total = 0;
    for (std::uint64_t n = 1; n <= x; ++n) {
      bool ok = true;
      for (int u : earlier[static_cast<std::size_t>(v)]) {
        if (!coprime(values[static_cast<std::size_t>(u)], n)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      values[static_cast<std::size_t>(v)] = n;
      total += count(values, v + 1);
    }
    return total;
  }
};

struct PairCounter {
  const CoprimeTest& coprime;
  int k;
  int r;
  PairCountMode mode;
  std::uint64_t x;
  std::vector<std::uint64_t> power;  // x^i

  // `pairs` coprime pairs among the first v coordinates.
  std::uint64_t count(std::vector<std::uint64_t>& values, int v,
                      int pairs) const {
    const int remaining = pair_count(k) - pair_count(v);
    if (mode == PairCountMode::kAtLeast && pairs >= r) {
      return power[static_cast<std::size_t>(k - v)];
    }
    if (mode == PairCountMode::kExactly && pairs > r) return 0;
    if (pairs + remaining < r) return 0;
    if (v == k) return pairs == r || mode == PairCountMode::kAtLeast ? 1 : 0;
    std::uint64_t total = 0;
    for (std::uint64_t n = 1; n <= x; ++n) {
      int added = 0;
      for (int u = 0; u < v; ++u) {
        if (coprime(values[static_cast<std::size_t>(u)], n)) ++added;
      }
      values[static_cast<std::size_t>(v)] = n;
      total += count(values, v + 1, pairs + added);
    }
    return total;
  }
};

void check_pair_condition(int k, int r, PairCountMode mode) {
  if (k < 2 || k > kMaxVertices) {
    throw Error(ErrorCode::kOutOfRange, "k = " + std::to_string(k));
  }
  const int low = mode == PairCountMode::kAtLeast ? 1 : 0;
  if (r < low || r > pair_count(k)) {
    throw Error(ErrorCode::kOutOfRange,
                "r = " + std::to_string(r) + " outside " +
                    std::to_string(low) + ".." + std::to_string(pair_count(k)));
  }
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t result = 1;
  for (int i = 1; i <= r; ++i) {
    result = result * static_cast<std::uint64_t>(n - r + i) /
             static_cast<std::uint64_t>(i);
  }
  return result;
}

bool pair_condition_holds(const PairCountCondition& c,
                          const std::vector<std::uint64_t>& values) {
  int pairs = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (std::gcd(values[i], values[j]) == 1) ++pairs;
    }
  }
  return c.mode == PairCountMode::kExactly ? pairs == c.r : pairs >= c.r;
}

bool graph_condition_holds(const CoprimalityGraph& g,
                           const std::vector<std::uint64_t>& values) {
  for (const Edge& e : g.edges()) {
    if (std::gcd(values[static_cast<std::size_t>(e.u - 1)],
                 values[static_cast<std::size_t>(e.v - 1)]) != 1) {
      return false;
    }
  }
  return true;
}

}  // namespace

int arity(const TupleCondition& condition) {
  return std::visit(
      [](const auto& c) -> int {
        if constexpr (std::is_same_v<std::decay_t<decltype(c)>,
                                     CoprimalityGraph>) {
          return c.vertex_count();
        } else {
          return c.k;
        }
      },
      condition);
}

CountResult count_delta_exact(const CoprimalityGraph& g, std::uint64_t x,
                              const CountOptions& options) {
  const int k = g.vertex_count();
  const std::uint64_t box = guarded_box_size(x, k);
  CoprimeTest coprime(x);
  GraphCounter counter{.coprime = coprime, .earlier = {}, .x = x};
  counter.earlier.resize(static_cast<std::size_t>(k));
  for (const Edge& e : g.edges()) {
    counter.earlier[static_cast<std::size_t>(e.v - 1)].push_back(e.u - 1);
  }
  const std::uint64_t count =
      parallel_sum(x, options.threads, [&](std::uint64_t i) {
        std::vector<std::uint64_t> values(static_cast<std::size_t>(k), 0);
        values[0] = i + 1;
        return counter.count(values, 1);
      });
  return exact_result(x, count, box);
}

CountResult count_beta_exact(int k, int r, PairCountMode mode, std::uint64_t x,
                             const CountOptions& options) {
  check_pair_condition(k, r, mode);
  const std::uint64_t box = guarded_box_size(x, k);
  CoprimeTest coprime(x);
  PairCounter counter{.coprime = coprime, .k = k, .r = r, .mode = mode,
                      .x = x, .power = {}};
  for (int i = 0; i <= k; ++i) {
    counter.power.push_back(*checked_power(x, i, kMaxExactTuples));
  }
  const std::uint64_t count =
      parallel_sum(x, options.threads, [&](std::uint64_t i) {
        std::vector<std::uint64_t> values(static_cast<std::size_t>(k), 0);
        values[0] = i + 1;
        return counter.count(values, 1, 0);
      });
  return exact_result(x, count, box);
}

CountResult count_beta_via_inclusion_exclusion(int k, int r,
                                               PairCountMode mode,
                                               std::uint64_t x,
                                               const CountOptions& options) {
  check_pair_condition(k, r, mode);
  if (k > kMaxInclusionExclusionK) {
    throw Error(ErrorCode::kGuardExceeded,
                "inclusion-exclusion recount limited to k <= " +
                    std::to_string(kMaxInclusionExclusionK));
  }
  const std::uint64_t box = guarded_box_size(x, k);
  const int pairs = pair_count(k);
  if (box > kMaxInclusionExclusionWork >> pairs) {
    throw Error(ErrorCode::kGuardExceeded,
                "x^k * 2^(k(k-1)/2) exceeds " +
                    std::to_string(kMaxInclusionExclusionWork));
  }
  __int128 total = 0;
  for (int j = r; j <= pairs; ++j) {
    const auto weight = static_cast<__int128>(
        mode == PairCountMode::kExactly ? binomial(j, r)
                                        : binomial(j - 1, r - 1));
    const __int128 sign = ((j - r) % 2 == 0) ? 1 : -1;
    __int128 layer = 0;
    EdgeSubsetEnumerator subsets(k, j);
    while (auto g = subsets.next()) {
      layer += count_delta_exact(*g, x, options).count;
    }
    total += sign * weight * layer;
  }
  if (total < 0) {
    throw Error(ErrorCode::kMalformedInput,
                "inclusion-exclusion produced a negative count");
  }
  return exact_result(x, static_cast<std::uint64_t>(total), box);
}

std::uint64_t counter_rng_word(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t counter_rng_uniform(std::uint64_t seed, std::uint64_t counter,
                                  std::uint64_t box) {
  const unsigned __int128 wide =
      static_cast<unsigned __int128>(counter_rng_word(seed, counter)) * box;
  return 1 + static_cast<std::uint64_t>(wide >> 64);
}

CountResult monte_carlo(const TupleCondition& condition, std::uint64_t box,
                        std::uint64_t samples, std::uint64_t seed,
                        const CountOptions& options) {
  if (box < kMinMonteCarloBox) {
    throw Error(ErrorCode::kGuardExceeded,
                "Monte Carlo box X must be >= " +
                    std::to_string(kMinMonteCarloBox));
  }
  if (samples < kMinMonteCarloSamples) {
    throw Error(ErrorCode::kGuardExceeded,
                "Monte Carlo needs >= " +
                    std::to_string(kMinMonteCarloSamples) + " samples");
  }
  if (const auto* c = std::get_if<PairCountCondition>(&condition)) {
    check_pair_condition(c->k, c->r, c->mode);
  }
  const int k = arity(condition);
  const std::uint64_t chunks = (samples + kSampleChunk - 1) / kSampleChunk;
  const std::uint64_t hits =
      parallel_sum(chunks, options.threads, [&](std::uint64_t chunk) {
        std::vector<std::uint64_t> values(static_cast<std::size_t>(k));
        const std::uint64_t first = chunk * kSampleChunk;
        const std::uint64_t last = std::min(samples, first + kSampleChunk);
        std::uint64_t local = 0;
        for (std::uint64_t i = first; i < last; ++i) {
          for (int c = 0; c < k; ++c) {
            values[static_cast<std::size_t>(c)] = counter_rng_uniform(
                seed, i * static_cast<std::uint64_t>(k) +
                          static_cast<std::uint64_t>(c),
                box);
          }
          const bool hit = std::visit(
              [&](const auto& cond) {
                if constexpr (std::is_same_v<std::decay_t<decltype(cond)>,
                                             CoprimalityGraph>) {
                  return graph_condition_holds(cond, values);
                } else {
                  return pair_condition_holds(cond, values);
                }
              },
              condition);
          if (hit) ++local;
        }
        return local;
      });
  CountResult out;
  out.mode = CountMode::kMonteCarlo;
  out.x = box;
  out.samples = samples;
  out.count = hits;
  out.seed = seed;
  const long double n = static_cast<long double>(samples);
  out.estimate = static_cast<long double>(hits) / n;
  out.ci_halfwidth =
      4.0L * std::sqrt(out.estimate * (1.0L - out.estimate) / n);
  return out;
}

std::vector<DiagnosticRow> convergence_diagnostic(
    const CoprimalityGraph& g, const std::vector<std::uint64_t>& xs,
    long double density, const CountOptions& options) {
  const int d = max_degree(g);
  std::vector<DiagnosticRow> rows;
  for (std::uint64_t x : xs) {
    if (x < 2) {
      throw Error(ErrorCode::kOutOfRange, "diagnostic needs x >= 2");
    }
    const CountResult count = count_delta_exact(g, x, options);
    const long double lx = static_cast<long double>(x);
    DiagnosticRow row;
    row.x = x;
    row.count = count.count;
    row.estimate = count.estimate;
    row.normalized_remainder = std::fabs(count.estimate - density) * lx /
                               std::pow(std::log(lx), static_cast<long double>(d));
    rows.push_back(row);
  }
  return rows;
}

std::vector<DiagnosticRow> convergence_diagnostic(
    const CoprimalityGraph& g, const std::vector<std::uint64_t>& xs,
    DensityEngine& engine, const CountOptions& options) {
  return convergence_diagnostic(g, xs, engine.density_A(g).value, options);
}

}  // namespace coprimality
