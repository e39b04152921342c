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

// Acceptance run: one PASS/FAIL line per criterion, each with the measured
// quantity, its tolerance and the wall time against the time budget.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "coprimality/density.hpp"
#include "coprimality/empirical.hpp"
#include "coprimality/euler_product.hpp"
#include "coprimality/graph.hpp"
#include "coprimality/local_factor.hpp"
#include "fixtures.hpp"

namespace coprimality {
namespace {

constexpr std::uint64_t kPrimeLimit = 10'000'000;

struct Outcome {
  bool ok = true;
  std::string detail;
};

DensityEngine& engine() {
  static DensityEngine e(kPrimeLimit);
  return e;
}

std::string sci(long double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3Le", v);
  return buf;
}

std::int64_t binomial(int n, int j) {
  std::int64_t c = 1;
  for (int i = 1; i <= j; ++i) c = c * (n - j + i) / i;
  return c;
}

Outcome local_factor_fixtures() {
  struct Fixture {
    CoprimalityGraph g;
    VertexSubset cover;
    std::vector<std::int64_t> expected;
  };
  const Fixture fixtures[] = {
      {testing::c4_graph(), VertexSubset::of({1, 3}), {1, 0, -4, 4, -1}},
      {testing::example2_graph(), VertexSubset::of({1, 2, 4}),
       {1, 0, -6, 8, -3, 0, 0, 0}},
  };
  Outcome o;
  int matches = 0;
  for (const Fixture& f : fixtures) {
    const UniLocalFactor expected(f.expected);
    const UniLocalFactor by_sets = factor_by_independent_sets(f.g);
    const UniLocalFactor by_edges = collapse(factor_by_edge_subsets(f.g));
    const UniLocalFactor by_cover =
        collapse(factor_by_vertex_cover(f.g, f.cover));
    for (const UniLocalFactor* q : {&by_sets, &by_edges, &by_cover}) {
      if (*q == expected) {
        ++matches;
      } else {
        o.ok = false;
      }
    }
  }
  o.detail = std::to_string(matches) + "/6 exact matches";
  return o;
}

Outcome pairwise_coprime_coefficients() {
  Outcome o;
  for (int k = 2; k <= 6; ++k) {
    const UniLocalFactor closed = pairwise_coprime_factor(k);
    if (closed != factor_by_independent_sets(complete_graph(k))) o.ok = false;
    std::vector<std::int64_t> formula(k + 1);
    for (int j = 0; j <= k; ++j) {
      const std::int64_t sign = (j % 2 == 1) ? 1 : -1;  // (-1)^(j-1)
      formula[j] = sign * (j - 1) * binomial(k, j);
    }
    if (closed != UniLocalFactor(formula)) o.ok = false;
  }
  o.detail = "k = 2..6, exact";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  int checks = 0;
  int mismatches = 0;
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const CoprimalityGraph g = graph_from_edge_mask(4, mask);
    const MultiLocalFactor c = factor_by_edge_subsets(g);
    for (std::uint32_t nu = 0; nu < 16; ++nu) {
      const VertexSubset support = VertexSubset::from_bits(nu);
      for (std::uint64_t p : {2u, 3u}) {
        std::uint64_t n[4];
        for (int i = 0; i < 4; ++i) n[i] = ((nu >> i) & 1u) ? p : 1;
        ++checks;
        if (mobius_delta_oracle(g, n) != c.coefficient(support)) ++mismatches;
      }
    }
  }
  o.ok = mismatches == 0;
  o.detail = std::to_string(checks - mismatches) + "/" +
             std::to_string(checks) + " oracle values equal c(support)";
  return o;
}

Outcome inverse_zeta_two() {
  const long double pi = std::numbers::pi_v<long double>;
  const EulerProductValue v = evaluate(UniLocalFactor({1, 0, -1}), kPrimeLimit);
  const long double gap = std::fabs(v.value - 6.0L / (pi * pi));
  Outcome o;
  o.ok = gap <= v.error_bound() && v.error_bound() <= 1e-6L;
  o.detail = "|value - 6/pi^2| = " + sci(gap) + " <= bound " +
             sci(v.error_bound()) + " <= 1e-6";
  return o;
}

Outcome closed_form_agreement() {
  Outcome o;
  std::ostringstream d;
  const std::pair<DensityReport, DensityReport> pairs[] = {
      {engine().density_exact_r(3, 0), engine().density_C3_closed()},
      {engine().density_exact_r(4, 0), engine().density_C4_closed()},
  };
  for (const auto& [sum, closed] : pairs) {
    const long double gap = std::fabs(sum.value - closed.value);
    const long double combined = sum.error_bound + closed.error_bound;
    if (gap > combined || sum.error_bound > 1e-6L ||
        closed.error_bound > 1e-6L) {
      o.ok = false;
    }
    d << "k=" << sum.k << ": gap " << sci(gap) << ", bounds "
      << sci(sum.error_bound) << " / " << sci(closed.error_bound) << "; ";
  }
  d << "each bound <= 1e-6";
  o.detail = d.str();
  return o;
}

Outcome partition_of_unity() {
  Outcome o;
  std::ostringstream d;
  for (int k = 3; k <= 5; ++k) {
    long double sum = 0.0L;
    for (int r = 0; r <= pair_count(k); ++r) {
      sum += engine().density_exact_r(k, r).value;
    }
    const long double gap = std::fabs(sum - 1.0L);
    if (!(gap <= 1e-8L)) o.ok = false;
    d << "k=" << k << " |sum-1| " << sci(gap) << "; ";
  }
  d << "tolerance 1e-8";
  o.detail = d.str();
  return o;
}

Outcome tail_sum_and_complement() {
  Outcome o;
  long double worst = 0.0L;
  int checks = 0;
  for (int k = 3; k <= 4; ++k) {
    const int pairs = pair_count(k);
    std::vector<long double> exact(pairs + 1);
    for (int r = 0; r <= pairs; ++r) {
      exact[r] = engine().density_exact_r(k, r).value;
    }
    for (int r = 1; r <= pairs; ++r) {
      long double tail = 0.0L;
      for (int t = r; t <= pairs; ++t) tail += exact[t];
      const long double at_least = engine().density_at_least_r(k, r).value;
      worst = std::max(worst, std::fabs(at_least - tail));
      ++checks;
      if (r == 1) {
        worst = std::max(worst, std::fabs(at_least - (1.0L - exact[0])));
        ++checks;
      }
    }
  }
  o.ok = worst <= 1e-8L;
  o.detail = std::to_string(checks) + " identities, worst gap " + sci(worst) +
             ", tolerance 1e-8";
  return o;
}

Outcome inclusion_exclusion_counting() {
  struct Case {
    int k;
    std::uint64_t x;
    int r_max;
  };
  Outcome o;
  int checks = 0;
  int mismatches = 0;
  for (const Case& c : {Case{3, 30, 3}, Case{4, 15, 2}}) {
    for (int r = 0; r <= c.r_max; ++r) {
      for (PairCountMode mode : {PairCountMode::kExactly, PairCountMode::kAtLeast}) {
        if (mode == PairCountMode::kAtLeast && r == 0) continue;
        ++checks;
        if (count_beta_via_inclusion_exclusion(c.k, r, mode, c.x).count !=
            count_beta_exact(c.k, r, mode, c.x).count) {
          ++mismatches;
        }
      }
    }
  }
  o.ok = mismatches == 0;
  o.detail = std::to_string(checks - mismatches) + "/" +
             std::to_string(checks) + " counts identical";
  return o;
}

Outcome monte_carlo_bracketing() {
  struct Case {
    const char* name;
    TupleCondition condition;
    DensityReport density;
  };
  const Case cases[] = {
      {"1/zeta(2)", complete_graph(2), engine().zeta_inverse(2)},
      {"A(C4)", testing::c4_graph(), engine().density_A(testing::c4_graph())},
      {"C_3,0", PairCountCondition{3, 0, PairCountMode::kExactly},
       engine().density_exact_r(3, 0)},
      {"C_4,0", PairCountCondition{4, 0, PairCountMode::kExactly},
       engine().density_exact_r(4, 0)},
  };
  Outcome o;
  std::ostringstream d;
  for (const Case& c : cases) {
    const CountResult mc = monte_carlo(c.condition, 1'000'000, 1'000'000, 1);
    const long double gap = std::fabs(mc.estimate - c.density.value);
    const bool inside = gap <= mc.ci_halfwidth + c.density.error_bound;
    if (!inside) o.ok = false;
    d << c.name << " " << sci(gap) << (inside ? " <= " : " > ")
      << sci(mc.ci_halfwidth) << "; ";
  }
  d << "4-SE intervals";
  o.detail = d.str();
  return o;
}

Outcome convergence_trend() {
  const long double target = evaluate(UniLocalFactor({1, 0, -1}), kPrimeLimit).value;
  Outcome o;
  std::ostringstream d;
  long double previous = INFINITY;
  for (std::uint64_t x : {100u, 200u, 400u}) {
    const CountResult c = count_delta_exact(complete_graph(2), x);
    const long double gap = std::fabs(c.estimate - target);
    if (!(gap < previous)) o.ok = false;
    d << "x=" << x << " count " << c.count << " gap " << sci(gap) << "; ";
    previous = gap;
  }
  d << "required strictly decreasing";
  o.detail = d.str();
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace coprimality

int main() {
  using namespace coprimality;
  const Criterion criteria[] = {
      {1, "local-factor fixtures", 1, local_factor_fixtures},
      {2, "pairwise-coprime coefficients", 1, pairwise_coprime_coefficients},
      {3, "oracle equivalence, k=4", 10, oracle_equivalence},
      {4, "1/zeta(2) at P=1e7", 5, inverse_zeta_two},
      {5, "closed-form agreement, k=3,4", 30, closed_form_agreement},
      {6, "partition of unity, k=3..5", 120, partition_of_unity},
      {7, "tail-sum and complement, k=3,4", 60, tail_sum_and_complement},
      {8, "inclusion-exclusion counts", 60, inclusion_exclusion_counting},
      {9, "Monte Carlo bracketing", 60, monte_carlo_bracketing},
      {10, "convergence trend, single edge", 10, convergence_trend},
  };
  int passed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_time = seconds <= c.budget_seconds;
    const bool ok = outcome.ok && in_time;
    passed += ok;
    std::printf("[%s] %2d %-34s %7.3f s / %g s%s | %s\n", ok ? "PASS" : "FAIL",
                c.id, c.name, seconds, c.budget_seconds,
                in_time ? "" : " (over budget)", outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", passed, std::size(criteria));
  return passed == static_cast<int>(std::size(criteria)) ? 0 : 1;
}
