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

#include "coprimality/density.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include "coprimality/compensated_sum.hpp"
#include "coprimality/error.hpp"
#include "coprimality/primes.hpp"

namespace coprimality {

namespace {

std::int64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::int64_t result = 1;
  for (int i = 1; i <= r; ++i) result = result * (n - r + i) / i;
  return result;
}

std::vector<std::int64_t> trimmed(const UniLocalFactor& q) {
  std::vector<std::int64_t> c = q.coeffs();
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return c;
}

void check_enumeration_k(int k) {
  if (k < 2 || k > kMaxEnumerationVertices) {
    throw Error(ErrorCode::kOutOfRange,
                "k = " + std::to_string(k) + " outside 2.." +
                    std::to_string(kMaxEnumerationVertices));
  }
}

void check_r(int k, int r, PairCountMode mode) {
  const int pairs = pair_count(k);
  const int low = mode == PairCountMode::kAtLeast ? 1 : 0;
  if (r < low || r > pairs) {
    throw Error(ErrorCode::kOutOfRange,
                "r = " + std::to_string(r) + " outside " +
                    std::to_string(low) + ".." + std::to_string(pairs));
  }
}

std::int64_t pair_count_sign_weight(int j, int r, PairCountMode mode) {
  if (j < r) return 0;
  const std::int64_t sign = ((j - r) % 2 == 0) ? 1 : -1;
  return mode == PairCountMode::kExactly ? sign * binomial(j, r)
                                         : sign * binomial(j - 1, r - 1);
}

void add_weight(PolynomialWeights& weights, std::vector<std::int64_t> key,
                __int128 delta) {
  auto [it, inserted] = weights.try_emplace(std::move(key), 0);
  __int128 sum = static_cast<__int128>(it->second) + delta;
  if (sum > std::numeric_limits<std::int64_t>::max() ||
      sum < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::kGuardExceeded, "inclusion-exclusion weight overflow");
  }
  it->second = static_cast<std::int64_t>(sum);
  if (it->second == 0) weights.erase(it);
}

// Independent-set form, cross-checked against the vertex-cover expansion.
// The edge-subset route is exponential in |E| and only used for small |E|.
UniLocalFactor class_factor(const CoprimalityGraph& g) {
  UniLocalFactor by_sets = factor_by_independent_sets(g);
  const VertexSubset cover = min_vertex_cover(g);
  bool agree = collapse(factor_by_vertex_cover(g, cover)) == by_sets;
  if (agree && g.edge_count() <= 10) {
    agree = collapse(factor_by_edge_subsets(g)) == by_sets;
  }
  if (!agree) {
    throw Error(ErrorCode::kMalformedInput,
                "local-factor constructions disagree for graph:\n" +
                    format_graph(g));
  }
  return by_sets;
}

std::uint32_t reverse_low_bits(std::uint32_t mask, int width) {
  std::uint32_t out = 0;
  for (int e = 0; e < width; ++e) {
    if ((mask >> e) & 1u) out |= std::uint32_t{1} << (width - 1 - e);
  }
  return out;
}

}  // namespace

std::string_view to_string(DensityLabel label) {
  switch (label) {
    case DensityLabel::kAG: return "A_G";
    case DensityLabel::kAk: return "A_k";
    case DensityLabel::kExact: return "C_exact";
    case DensityLabel::kAtLeast: return "C_atleast";
    case DensityLabel::kPairwiseNoncoprime: return "C_pairwise_noncoprime";
    case DensityLabel::kZetaInverse: return "zeta_inv";
    case DensityLabel::kC3Closed: return "C3_closed";
    case DensityLabel::kC4Closed: return "C4_closed";
  }
  return "unknown";
}

IsoClassTable build_iso_table(int k) {
  check_enumeration_k(k);
  const int pairs = pair_count(k);

  // Image of every pair index under every vertex permutation.
  std::vector<std::vector<int>> pair_maps;
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::vector<int> image(static_cast<std::size_t>(pairs));
    for (int e = 0; e < pairs; ++e) {
      Edge edge = pair_at(k, e);
      image[static_cast<std::size_t>(e)] =
          pair_index(k, perm[static_cast<std::size_t>(edge.u - 1)],
                     perm[static_cast<std::size_t>(edge.v - 1)]);
    }
    pair_maps.push_back(std::move(image));
  } while (std::next_permutation(perm.begin(), perm.end()));

  IsoClassTable table{.k = k, .classes = {}};
  const std::uint32_t subsets = std::uint32_t{1} << pairs;
  std::vector<bool> seen(subsets, false);
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    if (seen[mask]) continue;
    std::uint64_t orbit = 0;
    std::uint32_t best_encoded = ~std::uint32_t{0};
    std::uint32_t best_mask = mask;
    for (const auto& image : pair_maps) {
      std::uint32_t moved = 0;
      for (std::uint32_t m = mask; m != 0; m &= m - 1) {
        moved |= std::uint32_t{1}
                 << image[static_cast<std::size_t>(std::countr_zero(m))];
      }
      if (!seen[moved]) {
        seen[moved] = true;
        ++orbit;
      }
      // Same ordering as canonical_key: pair 0 is the most significant.
      const std::uint32_t encoded = reverse_low_bits(moved, pairs);
      if (encoded < best_encoded) {
        best_encoded = encoded;
        best_mask = moved;
      }
    }
    CoprimalityGraph rep = graph_from_edge_mask(k, best_mask);
    CanonicalKey key;
    key.push_back(static_cast<std::uint8_t>(k));
    for (int e = 0; e < pairs; ++e) {
      key.push_back(static_cast<std::uint8_t>((best_mask >> e) & 1u));
    }
    const int edges = std::popcount(mask);
    UniLocalFactor factor = class_factor(rep);
    table.classes.push_back(IsoClass{.key = std::move(key),
                                     .representative = std::move(rep),
                                     .multiplicity = orbit,
                                     .edge_count = edges,
                                     .factor = std::move(factor)});
  }
  std::sort(table.classes.begin(), table.classes.end(),
            [](const IsoClass& a, const IsoClass& b) {
              if (a.edge_count != b.edge_count) {
                return a.edge_count < b.edge_count;
              }
              return a.key < b.key;
            });
  return table;
}

PolynomialWeights pair_count_weights(const IsoClassTable& table, int r,
                                     PairCountMode mode) {
  check_r(table.k, r, mode);
  PolynomialWeights weights;
  for (const IsoClass& c : table.classes) {
    const std::int64_t w = pair_count_sign_weight(c.edge_count, r, mode);
    if (w == 0) continue;
    add_weight(weights, trimmed(c.factor),
               static_cast<__int128>(w) *
                   static_cast<__int128>(c.multiplicity));
  }
  return weights;
}

PolynomialWeights pair_count_weights_labeled(int k, int r,
                                             PairCountMode mode) {
  if (k < 2 || k > 5) {
    throw Error(ErrorCode::kOutOfRange,
                "labeled enumeration limited to 2 <= k <= 5");
  }
  check_r(k, r, mode);
  PolynomialWeights weights;
  for (int j = 0; j <= pair_count(k); ++j) {
    const std::int64_t w = pair_count_sign_weight(j, r, mode);
    if (w == 0) continue;
    EdgeSubsetEnumerator subsets(k, j);
    while (auto g = subsets.next()) {
      add_weight(weights, trimmed(factor_by_independent_sets(*g)), w);
    }
  }
  return weights;
}

DensityEngine::DensityEngine(std::uint64_t prime_limit, EulerOptions options)
    : prime_limit_(prime_limit), options_(options) {
  if (prime_limit < kMinPrimeLimit || prime_limit > kMaxSieveLimit) {
    throw Error(ErrorCode::kOutOfRange,
                "prime limit " + std::to_string(prime_limit) + " outside " +
                    std::to_string(kMinPrimeLimit) + ".." +
                    std::to_string(kMaxSieveLimit));
  }
}

const IsoClassTable& DensityEngine::iso_table(int k) {
  check_enumeration_k(k);
  {
    std::lock_guard lock(mutex_);
    auto it = tables_.find(k);
    if (it != tables_.end()) return *it->second;
  }
  auto table = std::make_shared<const IsoClassTable>(build_iso_table(k));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = tables_.try_emplace(k, std::move(table));
  return *it->second;
}

EulerProductValue DensityEngine::euler(const UniLocalFactor& q) {
  std::vector<std::int64_t> key = trimmed(q);
  {
    std::lock_guard lock(mutex_);
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
  }
  EulerProductValue value = evaluate(UniLocalFactor(key), prime_limit_, options_);
  std::lock_guard lock(mutex_);
  products_.try_emplace(std::move(key), value);
  return value;
}

DensityReport DensityEngine::combine(DensityLabel label, int k,
                                     std::optional<int> r,
                                     const PolynomialWeights& weights,
                                     std::size_t num_classes,
                                     std::string formula) {
  DensityReport report;
  report.label = label;
  report.k = k;
  report.r = r;
  report.prime_limit = prime_limit_;
  report.num_classes = num_classes;
  report.formula = std::move(formula);
  CompensatedSum<long double> value;
  CompensatedSum<long double> error;
  for (const auto& [coeffs, weight] : weights) {
    WeightedProduct term{.factor = UniLocalFactor(coeffs),
                         .weight = weight,
                         .product = {}};
    term.product = euler(term.factor);
    const auto w = static_cast<long double>(weight);
    value.add(w * term.product.value);
    error.add(std::fabs(w) * term.product.error_bound());
    report.terms.push_back(std::move(term));
  }
  report.value = value.get();
  report.error_bound = error.get();
  return report;
}

DensityReport DensityEngine::density_A(const CoprimalityGraph& g) {
  LocalFactorCheck check = check_local_factor(g);
  if (!check.agree) {
    throw Error(ErrorCode::kMalformedInput,
                "local-factor constructions disagree for graph:\n" +
                    format_graph(g));
  }
  PolynomialWeights weights{{trimmed(check.by_independent_sets), 1}};
  DensityReport report =
      combine(DensityLabel::kAG, g.vertex_count(), std::nullopt, weights, 1,
              check.edge_subsets_computed
                  ? "independent sets = vertex cover = edge subsets"
                  : "independent sets = vertex cover");
  report.polynomial = check.by_independent_sets;
  report.cover = check.cover;
  return report;
}

DensityReport DensityEngine::pair_count_density(DensityLabel label, int k,
                                                int r, PairCountMode mode) {
  check_enumeration_k(k);
  check_r(k, r, mode);
  const IsoClassTable& table = iso_table(k);
  return combine(label, k, r, pair_count_weights(table, r, mode),
                 table.classes.size(),
                 mode == PairCountMode::kExactly
                     ? "sum_j (-1)^(j-r) C(j,r) sum_{|E|=j} A_G"
                     : "sum_j (-1)^(j-r) C(j-1,r-1) sum_{|E|=j} A_G");
}

DensityReport DensityEngine::density_exact_r(int k, int r) {
  return pair_count_density(DensityLabel::kExact, k, r, PairCountMode::kExactly);
}

DensityReport DensityEngine::density_at_least_r(int k, int r) {
  return pair_count_density(DensityLabel::kAtLeast, k, r,
                            PairCountMode::kAtLeast);
}

DensityReport DensityEngine::density_pairwise_noncoprime(int k) {
  DensityReport report = density_exact_r(k, 0);
  report.label = DensityLabel::kPairwiseNoncoprime;
  return report;
}

DensityReport DensityEngine::density_pairwise_coprime(int k) {
  UniLocalFactor q = pairwise_coprime_factor(k);
  if (k <= kMaxVertices &&
      !q.same_polynomial(factor_by_independent_sets(complete_graph(k)))) {
    throw Error(ErrorCode::kMalformedInput,
                "closed-form pairwise-coprime factor disagrees with K_k");
  }
  DensityReport report =
      combine(DensityLabel::kAk, k, std::nullopt, {{trimmed(q), 1}}, 1,
              "prod_p (1-1/p)^(k-1) (1+(k-1)/p)");
  report.polynomial = q;
  return report;
}

DensityReport DensityEngine::zeta_inverse(int k) {
  if (k < 2) {
    throw Error(ErrorCode::kOutOfRange,
                "1/zeta(k) needs k >= 2, got " + std::to_string(k));
  }
  std::vector<std::int64_t> c(static_cast<std::size_t>(k) + 1, 0);
  c.front() = 1;
  c.back() = -1;
  DensityReport report = combine(DensityLabel::kZetaInverse, k, std::nullopt,
                                 {{c, 1}}, 1, "prod_p (1 - p^-k)");
  report.polynomial = UniLocalFactor(c);
  return report;
}

DensityReport DensityEngine::density_C3_closed() {
  const PolynomialWeights weights{
      {{1}, 1},
      {{1, 0, -1}, -3},
      {{1, 0, -2, 1}, 3},
      {{1, 0, -3, 2}, -1},
  };
  return combine(DensityLabel::kC3Closed, 3, 0, weights, weights.size(),
                 "closed form with 4 products (k = 3)");
}

DensityReport DensityEngine::density_C4_closed() {
  const PolynomialWeights weights{
      {{1}, 1},
      {{1, 0, -1}, -6},
      {{1, 0, -2, 0, 1}, 3},
      {{1, 0, -2, 1}, 12},
      {{1, 0, -3, 3, -1}, -4},
      {{1, 0, -3, 2}, -16},
      {{1, 0, -4, 4, -1}, 15},
      {{1, 0, -5, 6, -2}, -6},
      {{1, 0, -6, 8, -3}, 1},
  };
  return combine(DensityLabel::kC4Closed, 4, 0, weights, weights.size(),
                 "closed form with 8 products (k = 4)");
}

DensityReport density_A(const CoprimalityGraph& g, std::uint64_t prime_limit) {
  return DensityEngine(prime_limit).density_A(g);
}

DensityReport density_exact_r(int k, int r, std::uint64_t prime_limit) {
  return DensityEngine(prime_limit).density_exact_r(k, r);
}

DensityReport density_at_least_r(int k, int r, std::uint64_t prime_limit) {
  return DensityEngine(prime_limit).density_at_least_r(k, r);
}

DensityReport density_pairwise_noncoprime(int k, std::uint64_t prime_limit) {
  return DensityEngine(prime_limit).density_pairwise_noncoprime(k);
}

DensityReport density_pairwise_coprime(int k, std::uint64_t prime_limit) {
  return DensityEngine(prime_limit).density_pairwise_coprime(k);
}

DensityReport density_C3_closed(std::uint64_t prime_limit) {
  return DensityEngine(prime_limit).density_C3_closed();
}

DensityReport density_C4_closed(std::uint64_t prime_limit) {
  return DensityEngine(prime_limit).density_C4_closed();
}

}  // namespace coprimality
