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

#ifndef COPRIMALITY_DENSITY_HPP_
#define COPRIMALITY_DENSITY_HPP_

// Asymptotic densities assembled from Euler products:
//   A_G            tuples satisfying the constraints of one graph G,
//   C_{k,r}        tuples with exactly r coprime pairs,
//   C'_{k,r}       tuples with at least r coprime pairs,
//   C_k = C_{k,0}  pairwise non-coprime tuples,
//   A_k            pairwise coprime tuples.
// C_{k,r} and C'_{k,r} are signed binomial combinations of A_G over all
// labeled edge sets of K_k; isomorphic graphs share A_G, so the sums run
// over isomorphism classes weighted by class size, with the integer
// weights of equal polynomials merged before any floating point is used.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coprimality/euler_product.hpp"
#include "coprimality/graph.hpp"
#include "coprimality/local_factor.hpp"

namespace coprimality {

enum class DensityLabel {
  kAG,
  kAk,
  kExact,
  kAtLeast,
  kPairwiseNoncoprime,
  kZetaInverse,
  kC3Closed,
  kC4Closed,
};
std::string_view to_string(DensityLabel label);

enum class PairCountMode { kExactly, kAtLeast };

// One Euler product that entered a density, with its integer weight.
struct WeightedProduct {
  UniLocalFactor factor;
  std::int64_t weight = 0;
  EulerProductValue product;
};

struct DensityReport {
  DensityLabel label = DensityLabel::kAG;
  int k = 0;
  std::optional<int> r;
  long double value = 0.0L;
  long double error_bound = 0.0L;
  std::uint64_t prime_limit = 0;
  std::size_t num_classes = 0;
  std::string formula;
  std::vector<WeightedProduct> terms;
  // Set for single-graph densities.
  std::optional<UniLocalFactor> polynomial;
  std::optional<VertexSubset> cover;
};

struct IsoClass {
  CanonicalKey key;
  CoprimalityGraph representative;
  std::uint64_t multiplicity = 0;
  int edge_count = 0;
  UniLocalFactor factor;
};

struct IsoClassTable {
  int k = 0;
  // Sorted by (edge_count, key).
  std::vector<IsoClass> classes;
};

// Every labeled graph on 1..k grouped by isomorphism.  2 <= k <= 7.
IsoClassTable build_iso_table(int k);

// Exact integer weight per distinct local-factor polynomial (trimmed
// coefficient vector) in the inclusion-exclusion sum for C_{k,r} or
// C'_{k,r}.  Weights of zero are dropped.
using PolynomialWeights = std::map<std::vector<std::int64_t>, std::int64_t>;
PolynomialWeights pair_count_weights(const IsoClassTable& table, int r,
                                     PairCountMode mode);
// Same weights by direct summation over all labeled edge sets (k <= 5).
PolynomialWeights pair_count_weights_labeled(int k, int r, PairCountMode mode);

// Caches iso tables and Euler products for one prime limit.  Thread-safe.
class DensityEngine {
 public:
  explicit DensityEngine(std::uint64_t prime_limit = kDefaultPrimeLimit,
                         EulerOptions options = {});

  std::uint64_t prime_limit() const { return prime_limit_; }

  DensityReport density_A(const CoprimalityGraph& g);
  DensityReport density_exact_r(int k, int r);
  DensityReport density_at_least_r(int k, int r);
  DensityReport density_pairwise_noncoprime(int k);
  DensityReport density_pairwise_coprime(int k);
  DensityReport zeta_inverse(int k);
  DensityReport density_C3_closed();
  DensityReport density_C4_closed();

  const IsoClassTable& iso_table(int k);
  EulerProductValue euler(const UniLocalFactor& q);

 private:
  DensityReport combine(DensityLabel label, int k, std::optional<int> r,
                        const PolynomialWeights& weights,
                        std::size_t num_classes, std::string formula);
  DensityReport pair_count_density(DensityLabel label, int k, int r,
                                   PairCountMode mode);

  std::uint64_t prime_limit_;
  EulerOptions options_;
  std::mutex mutex_;
  std::map<int, std::shared_ptr<const IsoClassTable>> tables_;
  std::map<std::vector<std::int64_t>, EulerProductValue> products_;
};

// One-shot wrappers around a temporary DensityEngine.
DensityReport density_A(const CoprimalityGraph& g, std::uint64_t prime_limit);
DensityReport density_exact_r(int k, int r, std::uint64_t prime_limit);
DensityReport density_at_least_r(int k, int r, std::uint64_t prime_limit);
DensityReport density_pairwise_noncoprime(int k, std::uint64_t prime_limit);
DensityReport density_pairwise_coprime(int k, std::uint64_t prime_limit);
DensityReport density_C3_closed(std::uint64_t prime_limit);
DensityReport density_C4_closed(std::uint64_t prime_limit);

}  // namespace coprimality

#endif  // COPRIMALITY_DENSITY_HPP_
