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

#ifndef COPRIMALITY_LOCAL_FACTOR_HPP_
#define COPRIMALITY_LOCAL_FACTOR_HPP_

// Per-prime local factors of the Dirichlet series of delta_G, the
// characteristic function of tuples satisfying a coprimality graph G.
//
// With x_i = p^{-s_i}, the local factor at p is a polynomial
//   Q_G(x_1..x_k) = sum_S c(S) prod_{i in S} x_i
// with integer coefficients that do not depend on p.  Three independent
// constructions are provided (independent sets, signed edge subsets,
// vertex-cover expansion) plus a direct Moebius-convolution oracle for
// single coefficients.  Setting every x_i = 1/p gives the univariate
// factor whose Euler product is the density A_G.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "coprimality/graph.hpp"

namespace coprimality {

inline constexpr std::size_t kMaxEdgeSubsetEdges = 24;
inline constexpr std::uint64_t kMaxOracleArgument = 200;

// Q(x) = sum_m coeffs[m] x^m, with x standing for 1/p.
class UniLocalFactor {
 public:
  UniLocalFactor() : coeffs_{1} {}
  explicit UniLocalFactor(std::vector<std::int64_t> coeffs);

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t operator[](std::size_t m) const {
    return m < coeffs_.size() ? coeffs_[m] : 0;
  }
  std::size_t size() const { return coeffs_.size(); }
  // Highest index with a nonzero coefficient.
  int degree() const;
  bool is_constant_one() const;

  long double evaluate(long double x) const;
  // Q(x) - 1, computed without forming 1 + (small) first.
  long double evaluate_minus_one(long double x) const;

  // Equal as polynomials (trailing zeros ignored).
  bool same_polynomial(const UniLocalFactor& other) const;

  friend bool operator==(const UniLocalFactor&, const UniLocalFactor&) =
      default;

 private:
  std::vector<std::int64_t> coeffs_;
};

// Multivariate factor, keyed by the vertex set S of the monomial
// prod_{i in S} x_i.  Only nonzero coefficients are stored.
class MultiLocalFactor {
 public:
  explicit MultiLocalFactor(int k) : k_(k) {}

  int k() const { return k_; }
  std::int64_t coefficient(VertexSubset s) const;
  void add(VertexSubset s, std::int64_t delta);
  const std::map<VertexSubset, std::int64_t>& terms() const { return terms_; }

  friend bool operator==(const MultiLocalFactor&,
                         const MultiLocalFactor&) = default;

 private:
  int k_;
  std::map<VertexSubset, std::int64_t> terms_;
};

// sum_m i_m x^m (1-x)^{n-m} with i_m the independent m-subsets of
// `restrict_to` and n = |restrict_to|.  `restrict_to` must be either the
// whole vertex set or the set of non-isolated vertices.  The result has
// k+1 coefficients.
UniLocalFactor factor_by_independent_sets(const CoprimalityGraph& g,
                                          VertexSubset restrict_to);
UniLocalFactor factor_by_independent_sets(const CoprimalityGraph& g);

// c(S) = sum of (-1)^{|F|} over edge subsets F whose vertex support is S.
MultiLocalFactor factor_by_edge_subsets(const CoprimalityGraph& g);

// Expands sum over independent L inside the cover J of
//   prod_{l in L} x_l * prod_{i in (J\L) u (N(L)\J)} (1 - x_i).
MultiLocalFactor factor_by_vertex_cover(const CoprimalityGraph& g,
                                        VertexSubset cover);

// x_i -> x for every i.
UniLocalFactor collapse(const MultiLocalFactor& m);

// Complete graph K_k in closed form: a_j = (-1)^{j-1} (j-1) C(k,j), j >= 2.
UniLocalFactor pairwise_coprime_factor(int k);

// Direct sum over divisor tuples d_i | n_i of mu(d_1)...mu(d_k) *
// delta_G(n_1/d_1, ..., n_k/d_k).  Oracle scale: every n_i <= 200.
std::int64_t mobius_delta_oracle(const CoprimalityGraph& g,
                                 std::span<const std::uint64_t> n);

// The three constructions compared against each other.  The edge-subset
// route is skipped when |E| exceeds kMaxEdgeSubsetEdges.
struct LocalFactorCheck {
  UniLocalFactor by_independent_sets;
  UniLocalFactor by_independent_sets_on_support;
  MultiLocalFactor by_vertex_cover;
  MultiLocalFactor by_edge_subsets;
  VertexSubset cover;
  bool edge_subsets_computed = false;
  bool agree = false;
};
LocalFactorCheck check_local_factor(const CoprimalityGraph& g,
                                    VertexSubset cover);
LocalFactorCheck check_local_factor(const CoprimalityGraph& g);

// Cross-checked univariate factor; throws if the constructions disagree.
UniLocalFactor local_factor(const CoprimalityGraph& g);

std::string format_polynomial(const UniLocalFactor& q);

}  // namespace coprimality

#endif  // COPRIMALITY_LOCAL_FACTOR_HPP_
