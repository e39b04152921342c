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

#ifndef COPRIMALITY_EULER_PRODUCT_HPP_
#define COPRIMALITY_EULER_PRODUCT_HPP_

// Numerical evaluation of prod_p Q(1/p) for an integer polynomial
// Q = 1 + a_2 x^2 + ... + a_k x^k with a certified error bound.
//
// The finite part over p <= P is the exponential of a compensated sum of
// log Q(1/p) in extended precision.  The omitted tail T = sum_{p>P} log
// Q(1/p) is enclosed analytically: with u_p = Q(1/p) - 1,
//   u_p = a_2/p^2 + r_p,  |r_p| <= B/p^3,  |u_p| <= M/p^2,
//   M = sum_{m>=2} |a_m| P^{2-m},  B = sum_{m>=3} |a_m| P^{3-m},
// and |log(1+u) - u| <= u^2 whenever |u| <= 1/2 (checked via M/P^2).
// The prime sum S2 = sum_{p>P} p^{-2} is bracketed by partial summation
// against the Rosser-Schoenfeld bounds
//   t/(ln t - 1/2) < pi(t) < t/(ln t - 3/2)   (t >= 67),
// using the exact pi(P) from the sieve.  The reported value includes the
// midpoint of the enclosure for T; `tail_bound` is its half-width.

#include <cstdint>

#include "coprimality/local_factor.hpp"

namespace coprimality {

inline constexpr std::uint64_t kMinPrimeLimit = 100;
inline constexpr std::uint64_t kDefaultPrimeLimit = 10'000'000;

struct EulerProductValue {
  long double value = 1.0L;
  // Half-width of the enclosure of the log of the omitted tail.
  long double tail_bound = 0.0L;
  // Midpoint of that enclosure (already folded into `value`).
  long double tail_center = 0.0L;
  long double rounding_slack = 0.0L;
  // prod_{p <= prime_limit} Q(1/p), without the tail estimate.
  long double finite_product = 1.0L;
  std::uint64_t prime_limit = 0;
  std::uint64_t prime_count = 0;

  // value * (exp(tail_bound) - 1) + rounding_slack
  long double error_bound() const;
};

// Enclosure of sum_{p > limit} 1/p^2 given pi(limit).
struct PrimeTailEnclosure {
  long double lower = 0.0L;
  long double upper = 0.0L;
};
PrimeTailEnclosure reciprocal_square_prime_tail(std::uint64_t limit,
                                                std::uint64_t primes_up_to_limit);

struct EulerOptions {
  // 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

// Requires a_0 = 1, a_1 = 0 and prime_limit >= kMinPrimeLimit.  Throws
// kTailPrecondition when M/P^2 > 1/2 and kNonPositiveFactor when some
// Q(1/p) <= 0.  Results are bit-identical for any thread count.
EulerProductValue evaluate(const UniLocalFactor& q, std::uint64_t prime_limit,
                           const EulerOptions& options = {});

// 1/zeta(k) as prod_p (1 - p^{-k}).
EulerProductValue zeta_inverse(int k, std::uint64_t prime_limit,
                               const EulerOptions& options = {});

}  // namespace coprimality

#endif  // COPRIMALITY_EULER_PRODUCT_HPP_
