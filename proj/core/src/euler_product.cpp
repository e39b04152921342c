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

#include "coprimality/euler_product.hpp"

#include <algorithm>
#include <atomic>
#include <cfloat>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "coprimality/compensated_sum.hpp"
#include "coprimality/error.hpp"
#include "coprimality/primes.hpp"

namespace coprimality {

namespace {

// Fixed so that the merge order, and hence the result, does not depend on
// the number of worker threads.
constexpr std::size_t kBlockSize = 1 << 15;

struct BlockResult {
  CompensatedSum<long double> log_sum;
  std::uint32_t bad_prime = 0;
};

BlockResult sum_block(const UniLocalFactor& q,
                      std::span<const std::uint32_t> primes) {
  BlockResult out;
  for (std::uint32_t p : primes) {
    const long double x = 1.0L / static_cast<long double>(p);
    const long double u = q.evaluate_minus_one(x);
    if (!(u > -1.0L)) {
      out.bad_prime = p;
      return out;
    }
    out.log_sum.add(std::log1p(u));
  }
  return out;
}

unsigned resolve_threads(unsigned requested, std::size_t blocks) {
  unsigned n = requested == 0 ? std::thread::hardware_concurrency() : requested;
  n = std::max(1u, n);
  return static_cast<unsigned>(std::min<std::size_t>(n, blocks));
}

}  // namespace

long double EulerProductValue::error_bound() const {
  return value * std::expm1(tail_bound) + rounding_slack;
}

PrimeTailEnclosure reciprocal_square_prime_tail(
    std::uint64_t limit, std::uint64_t primes_up_to_limit) {
  if (limit < 67) {
    throw Error(ErrorCode::kOutOfRange,
                "prime tail enclosure needs limit >= 67");
  }
  const long double p = static_cast<long double>(limit);
  const long double log_p = std::log(p);
  const long double boundary =
      static_cast<long double>(primes_up_to_limit) / (p * p);
  // sum_{q>P} q^-2 = -pi(P)/P^2 + 2 int_P^inf pi(t) t^-3 dt, and
  // 1/(P(L-c)) - 1/(P(L-c)^2) <= int_P^inf dt/(t^2 (ln t - c)) <= 1/(P(L-c)).
  const long double lo_shift = log_p - 0.5L;
  const long double hi_shift = log_p - 1.5L;
  PrimeTailEnclosure out;
  out.lower = -boundary + 2.0L * (1.0L / (p * lo_shift) -
                                  1.0L / (p * lo_shift * lo_shift));
  out.upper = -boundary + 2.0L / (p * hi_shift);
  out.lower = std::max(out.lower, 0.0L);
  return out;
}

EulerProductValue evaluate(const UniLocalFactor& q, std::uint64_t prime_limit,
                           const EulerOptions& options) {
  if (q[0] != 1 || q[1] != 0) {
    throw Error(ErrorCode::kMalformedInput,
                "local factor must start 1 + 0x, got " + format_polynomial(q));
  }
  if (prime_limit < kMinPrimeLimit || prime_limit > kMaxSieveLimit) {
    throw Error(ErrorCode::kOutOfRange,
                "prime limit " + std::to_string(prime_limit) + " outside " +
                    std::to_string(kMinPrimeLimit) + ".." +
                    std::to_string(kMaxSieveLimit));
  }
  const long double big_p = static_cast<long double>(prime_limit);

  long double m_sum = 0.0L;  // M
  long double b_sum = 0.0L;  // B
  for (std::size_t m = q.size(); m-- > 2;) {
    const long double a = std::fabs(static_cast<long double>(q[m]));
    m_sum = m_sum / big_p + a;
    if (m >= 3) b_sum = b_sum / big_p + a;
  }
  if (m_sum / (big_p * big_p) > 0.5L) {
    throw Error(ErrorCode::kTailPrecondition,
                "prime limit " + std::to_string(prime_limit) +
                    " too small for " + format_polynomial(q));
  }

  EulerProductValue result;
  result.prime_limit = prime_limit;
  auto table = shared_prime_table(prime_limit);
  const auto primes = table->primes_up_to(prime_limit);
  result.prime_count = primes.size();
  if (q.is_constant_one()) return result;

  const std::size_t blocks = (primes.size() + kBlockSize - 1) / kBlockSize;
  std::vector<BlockResult> partial(blocks);
  const unsigned threads = resolve_threads(options.threads, blocks);
  auto run = [&](std::atomic<std::size_t>& cursor) {
    for (std::size_t b = cursor++; b < blocks; b = cursor++) {
      const std::size_t begin = b * kBlockSize;
      const std::size_t len = std::min(kBlockSize, primes.size() - begin);
      partial[b] = sum_block(q, primes.subspan(begin, len));
    }
  };
  std::atomic<std::size_t> cursor{0};
  if (threads <= 1) {
    run(cursor);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] { run(cursor); });
    }
  }

  CompensatedSum<long double> log_sum;
  for (const BlockResult& block : partial) {
    if (block.bad_prime != 0) {
      throw Error(ErrorCode::kNonPositiveFactor,
                  format_polynomial(q) + " is not positive at p = " +
                      std::to_string(block.bad_prime));
    }
    log_sum.merge(block.log_sum);
  }

  const PrimeTailEnclosure s2 =
      reciprocal_square_prime_tail(prime_limit, result.prime_count);
  const long double a2 = static_cast<long double>(q[2]);
  result.tail_center = a2 * (s2.lower + s2.upper) / 2.0L;
  result.tail_bound = std::fabs(a2) * (s2.upper - s2.lower) / 2.0L +
                      b_sum / (2.0L * big_p * big_p) +
                      m_sum * m_sum / (3.0L * big_p * big_p * big_p);

  const long double log_finite = log_sum.get();
  result.finite_product = std::exp(log_finite);
  result.value = std::exp(log_finite + result.tail_center);
  // Standard-model estimate: a few ulps per factor plus the final exp.
  result.rounding_slack =
      result.value * 4.0L * LDBL_EPSILON *
      static_cast<long double>(result.prime_count + 8);
  return result;
}

EulerProductValue zeta_inverse(int k, std::uint64_t prime_limit,
                               const EulerOptions& options) {
  if (k < 2) {
    throw Error(ErrorCode::kOutOfRange,
                "1/zeta(k) needs k >= 2, got " + std::to_string(k));
  }
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(k) + 1, 0);
  coeffs[0] = 1;
  coeffs[static_cast<std::size_t>(k)] = -1;
  return evaluate(UniLocalFactor(std::move(coeffs)), prime_limit, options);
}

}  // namespace coprimality
