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

#include "coprimality/primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include "coprimality/error.hpp"

namespace coprimality {

namespace {

constexpr std::uint64_t kSegmentBytes = 1 << 16;

}  // namespace

std::vector<std::uint32_t> sieve_primes(std::uint64_t limit) {
  if (limit < 2 || limit > kMaxSieveLimit) {
    throw Error(ErrorCode::kOutOfRange,
                "sieve limit " + std::to_string(limit) + " outside 2.." +
                    std::to_string(kMaxSieveLimit));
  }
  std::vector<std::uint32_t> primes{2};
  if (limit < 3) return primes;

  // Base primes up to sqrt(limit) with a plain sieve.
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  std::vector<bool> small(root + 1, true);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 3; i <= root; i += 2) {
    if (!small[i]) continue;
    base.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += 2 * i) small[j] = false;
  }

  // Segment byte b stands for the odd number low + 2b.
  std::vector<std::uint8_t> segment(kSegmentBytes);
  std::vector<std::uint64_t> next_multiple(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    next_multiple[i] = base[i] * base[i];
  }
  primes.reserve(static_cast<std::size_t>(
      1.3 * static_cast<double>(limit) / std::log(static_cast<double>(limit))));

  for (std::uint64_t low = 3; low <= limit; low += 2 * kSegmentBytes) {
    const std::uint64_t high = std::min(limit, low + 2 * kSegmentBytes - 1);
    std::fill(segment.begin(), segment.end(), std::uint8_t{1});
    for (std::size_t i = 0; i < base.size(); ++i) {
      const std::uint64_t p = base[i];
      if (p * p > high) break;
      std::uint64_t m = next_multiple[i];
      for (; m <= high; m += 2 * p) segment[(m - low) / 2] = 0;
      next_multiple[i] = m;
    }
    for (std::uint64_t n = low; n <= high; n += 2) {
      if (segment[(n - low) / 2]) primes.push_back(static_cast<std::uint32_t>(n));
    }
  }
  return primes;
}

PrimeTable::PrimeTable(std::uint64_t limit)
    : limit_(limit), primes_(sieve_primes(limit)) {}

std::span<const std::uint32_t> PrimeTable::primes_up_to(
    std::uint64_t limit) const {
  auto end = std::upper_bound(primes_.begin(), primes_.end(), limit);
  return {primes_.data(), static_cast<std::size_t>(end - primes_.begin())};
}

std::shared_ptr<const PrimeTable> shared_prime_table(std::uint64_t limit) {
  static std::mutex mutex;
  static std::shared_ptr<const PrimeTable> table;
  std::lock_guard lock(mutex);
  if (!table || table->limit() < limit) {
    table = std::make_shared<const PrimeTable>(limit);
  }
  return table;
}

}  // namespace coprimality
