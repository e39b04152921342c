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

#ifndef COPRIMALITY_PRIMES_HPP_
#define COPRIMALITY_PRIMES_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace coprimality {

inline constexpr std::uint64_t kMaxSieveLimit = 100'000'000;

// All primes <= limit in ascending order (segmented sieve of
// Eratosthenes over odd numbers).  2 <= limit <= kMaxSieveLimit.
std::vector<std::uint32_t> sieve_primes(std::uint64_t limit);

// Immutable sieve result; safe to share across threads.
class PrimeTable {
 public:
  explicit PrimeTable(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  std::span<const std::uint32_t> primes() const { return primes_; }
  // Prefix of primes() holding the primes <= limit.
  std::span<const std::uint32_t> primes_up_to(std::uint64_t limit) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> primes_;
};

// Process-wide memo: returns a table covering at least `limit`.
std::shared_ptr<const PrimeTable> shared_prime_table(std::uint64_t limit);

}  // namespace coprimality

#endif  // COPRIMALITY_PRIMES_HPP_
