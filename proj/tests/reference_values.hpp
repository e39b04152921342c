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

#ifndef COPRIMALITY_TESTS_REFERENCE_VALUES_HPP_
#define COPRIMALITY_TESTS_REFERENCE_VALUES_HPP_

// Frozen output of tests/oracles/euler_reference.py (mpmath, 40 digits):
// small primes multiplied directly, the rest summed through the prime
// zeta function.  Independent of the sieve-based evaluator.

namespace coprimality::testing {

inline constexpr long double kInvZeta2 = 0.6079271018540266286632768L;
inline constexpr long double kInvZeta3 = 0.8319073725807074686831263L;
inline constexpr long double kDensityC4Graph = 0.2177787166195363783230075L;
inline constexpr long double kPairwiseCoprime3 = 0.2867474284344787341078927L;
inline constexpr long double kPairwiseCoprime4 = 0.1148840440802287887292513L;
inline constexpr long double kNoncoprime3 = 0.1742197830347247005585741L;
inline constexpr long double kNoncoprime4 = 0.0790180796937766201679417L;
inline constexpr long double kExactly2Of4 = 0.1009952175550892532700102L;

}  // namespace coprimality::testing

#endif  // COPRIMALITY_TESTS_REFERENCE_VALUES_HPP_
