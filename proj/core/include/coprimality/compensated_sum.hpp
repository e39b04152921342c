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

#ifndef COPRIMALITY_COMPENSATED_SUM_HPP_
#define COPRIMALITY_COMPENSATED_SUM_HPP_

#include <cmath>

namespace coprimality {

// Neumaier's variant of Kahan summation: the running compensation also
// captures the low-order bits when the addend exceeds the running sum.
template <typename Real>
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(Real initial) : sum_(initial) {}

  void add(Real value) {
    Real t = sum_ + value;
    if (std::fabs(sum_) >= std::fabs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  // Folds another partial sum in, keeping its compensation term.
  void merge(const CompensatedSum& other) {
    add(other.sum_);
    add(other.compensation_);
  }

  CompensatedSum& operator+=(Real value) {
    add(value);
    return *this;
  }

  Real get() const { return sum_ + compensation_; }

 private:
  Real sum_ = 0;
  Real compensation_ = 0;
};

}  // namespace coprimality

#endif  // COPRIMALITY_COMPENSATED_SUM_HPP_
