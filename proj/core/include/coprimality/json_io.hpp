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

#ifndef COPRIMALITY_JSON_IO_HPP_
#define COPRIMALITY_JSON_IO_HPP_

// Machine-readable forms of the library's results.  Real numbers are
// written as decimal strings with 20 significant digits.

#include <string>

#include <nlohmann/json.hpp>

#include "coprimality/density.hpp"
#include "coprimality/empirical.hpp"
#include "coprimality/euler_product.hpp"
#include "coprimality/local_factor.hpp"

namespace coprimality {

std::string format_decimal(long double value);

// [a_0, ..., a_k]
nlohmann::json to_json(const UniLocalFactor& q);
UniLocalFactor uni_factor_from_json(const nlohmann::json& j);

// {"1,3,4": c, ...}; the constant term uses the key "".
nlohmann::json to_json(const MultiLocalFactor& m);
MultiLocalFactor multi_factor_from_json(const nlohmann::json& j, int k);

// {"value", "error_bound", "prime_limit", "polynomial"}
nlohmann::json to_json(const EulerProductValue& v, const UniLocalFactor& q);

// {"label", "k", "r", "value", "error_bound", "prime_limit", "num_classes"}
nlohmann::json to_json(const DensityReport& report);

// {"mode", "x", "samples", "count", "estimate", "ci", "seed"}
nlohmann::json to_json(const CountResult& result);

// {"k", "classes": [{"edges", "multiplicity", "graph", "polynomial"}]}
nlohmann::json to_json(const IsoClassTable& table);

}  // namespace coprimality

#endif  // COPRIMALITY_JSON_IO_HPP_
