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

#include "coprimality/json_io.hpp"

#include <cstdio>

#include "coprimality/error.hpp"

namespace coprimality {

using nlohmann::json;

std::string format_decimal(long double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.20Lg", value);
  return buffer;
}

json to_json(const UniLocalFactor& q) { return json(q.coeffs()); }

UniLocalFactor uni_factor_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw Error(ErrorCode::kMalformedInput,
                "univariate factor must be a non-empty integer array");
  }
  std::vector<std::int64_t> coeffs;
  for (const json& c : j) {
    if (!c.is_number_integer()) {
      throw Error(ErrorCode::kMalformedInput, "non-integer coefficient");
    }
    coeffs.push_back(c.get<std::int64_t>());
  }
  return UniLocalFactor(std::move(coeffs));
}

json to_json(const MultiLocalFactor& m) {
  json out = json::object();
  for (const auto& [s, c] : m.terms()) out[format_members(s)] = c;
  return out;
}

MultiLocalFactor multi_factor_from_json(const json& j, int k) {
  if (!j.is_object()) {
    throw Error(ErrorCode::kMalformedInput,
                "multivariate factor must be a JSON object");
  }
  MultiLocalFactor out(k);
  for (const auto& [key, c] : j.items()) {
    if (!c.is_number_integer()) {
      throw Error(ErrorCode::kMalformedInput,
                  "non-integer coefficient for '" + key + "'");
    }
    VertexSubset s = parse_members(key);
    if (!s.is_subset_of(VertexSubset::all(k))) {
      throw Error(ErrorCode::kVertexOutOfRange, "monomial '" + key + "'");
    }
    out.add(s, c.get<std::int64_t>());
  }
  return out;
}

json to_json(const EulerProductValue& v, const UniLocalFactor& q) {
  return json{
      {"value", format_decimal(v.value)},
      {"error_bound", format_decimal(v.error_bound())},
      {"prime_limit", v.prime_limit},
      {"polynomial", to_json(q)},
  };
}

json to_json(const DensityReport& report) {
  return json{
      {"label", std::string(to_string(report.label))},
      {"k", report.k},
      {"r", report.r ? json(*report.r) : json(nullptr)},
      {"value", format_decimal(report.value)},
      {"error_bound", format_decimal(report.error_bound)},
      {"prime_limit", report.prime_limit},
      {"num_classes", report.num_classes},
  };
}

json to_json(const CountResult& result) {
  const bool mc = result.mode == CountMode::kMonteCarlo;
  return json{
      {"mode", mc ? "mc" : "exact"},
      {"x", result.x},
      {"samples", result.samples ? json(*result.samples) : json(nullptr)},
      {"count", result.count},
      {"estimate", format_decimal(result.estimate)},
      {"ci", mc ? json(format_decimal(result.ci_halfwidth)) : json(nullptr)},
      {"seed", result.seed ? json(*result.seed) : json(nullptr)},
  };
}

json to_json(const IsoClassTable& table) {
  json classes = json::array();
  for (const IsoClass& c : table.classes) {
    json edges = json::array();
    for (const Edge& e : c.representative.edges()) {
      edges.push_back(json::array({e.u, e.v}));
    }
    classes.push_back(json{
        {"edges", c.edge_count},
        {"multiplicity", c.multiplicity},
        {"graph", std::move(edges)},
        {"polynomial", to_json(c.factor)},
    });
  }
  return json{{"k", table.k}, {"classes", std::move(classes)}};
}

}  // namespace coprimality
