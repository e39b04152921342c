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

#include <random>

#include <gtest/gtest.h>

#include "coprimality/error.hpp"
#include "fixtures.hpp"

namespace coprimality {
namespace {

using nlohmann::json;

TEST(FormatDecimal, TwentySignificantDigits) {
  EXPECT_EQ(format_decimal(0.5L), "0.5");
  EXPECT_EQ(format_decimal(1.0L), "1");
  EXPECT_EQ(format_decimal(1.0L / 3.0L), "0.33333333333333333334");
  EXPECT_EQ(format_decimal(0.0L), "0");
}

TEST(FactorJson, UnivariateRoundTrip) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const CoprimalityGraph g = testing::random_graph(2 + trial % 6, rng);
    const UniLocalFactor q = factor_by_independent_sets(g);
    const json j = to_json(q);
    EXPECT_EQ(uni_factor_from_json(json::parse(j.dump())), q);
  }
  EXPECT_EQ(to_json(UniLocalFactor({1, 0, -4, 4, -1})).dump(),
            "[1,0,-4,4,-1]");
}

TEST(FactorJson, MultivariateRoundTrip) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 + trial % 5;
    const CoprimalityGraph g = testing::random_graph(k, rng);
    const MultiLocalFactor m = factor_by_vertex_cover(g, min_vertex_cover(g));
    const MultiLocalFactor back =
        multi_factor_from_json(json::parse(to_json(m).dump()), k);
    EXPECT_EQ(back.terms(), m.terms());
  }
  const json c4 = to_json(factor_by_edge_subsets(testing::c4_graph()));
  EXPECT_EQ(c4.at(""), 1);
  EXPECT_EQ(c4.at("1,2"), -1);
  EXPECT_EQ(c4.at("1,2,3,4"), -1);
}

TEST(FactorJson, RejectsMalformedInput) {
  EXPECT_THROW(uni_factor_from_json(json::parse("[]")), Error);
  EXPECT_THROW(uni_factor_from_json(json::parse("[1, 0.5]")), Error);
  EXPECT_THROW(uni_factor_from_json(json::parse("{}")), Error);
  EXPECT_THROW(multi_factor_from_json(json::parse("[1]"), 3), Error);
  EXPECT_THROW(multi_factor_from_json(json::parse(R"({"1,4": 1})"), 3), Error);
  EXPECT_THROW(multi_factor_from_json(json::parse(R"({"1": "x"})"), 3), Error);
}

TEST(ReportJson, DensitySchema) {
  DensityEngine engine(1000);
  const json a = to_json(engine.density_A(testing::c4_graph()));
  EXPECT_EQ(a.size(), 7u);
  EXPECT_EQ(a.at("label"), "A_G");
  EXPECT_EQ(a.at("k"), 4);
  EXPECT_TRUE(a.at("r").is_null());
  EXPECT_TRUE(a.at("value").is_string());
  EXPECT_TRUE(a.at("error_bound").is_string());
  EXPECT_EQ(a.at("prime_limit"), 1000);
  EXPECT_EQ(a.at("num_classes"), 1);

  const json c = to_json(engine.density_exact_r(4, 2));
  EXPECT_EQ(c.at("label"), "C_exact");
  EXPECT_EQ(c.at("r"), 2);
  EXPECT_EQ(c.at("num_classes"), 11);
  // Deterministic text.
  EXPECT_EQ(c.dump(), to_json(engine.density_exact_r(4, 2)).dump());
}

TEST(ReportJson, EulerSchema) {
  const UniLocalFactor q({1, 0, -1});
  const json j = to_json(evaluate(q, 1000), q);
  EXPECT_EQ(j.at("prime_limit"), 1000);
  EXPECT_EQ(j.at("polynomial"), json::parse("[1,0,-1]"));
  EXPECT_TRUE(j.at("value").is_string());
  EXPECT_EQ(std::stold(j.at("value").get<std::string>()),
            evaluate(q, 1000).value);
}

TEST(ReportJson, CountSchema) {
  const json exact = to_json(count_delta_exact(complete_graph(2), 4));
  EXPECT_EQ(exact.at("mode"), "exact");
  EXPECT_EQ(exact.at("x"), 4);
  EXPECT_EQ(exact.at("count"), 11);
  EXPECT_EQ(exact.at("estimate"), "0.6875");
  EXPECT_TRUE(exact.at("samples").is_null());
  EXPECT_TRUE(exact.at("ci").is_null());
  EXPECT_TRUE(exact.at("seed").is_null());

  const json mc = to_json(monte_carlo(complete_graph(2), 10'000, 10'000, 3));
  EXPECT_EQ(mc.at("mode"), "mc");
  EXPECT_EQ(mc.at("samples"), 10'000);
  EXPECT_EQ(mc.at("seed"), 3);
  EXPECT_TRUE(mc.at("ci").is_string());
}

TEST(ReportJson, ClassTableSchema) {
  const json t = to_json(build_iso_table(3));
  EXPECT_EQ(t.at("k"), 3);
  ASSERT_EQ(t.at("classes").size(), 4u);
  std::uint64_t total = 0;
  for (const json& c : t.at("classes")) {
    total += c.at("multiplicity").get<std::uint64_t>();
    EXPECT_EQ(c.at("graph").size(), c.at("edges").get<std::size_t>());
  }
  EXPECT_EQ(total, 8u);
  EXPECT_EQ(t.at("classes").back().at("polynomial"),
            json::parse("[1,0,-3,2]"));
}

}  // namespace
}  // namespace coprimality
