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

#include "coprimality/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "coprimality/error.hpp"
#include "fixtures.hpp"

namespace coprimality {
namespace {

using testing::c4_graph;
using testing::example2_graph;

ErrorCode parse_error(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a parse error for: " << text;
  return ErrorCode::kIo;
}

// Subsets of {1..k} as plain bitmasks, for brute-force oracles.
std::vector<VertexSubset> all_subsets(int k) {
  std::vector<VertexSubset> out;
  for (std::uint32_t b = 0; b < (1u << k); ++b) {
    out.push_back(VertexSubset::from_bits(b));
  }
  return out;
}

TEST(ParseGraph, CycleFromText) {
  CoprimalityGraph g = c4_graph();
  EXPECT_EQ(g.vertex_count(), 4);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_TRUE(g.has_edge(4, 1));
  EXPECT_FALSE(g.has_edge(1, 3));
}

TEST(ParseGraph, EdgelessPair) {
  CoprimalityGraph g = parse_graph("2\n");
  EXPECT_EQ(g.vertex_count(), 2);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(ParseGraph, OrderAndOrientationInsensitive) {
  CoprimalityGraph a = parse_graph("# comment\n4\n\n4 3\n2 1\n  1 4\n3 2\n");
  EXPECT_EQ(a, c4_graph());
  EXPECT_EQ(parse_graph(format_graph(a)), a);
}

TEST(ParseGraph, Errors) {
  EXPECT_EQ(parse_error("3\n1 2\n1 2"), ErrorCode::kDuplicateEdge);
  EXPECT_EQ(parse_error("3\n1 2\n2 1"), ErrorCode::kDuplicateEdge);
  EXPECT_EQ(parse_error("3\n1 4"), ErrorCode::kVertexOutOfRange);
  EXPECT_EQ(parse_error("3\n0 2"), ErrorCode::kVertexOutOfRange);
  EXPECT_EQ(parse_error("1\n"), ErrorCode::kTooFewVertices);
  EXPECT_EQ(parse_error("3\n1 2 3"), ErrorCode::kMalformedInput);
  EXPECT_EQ(parse_error("3\n1 x"), ErrorCode::kMalformedInput);
  EXPECT_EQ(parse_error("3\n2 2"), ErrorCode::kMalformedInput);
  EXPECT_EQ(parse_error("# only a comment\n"), ErrorCode::kMalformedInput);
  EXPECT_EQ(parse_error("three\n"), ErrorCode::kMalformedInput);
}

TEST(Degree, Examples) {
  EXPECT_EQ(degree(c4_graph(), 1), 2);
  EXPECT_EQ(degree(example2_graph(), 4), 3);
  EXPECT_EQ(degree(empty_graph(3), 2), 0);
  EXPECT_THROW(degree(c4_graph(), 5), Error);
}

TEST(MaxDegree, Examples) {
  EXPECT_EQ(max_degree(c4_graph()), 2);
  EXPECT_EQ(max_degree(complete_graph(4)), 3);
  // Degrees from the edge list: 2,3,2,3,2,0,0.
  EXPECT_EQ(max_degree(example2_graph()), 3);
  EXPECT_EQ(max_degree(empty_graph(5)), 0);
}

TEST(NonIsolated, Examples) {
  EXPECT_EQ(non_isolated(example2_graph()), VertexSubset::of({1, 2, 3, 4, 5}));
  EXPECT_TRUE(non_isolated(empty_graph(3)).empty());
  EXPECT_EQ(non_isolated(complete_graph(3)), VertexSubset::of({1, 2, 3}));
}

TEST(Neighborhood, Examples) {
  EXPECT_EQ(neighborhood(c4_graph(), VertexSubset::of({1})),
            VertexSubset::of({2, 4}));
  EXPECT_EQ(neighborhood(example2_graph(), VertexSubset::of({4})),
            VertexSubset::of({2, 3, 5}));
  EXPECT_TRUE(neighborhood(example2_graph(), VertexSubset{}).empty());
}

TEST(IsIndependent, Examples) {
  EXPECT_TRUE(is_independent(c4_graph(), VertexSubset::of({1, 3})));
  EXPECT_FALSE(is_independent(c4_graph(), VertexSubset::of({1, 2})));
  EXPECT_TRUE(is_independent(c4_graph(), VertexSubset{}));
  EXPECT_TRUE(is_independent(complete_graph(5), VertexSubset::of({5})));
}

TEST(IndependentSetCounts, Examples) {
  const std::vector<std::uint64_t> c4{1, 4, 2, 0, 0};
  EXPECT_EQ(independent_set_counts(c4_graph(), VertexSubset::all(4)), c4);
  for (int k = 2; k <= 7; ++k) {
    std::vector<std::uint64_t> expected(static_cast<std::size_t>(k) + 1, 0);
    expected[0] = 1;
    expected[1] = static_cast<std::uint64_t>(k);
    EXPECT_EQ(independent_set_counts(complete_graph(k), VertexSubset::all(k)),
              expected);
  }
  const std::vector<std::uint64_t> path3{1, 3, 1, 0};
  EXPECT_EQ(independent_set_counts(path_graph(3), VertexSubset::all(3)), path3);
}

TEST(IndependentSetCounts, RestrictedToSupport) {
  CoprimalityGraph g = example2_graph();
  auto on_support = independent_set_counts(g, non_isolated(g));
  // Isolated vertices 6, 7 are excluded: sizes stop at |I| = 5.
  EXPECT_EQ(on_support[0], 1u);
  EXPECT_EQ(on_support[1], 5u);
  EXPECT_EQ(on_support[6], 0u);
  EXPECT_THROW(independent_set_counts(g, VertexSubset::of({8})), Error);
}

TEST(IndependentSetCounts, MatchesFilteringAllSubsets) {
  for (int k = 2; k <= 6; ++k) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(k));
         mask += (k == 6 ? 97 : 1)) {
      CoprimalityGraph g = graph_from_edge_mask(k, mask);
      std::vector<std::uint64_t> brute(static_cast<std::size_t>(k) + 1, 0);
      for (VertexSubset s : all_subsets(k)) {
        if (is_independent(g, s)) ++brute[static_cast<std::size_t>(s.size())];
      }
      ASSERT_EQ(independent_set_counts(g, VertexSubset::all(k)), brute)
          << format_graph(g);
    }
  }
}

TEST(MinVertexCover, Examples) {
  EXPECT_EQ(min_vertex_cover(c4_graph()), VertexSubset::of({1, 3}));
  EXPECT_EQ(min_vertex_cover(example2_graph()), VertexSubset::of({1, 2, 4}));
  EXPECT_TRUE(min_vertex_cover(empty_graph(4)).empty());
  EXPECT_EQ(min_vertex_cover(complete_graph(4)), VertexSubset::of({1, 2, 3}));
}

TEST(MinVertexCover, MinimalAndLexLeastExhaustive) {
  for (int k = 2; k <= 6; ++k) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(k));
         mask += (k == 6 ? 131 : 1)) {
      CoprimalityGraph g = graph_from_edge_mask(k, mask);
      VertexSubset cover = min_vertex_cover(g);
      ASSERT_TRUE(is_vertex_cover(g, cover));
      std::vector<std::vector<int>> minimum;
      int best = k + 1;
      for (VertexSubset s : all_subsets(k)) {
        if (!is_vertex_cover(g, s)) continue;
        if (s.size() < best) {
          best = s.size();
          minimum.clear();
        }
        if (s.size() == best) minimum.push_back(s.members());
      }
      ASSERT_EQ(cover.size(), best);
      EXPECT_EQ(cover.members(),
                *std::min_element(minimum.begin(), minimum.end()));
    }
  }
}

TEST(Duality, IndependentIffComplementCovers) {
  for (int k = 2; k <= 5; ++k) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(k));
         ++mask) {
      CoprimalityGraph g = graph_from_edge_mask(k, mask);
      for (VertexSubset s : all_subsets(k)) {
        ASSERT_EQ(is_independent(g, s),
                  is_vertex_cover(g, VertexSubset::all(k) - s));
      }
    }
  }
}

TEST(CanonicalKey, RelabeledPathsAgree) {
  CoprimalityGraph a(3, {{1, 2}, {2, 3}});
  CoprimalityGraph b(3, {{2, 1}, {1, 3}});
  EXPECT_EQ(canonical_key(a), canonical_key(b));
  EXPECT_NE(canonical_key(a), canonical_key(complete_graph(3)));
}

TEST(CanonicalKey, AgreesWithBruteForceIsomorphism) {
  // Oracle: two graphs are isomorphic iff some permutation maps one edge
  // set onto the other.
  auto isomorphic = [](const CoprimalityGraph& a, const CoprimalityGraph& b) {
    std::vector<int> perm(static_cast<std::size_t>(a.vertex_count()));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      if (relabel(a, perm) == b) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };
  const CoprimalityGraph c4 = c4_graph();
  const CoprimalityGraph matching(4, {{1, 3}, {2, 4}});
  const CoprimalityGraph relabeled_c4(4, {{1, 3}, {3, 2}, {2, 4}, {4, 1}});
  EXPECT_EQ(canonical_key(c4) == canonical_key(matching),
            isomorphic(c4, matching));
  EXPECT_EQ(canonical_key(c4) == canonical_key(relabeled_c4),
            isomorphic(c4, relabeled_c4));
  EXPECT_TRUE(isomorphic(c4, relabeled_c4));

  // Every pair of 4-vertex graphs.
  std::vector<CoprimalityGraph> graphs;
  for (std::uint64_t m = 0; m < 64; ++m) graphs.push_back(graph_from_edge_mask(4, m));
  for (const auto& a : graphs) {
    for (const auto& b : graphs) {
      ASSERT_EQ(canonical_key(a) == canonical_key(b), isomorphic(a, b));
    }
  }
}

TEST(CanonicalKey, InvariantUnderEveryPermutation) {
  std::mt19937_64 rng(7);
  for (int k = 2; k <= 6; ++k) {
    for (int trial = 0; trial < 6; ++trial) {
      CoprimalityGraph g = testing::random_graph(k, rng);
      const CanonicalKey key = canonical_key(g);
      EXPECT_EQ(key.size(), static_cast<std::size_t>(pair_count(k)) + 1);
      std::vector<int> perm(static_cast<std::size_t>(k));
      std::iota(perm.begin(), perm.end(), 1);
      do {
        ASSERT_EQ(canonical_key(relabel(g, perm)), key);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST(CanonicalKey, GuardsLargeK) {
  EXPECT_NO_THROW(canonical_key(path_graph(8)));
  try {
    canonical_key(path_graph(9));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGuardExceeded);
  }
}

TEST(PairIndex, RoundTrips) {
  for (int k = 2; k <= 8; ++k) {
    for (int e = 0; e < pair_count(k); ++e) {
      Edge edge = pair_at(k, e);
      EXPECT_LT(edge.u, edge.v);
      EXPECT_EQ(pair_index(k, edge.u, edge.v), e);
    }
  }
  EXPECT_EQ(pair_at(4, 0), (Edge{1, 2}));
  EXPECT_EQ(pair_at(4, 3), (Edge{2, 3}));
}

TEST(EnumerateEdgeSubsets, Counts) {
  auto count = [](int k, int j) {
    EdgeSubsetEnumerator e(k, j);
    std::uint64_t n = 0;
    std::set<std::uint64_t> distinct;
    while (auto g = e.next()) {
      EXPECT_EQ(g->edge_count(), static_cast<std::size_t>(j));
      distinct.insert(edge_mask(*g));
      ++n;
    }
    EXPECT_EQ(distinct.size(), n);
    EXPECT_EQ(n, e.total());
    return n;
  };
  EXPECT_EQ(count(3, 2), 3u);
  EXPECT_EQ(count(4, 0), 1u);
  EXPECT_EQ(count(4, 3), 20u);
}

TEST(EnumerateEdgeSubsets, LayersPartitionThePowerSet) {
  for (int k = 2; k <= 6; ++k) {
    std::uint64_t total = 0;
    for (int j = 0; j <= pair_count(k); ++j) {
      EdgeSubsetEnumerator e(k, j);
      while (e.next_mask()) ++total;
    }
    EXPECT_EQ(total, std::uint64_t{1} << pair_count(k));
  }
  EXPECT_EQ(EdgeSubsetEnumerator(7, 10).total(), 352716u);
}

TEST(EnumerateEdgeSubsets, RestartsAndGuards) {
  EdgeSubsetEnumerator e(4, 2);
  std::vector<std::uint64_t> first;
  while (auto m = e.next_mask()) first.push_back(*m);
  e.reset();
  std::vector<std::uint64_t> second;
  while (auto m = e.next_mask()) second.push_back(*m);
  EXPECT_EQ(first, second);
  ASSERT_EQ(first.size(), 15u);
  EXPECT_EQ(first.front(), 0b000011u);  // pairs {1,2},{1,3}
  EXPECT_EQ(first.back(), 0b110000u);   // pairs {2,4},{3,4}
  EXPECT_THROW(EdgeSubsetEnumerator(8, 1), Error);
  EXPECT_THROW(EdgeSubsetEnumerator(1, 0), Error);
  EXPECT_THROW(EdgeSubsetEnumerator(4, 7), Error);
  EXPECT_THROW(EdgeSubsetEnumerator(4, -1), Error);
}

TEST(VertexSubset, FormatAndParse) {
  VertexSubset s = VertexSubset::of({4, 1, 3});
  EXPECT_EQ(format_members(s), "1,3,4");
  EXPECT_EQ(parse_members("1,3,4"), s);
  EXPECT_TRUE(parse_members("").empty());
  EXPECT_THROW(parse_members("1,,2"), Error);
  EXPECT_THROW(parse_members("0"), Error);
}

}  // namespace
}  // namespace coprimality
