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

#ifndef COPRIMALITY_TESTS_FIXTURES_HPP_
#define COPRIMALITY_TESTS_FIXTURES_HPP_

#include <random>

#include "coprimality/graph.hpp"

namespace coprimality::testing {

// The 4-cycle 1-2-3-4-1.
inline CoprimalityGraph c4_graph() {
  return parse_graph("4\n1 2\n2 3\n3 4\n1 4\n");
}

// Seven vertices, six edges, vertices 6 and 7 isolated.
inline CoprimalityGraph example2_graph() {
  return CoprimalityGraph(7, {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {4, 5}});
}

inline CoprimalityGraph random_graph(int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> bits(
      0, (std::uint64_t{1} << pair_count(k)) - 1);
  return graph_from_edge_mask(k, bits(rng));
}

}  // namespace coprimality::testing

#endif  // COPRIMALITY_TESTS_FIXTURES_HPP_
