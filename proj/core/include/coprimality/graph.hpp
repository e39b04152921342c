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

#ifndef COPRIMALITY_GRAPH_HPP_
#define COPRIMALITY_GRAPH_HPP_

// Coprimality graphs: vertex i stands for the i-th component n_i of a
// k-tuple and an edge {i,j} imposes gcd(n_i, n_j) = 1.  Vertices are
// 1-indexed throughout the public interface.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coprimality {

inline constexpr int kMaxVertices = 32;
inline constexpr int kMaxCanonicalVertices = 8;
inline constexpr int kMaxEnumerationVertices = 7;

// A subset of {1..k} stored as a bitmask (vertex v <-> bit v-1).
class VertexSubset {
 public:
  constexpr VertexSubset() = default;

  static constexpr VertexSubset from_bits(std::uint32_t bits) {
    VertexSubset s;
    s.bits_ = bits;
    return s;
  }
  static VertexSubset of(std::initializer_list<int> vertices);
  static VertexSubset of(const std::vector<int>& vertices);
  static constexpr VertexSubset all(int k) {
    return from_bits(k >= 32 ? ~std::uint32_t{0}
                             : (std::uint32_t{1} << k) - 1u);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  bool contains(int v) const;
  void insert(int v);
  void erase(int v);
  int size() const;
  constexpr bool empty() const { return bits_ == 0; }
  // Largest member, or 0 when empty.
  int max_member() const;

  // Ascending member list.
  std::vector<int> members() const;

  constexpr bool is_subset_of(VertexSubset other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  friend constexpr VertexSubset operator|(VertexSubset a, VertexSubset b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend constexpr VertexSubset operator&(VertexSubset a, VertexSubset b) {
    return from_bits(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr VertexSubset operator-(VertexSubset a, VertexSubset b) {
    return from_bits(a.bits_ & ~b.bits_);
  }

  // Orders by bitmask value, not by member list.
  friend constexpr auto operator<=>(VertexSubset, VertexSubset) = default;

 private:
  std::uint32_t bits_ = 0;
};

// "1,3,4"; empty subset formats as "".
std::string format_members(VertexSubset s);
// Inverse of format_members.
VertexSubset parse_members(std::string_view text);

struct Edge {
  int u = 0;  // u < v
  int v = 0;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

class CoprimalityGraph {
 public:
  // Edgeless graph on k vertices; throws if k is outside [2, kMaxVertices].
  explicit CoprimalityGraph(int k);
  CoprimalityGraph(int k, const std::vector<Edge>& edges);

  // Throws on self-loops, out-of-range endpoints and duplicates.
  void add_edge(int i, int j);

  int vertex_count() const { return k_; }
  std::size_t edge_count() const { return edges_.size(); }
  // Sorted, each with u < v.
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int i, int j) const;
  VertexSubset neighbors(int v) const;
  VertexSubset vertices() const { return VertexSubset::all(k_); }

  friend bool operator==(const CoprimalityGraph&,
                         const CoprimalityGraph&) = default;

 private:
  void check_vertex(int v) const;

  int k_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> adjacency_;
};

// Line-oriented text: first line k, then one "i j" pair per line.
// Blank lines and lines starting with '#' are skipped.
CoprimalityGraph parse_graph(std::string_view text);
std::string format_graph(const CoprimalityGraph& g);

CoprimalityGraph empty_graph(int k);
CoprimalityGraph complete_graph(int k);
CoprimalityGraph path_graph(int k);
CoprimalityGraph cycle_graph(int k);

// Disjoint union; the vertices of `b` are shifted by a.vertex_count().
CoprimalityGraph disjoint_union(const CoprimalityGraph& a,
                                const CoprimalityGraph& b);

// Relabel vertex v as perm[v-1] (perm is a permutation of 1..k).
CoprimalityGraph relabel(const CoprimalityGraph& g,
                         const std::vector<int>& perm);

int degree(const CoprimalityGraph& g, int v);
int max_degree(const CoprimalityGraph& g);
VertexSubset non_isolated(const CoprimalityGraph& g);
VertexSubset neighborhood(const CoprimalityGraph& g, VertexSubset l);
bool is_independent(const CoprimalityGraph& g, VertexSubset s);
bool is_vertex_cover(const CoprimalityGraph& g, VertexSubset s);

// Entry m is the number of independent subsets of `restrict_to` with m
// members; the vector has k+1 entries.
std::vector<std::uint64_t> independent_set_counts(const CoprimalityGraph& g,
                                                  VertexSubset restrict_to);

// Minimum-cardinality vertex cover; among several, the one whose sorted
// member list is lexicographically least.
VertexSubset min_vertex_cover(const CoprimalityGraph& g);

// Byte 0 is k, then one 0/1 byte per vertex pair in lexicographic pair
// order.  The key is the lexicographic minimum of that encoding over all
// vertex relabelings, so two graphs share a key iff they are isomorphic.
using CanonicalKey = std::vector<std::uint8_t>;
CanonicalKey canonical_key(const CoprimalityGraph& g);

// Pair indexing for the complete graph: (1,2),(1,3),...,(1,k),(2,3),...
int pair_count(int k);
int pair_index(int k, int i, int j);
Edge pair_at(int k, int index);

// Bit e set iff pair_at(k, e) is an edge.
std::uint64_t edge_mask(const CoprimalityGraph& g);
CoprimalityGraph graph_from_edge_mask(int k, std::uint64_t mask);

// Every j-edge subgraph of K_k on the fixed vertex set, each exactly once,
// in lexicographic order of the chosen pair indices.  Restartable.
class EdgeSubsetEnumerator {
 public:
  EdgeSubsetEnumerator(int k, int j);

  std::optional<CoprimalityGraph> next();
  // Same sequence as next(), as edge masks.
  std::optional<std::uint64_t> next_mask();
  void reset();

  // C(k(k-1)/2, j).
  std::uint64_t total() const;
  int k() const { return k_; }
  int j() const { return j_; }

 private:
  int k_;
  int j_;
  int pairs_;
  std::vector<int> chosen_;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace coprimality

#endif  // COPRIMALITY_GRAPH_HPP_
