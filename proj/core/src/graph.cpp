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
#include <charconv>
#include <numeric>
#include <sstream>

#include "coprimality/error.hpp"

namespace coprimality {

namespace {

std::uint32_t vertex_bit(int v) { return std::uint32_t{1} << (v - 1); }

bool parse_int(std::string_view token, long long& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r') {
      ++i;
    }
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t result = 1;
  for (int i = 1; i <= r; ++i) {
    result = result * static_cast<std::uint64_t>(n - r + i) /
             static_cast<std::uint64_t>(i);
  }
  return result;
}

void count_independent(const CoprimalityGraph& g, std::uint32_t candidates,
                       int size, std::vector<std::uint64_t>& counts) {
  counts[static_cast<std::size_t>(size)] += 1;
  while (candidates != 0) {
    int bit = std::countr_zero(candidates);
    candidates &= candidates - 1;
    // Only higher-numbered candidates remain, so each set is counted once.
    std::uint32_t next = candidates & ~g.neighbors(bit + 1).bits();
    count_independent(g, next, size + 1, counts);
  }
}

}  // namespace

VertexSubset VertexSubset::of(std::initializer_list<int> vertices) {
  VertexSubset s;
  for (int v : vertices) s.insert(v);
  return s;
}

VertexSubset VertexSubset::of(const std::vector<int>& vertices) {
  VertexSubset s;
  for (int v : vertices) s.insert(v);
  return s;
}

bool VertexSubset::contains(int v) const {
  return v >= 1 && v <= kMaxVertices && (bits_ & vertex_bit(v)) != 0;
}

void VertexSubset::insert(int v) {
  if (v < 1 || v > kMaxVertices) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex " + std::to_string(v) + " outside 1.." +
                    std::to_string(kMaxVertices));
  }
  bits_ |= vertex_bit(v);
}

void VertexSubset::erase(int v) {
  if (v >= 1 && v <= kMaxVertices) bits_ &= ~vertex_bit(v);
}

int VertexSubset::size() const { return std::popcount(bits_); }

int VertexSubset::max_member() const {
  return bits_ == 0 ? 0 : 32 - std::countl_zero(bits_);
}

std::vector<int> VertexSubset::members() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

std::string format_members(VertexSubset s) {
  std::string out;
  for (int v : s.members()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

VertexSubset parse_members(std::string_view text) {
  VertexSubset s;
  if (text.empty()) return s;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    long long v = 0;
    std::string_view token = text.substr(start, comma - start);
    if (!parse_int(token, v)) {
      throw Error(ErrorCode::kMalformedInput,
                  "bad vertex list '" + std::string(text) + "'");
    }
    if (v < 1 || v > kMaxVertices) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "vertex " + std::to_string(v) + " in list");
    }
    s.insert(static_cast<int>(v));
    start = comma + 1;
  }
  return s;
}

CoprimalityGraph::CoprimalityGraph(int k) : k_(k) {
  if (k < 2) {
    throw Error(ErrorCode::kTooFewVertices,
                "need k >= 2 vertices, got " + std::to_string(k));
  }
  if (k > kMaxVertices) {
    throw Error(ErrorCode::kOutOfRange,
                "k = " + std::to_string(k) + " exceeds " +
                    std::to_string(kMaxVertices));
  }
  adjacency_.assign(static_cast<std::size_t>(k), 0);
}

CoprimalityGraph::CoprimalityGraph(int k, const std::vector<Edge>& edges)
    : CoprimalityGraph(k) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void CoprimalityGraph::check_vertex(int v) const {
  if (v < 1 || v > k_) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex " + std::to_string(v) + " outside 1.." +
                    std::to_string(k_));
  }
}

void CoprimalityGraph::add_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) {
    throw Error(ErrorCode::kMalformedInput,
                "self-loop at vertex " + std::to_string(i));
  }
  if (i > j) std::swap(i, j);
  Edge e{i, j};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) {
    throw Error(ErrorCode::kDuplicateEdge,
                "edge " + std::to_string(i) + " " + std::to_string(j));
  }
  edges_.insert(it, e);
  adjacency_[static_cast<std::size_t>(i - 1)] |= vertex_bit(j);
  adjacency_[static_cast<std::size_t>(j - 1)] |= vertex_bit(i);
}

bool CoprimalityGraph::has_edge(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  return (adjacency_[static_cast<std::size_t>(i - 1)] & vertex_bit(j)) != 0;
}

VertexSubset CoprimalityGraph::neighbors(int v) const {
  check_vertex(v);
  return VertexSubset::from_bits(adjacency_[static_cast<std::size_t>(v - 1)]);
}

CoprimalityGraph parse_graph(std::string_view text) {
  std::optional<CoprimalityGraph> graph;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_whitespace(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    const std::string where = "line " + std::to_string(line_no);
    if (!graph) {
      long long k = 0;
      if (tokens.size() != 1 || !parse_int(tokens[0], k)) {
        throw Error(ErrorCode::kMalformedInput,
                    where + ": expected vertex count");
      }
      if (k < 2) {
        throw Error(ErrorCode::kTooFewVertices,
                    where + ": k = " + std::to_string(k));
      }
      if (k > kMaxVertices) {
        throw Error(ErrorCode::kOutOfRange,
                    where + ": k = " + std::to_string(k));
      }
      graph.emplace(static_cast<int>(k));
      continue;
    }
    long long i = 0;
    long long j = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], i) ||
        !parse_int(tokens[1], j)) {
      throw Error(ErrorCode::kMalformedInput,
                  where + ": expected 'i j', got '" + std::string(line) +
                      "'");
    }
    const long long k = graph->vertex_count();
    if (i < 1 || i > k || j < 1 || j > k) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  where + ": vertex outside 1.." + std::to_string(k));
    }
    try {
      graph->add_edge(static_cast<int>(i), static_cast<int>(j));
    } catch (const Error& e) {
      throw Error(e.code(), where + ": " + e.what());
    }
  }
  if (!graph) {
    throw Error(ErrorCode::kMalformedInput, "missing vertex count");
  }
  return *std::move(graph);
}

std::string format_graph(const CoprimalityGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

CoprimalityGraph empty_graph(int k) { return CoprimalityGraph(k); }

CoprimalityGraph complete_graph(int k) {
  CoprimalityGraph g(k);
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) g.add_edge(i, j);
  }
  return g;
}

CoprimalityGraph path_graph(int k) {
  CoprimalityGraph g(k);
  for (int i = 1; i < k; ++i) g.add_edge(i, i + 1);
  return g;
}

CoprimalityGraph cycle_graph(int k) {
  CoprimalityGraph g = path_graph(k);
  if (k >= 3) g.add_edge(1, k);
  return g;
}

CoprimalityGraph disjoint_union(const CoprimalityGraph& a,
                                const CoprimalityGraph& b) {
  const int shift = a.vertex_count();
  CoprimalityGraph g(shift + b.vertex_count(), a.edges());
  for (const Edge& e : b.edges()) g.add_edge(e.u + shift, e.v + shift);
  return g;
}

CoprimalityGraph relabel(const CoprimalityGraph& g,
                         const std::vector<int>& perm) {
  const int k = g.vertex_count();
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> identity(static_cast<std::size_t>(k));
  std::iota(identity.begin(), identity.end(), 1);
  if (sorted != identity) {
    throw Error(ErrorCode::kMalformedInput, "relabeling is not a permutation");
  }
  CoprimalityGraph out(k);
  for (const Edge& e : g.edges()) {
    out.add_edge(perm[static_cast<std::size_t>(e.u - 1)],
                 perm[static_cast<std::size_t>(e.v - 1)]);
  }
  return out;
}

int degree(const CoprimalityGraph& g, int v) { return g.neighbors(v).size(); }

int max_degree(const CoprimalityGraph& g) {
  int best = 0;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    best = std::max(best, degree(g, v));
  }
  return best;
}

VertexSubset non_isolated(const CoprimalityGraph& g) {
  VertexSubset s;
  for (const Edge& e : g.edges()) {
    s.insert(e.u);
    s.insert(e.v);
  }
  return s;
}

VertexSubset neighborhood(const CoprimalityGraph& g, VertexSubset l) {
  VertexSubset out;
  for (int v : l.members()) out = out | g.neighbors(v);
  return out;
}

bool is_independent(const CoprimalityGraph& g, VertexSubset s) {
  for (int v : s.members()) {
    if (!(g.neighbors(v) & s).empty()) return false;
  }
  return true;
}

bool is_vertex_cover(const CoprimalityGraph& g, VertexSubset s) {
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return s.contains(e.u) || s.contains(e.v);
  });
}

std::vector<std::uint64_t> independent_set_counts(const CoprimalityGraph& g,
                                                  VertexSubset restrict_to) {
  if (!restrict_to.is_subset_of(g.vertices())) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "restriction {" + format_members(restrict_to) +
                    "} is not inside the vertex set");
  }
  std::vector<std::uint64_t> counts(
      static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  count_independent(g, restrict_to.bits(), 0, counts);
  return counts;
}

VertexSubset min_vertex_cover(const CoprimalityGraph& g) {
  const int k = g.vertex_count();
  for (int size = 0; size <= k; ++size) {
    // Combinations of 1..k in lexicographic order of the member list.
    std::vector<int> pick(static_cast<std::size_t>(size));
    std::iota(pick.begin(), pick.end(), 1);
    while (true) {
      VertexSubset candidate = VertexSubset::of(pick);
      if (is_vertex_cover(g, candidate)) return candidate;
      int i = size - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == k - size + i + 1) {
        --i;
      }
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int t = i + 1; t < size; ++t) {
        pick[static_cast<std::size_t>(t)] =
            pick[static_cast<std::size_t>(t - 1)] + 1;
      }
    }
  }
  return g.vertices();  // unreachable: the full vertex set is a cover
}

CanonicalKey canonical_key(const CoprimalityGraph& g) {
  const int k = g.vertex_count();
  if (k > kMaxCanonicalVertices) {
    throw Error(ErrorCode::kGuardExceeded,
                "canonical_key is exhaustive and limited to k <= " +
                    std::to_string(kMaxCanonicalVertices));
  }
  const int pairs = pair_count(k);
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  // Bit (pairs-1-e) holds pair e, so integer order equals lexicographic
  // order of the 0/1 pair string.
  std::uint32_t best = ~std::uint32_t{0};
  do {
    std::uint32_t encoded = 0;
    for (const Edge& e : g.edges()) {
      int a = perm[static_cast<std::size_t>(e.u - 1)] + 1;
      int b = perm[static_cast<std::size_t>(e.v - 1)] + 1;
      encoded |= std::uint32_t{1} << (pairs - 1 - pair_index(k, a, b));
    }
    best = std::min(best, encoded);
  } while (std::next_permutation(perm.begin(), perm.end()));

  CanonicalKey key;
  key.reserve(static_cast<std::size_t>(pairs) + 1);
  key.push_back(static_cast<std::uint8_t>(k));
  for (int e = 0; e < pairs; ++e) {
    key.push_back(static_cast<std::uint8_t>((best >> (pairs - 1 - e)) & 1u));
  }
  return key;
}

int pair_count(int k) { return k * (k - 1) / 2; }

int pair_index(int k, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > k || i == j) {
    throw Error(ErrorCode::kVertexOutOfRange, "bad vertex pair");
  }
  // Pairs starting with vertices 1..i-1 come first.
  return (i - 1) * k - (i - 1) * i / 2 + (j - i - 1);
}

Edge pair_at(int k, int index) {
  if (index < 0 || index >= pair_count(k)) {
    throw Error(ErrorCode::kOutOfRange, "pair index " + std::to_string(index));
  }
  int i = 1;
  while (index >= k - i) {
    index -= k - i;
    ++i;
  }
  return Edge{i, i + 1 + index};
}

std::uint64_t edge_mask(const CoprimalityGraph& g) {
  std::uint64_t mask = 0;
  const int k = g.vertex_count();
  if (pair_count(k) > 64) {
    throw Error(ErrorCode::kGuardExceeded, "edge mask needs k <= 11");
  }
  for (const Edge& e : g.edges()) {
    mask |= std::uint64_t{1} << pair_index(k, e.u, e.v);
  }
  return mask;
}

CoprimalityGraph graph_from_edge_mask(int k, std::uint64_t mask) {
  CoprimalityGraph g(k);
  const int pairs = pair_count(k);
  if (pairs < 64 && (mask >> pairs) != 0) {
    throw Error(ErrorCode::kOutOfRange, "edge mask has bits beyond K_k");
  }
  for (std::uint64_t m = mask; m != 0; m &= m - 1) {
    Edge e = pair_at(k, std::countr_zero(m));
    g.add_edge(e.u, e.v);
  }
  return g;
}

EdgeSubsetEnumerator::EdgeSubsetEnumerator(int k, int j)
    : k_(k), j_(j), pairs_(pair_count(k)) {
  if (k < 2 || k > kMaxEnumerationVertices) {
    throw Error(ErrorCode::kOutOfRange,
                "edge-subset enumeration needs 2 <= k <= " +
                    std::to_string(kMaxEnumerationVertices));
  }
  if (j < 0 || j > pairs_) {
    throw Error(ErrorCode::kOutOfRange,
                "edge count j = " + std::to_string(j) + " outside 0.." +
                    std::to_string(pairs_));
  }
  reset();
}

void EdgeSubsetEnumerator::reset() {
  chosen_.resize(static_cast<std::size_t>(j_));
  std::iota(chosen_.begin(), chosen_.end(), 0);
  started_ = false;
  done_ = false;
}

std::optional<std::uint64_t> EdgeSubsetEnumerator::next_mask() {
  if (done_) return std::nullopt;
  if (started_) {
    int i = j_ - 1;
    while (i >= 0 &&
           chosen_[static_cast<std::size_t>(i)] == pairs_ - j_ + i) {
      --i;
    }
    if (i < 0) {
      done_ = true;
      return std::nullopt;
    }
    ++chosen_[static_cast<std::size_t>(i)];
    for (int t = i + 1; t < j_; ++t) {
      chosen_[static_cast<std::size_t>(t)] =
          chosen_[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
  started_ = true;
  std::uint64_t mask = 0;
  for (int e : chosen_) mask |= std::uint64_t{1} << e;
  return mask;
}

std::optional<CoprimalityGraph> EdgeSubsetEnumerator::next() {
  auto mask = next_mask();
  if (!mask) return std::nullopt;
  return graph_from_edge_mask(k_, *mask);
}

std::uint64_t EdgeSubsetEnumerator::total() const {
  return binomial(pairs_, j_);
}

}  // namespace coprimality
