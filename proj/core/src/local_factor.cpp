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

#include "coprimality/local_factor.hpp"

#include <bit>
#include <numeric>
#include <sstream>

#include "coprimality/error.hpp"

namespace coprimality {

namespace {

std::int64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::int64_t result = 1;
  for (int i = 1; i <= r; ++i) result = result * (n - r + i) / i;
  return result;
}

std::int64_t sign_of_size(int size) { return (size % 2 == 0) ? 1 : -1; }

void accumulate_edge_subsets(const std::vector<Edge>& edges, std::size_t next,
                             std::uint32_t support, int chosen,
                             MultiLocalFactor& out) {
  if (next == edges.size()) {
    out.add(VertexSubset::from_bits(support), sign_of_size(chosen));
    return;
  }
  accumulate_edge_subsets(edges, next + 1, support, chosen, out);
  const Edge& e = edges[next];
  std::uint32_t with = support | (std::uint32_t{1} << (e.u - 1)) |
                       (std::uint32_t{1} << (e.v - 1));
  accumulate_edge_subsets(edges, next + 1, with, chosen + 1, out);
}

int moebius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

bool satisfies(const CoprimalityGraph& g, std::span<const std::uint64_t> n) {
  for (const Edge& e : g.edges()) {
    if (std::gcd(n[static_cast<std::size_t>(e.u - 1)],
                 n[static_cast<std::size_t>(e.v - 1)]) != 1) {
      return false;
    }
  }
  return true;
}

struct SignedDivisor {
  std::uint64_t d;
  int mu;
};

void oracle_sum(const CoprimalityGraph& g, std::span<const std::uint64_t> n,
                const std::vector<std::vector<SignedDivisor>>& divisors,
                std::size_t index, int sign,
                std::vector<std::uint64_t>& quotient, std::int64_t& total) {
  if (index == n.size()) {
    if (satisfies(g, quotient)) total += sign;
    return;
  }
  for (const SignedDivisor& sd : divisors[index]) {
    quotient[index] = n[index] / sd.d;
    oracle_sum(g, n, divisors, index + 1, sign * sd.mu, quotient, total);
  }
}

}  // namespace

UniLocalFactor::UniLocalFactor(std::vector<std::int64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0);
}

int UniLocalFactor::degree() const {
  for (std::size_t m = coeffs_.size(); m-- > 0;) {
    if (coeffs_[m] != 0) return static_cast<int>(m);
  }
  return 0;
}

bool UniLocalFactor::is_constant_one() const {
  return degree() == 0 && coeffs_[0] == 1;
}

long double UniLocalFactor::evaluate(long double x) const {
  long double acc = 0.0L;
  for (std::size_t m = coeffs_.size(); m-- > 0;) {
    acc = acc * x + static_cast<long double>(coeffs_[m]);
  }
  return acc;
}

long double UniLocalFactor::evaluate_minus_one(long double x) const {
  long double acc = 0.0L;
  for (std::size_t m = coeffs_.size(); m-- > 1;) {
    acc = acc * x + static_cast<long double>(coeffs_[m]);
  }
  return acc * x + static_cast<long double>(coeffs_[0] - 1);
}

bool UniLocalFactor::same_polynomial(const UniLocalFactor& other) const {
  const std::size_t n = std::max(coeffs_.size(), other.coeffs_.size());
  for (std::size_t m = 0; m < n; ++m) {
    if ((*this)[m] != other[m]) return false;
  }
  return true;
}

std::int64_t MultiLocalFactor::coefficient(VertexSubset s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? 0 : it->second;
}

void MultiLocalFactor::add(VertexSubset s, std::int64_t delta) {
  if (delta == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, 0);
  it->second += delta;
  if (it->second == 0) terms_.erase(it);
}

UniLocalFactor factor_by_independent_sets(const CoprimalityGraph& g,
                                          VertexSubset restrict_to) {
  if (restrict_to != g.vertices() && restrict_to != non_isolated(g)) {
    throw Error(ErrorCode::kInvalidRestriction,
                "restriction must be all vertices or the non-isolated set");
  }
  const int k = g.vertex_count();
  const int n = restrict_to.size();
  const auto counts = independent_set_counts(g, restrict_to);
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(k) + 1, 0);
  for (int m = 0; m <= n; ++m) {
    const auto im = static_cast<std::int64_t>(counts[static_cast<std::size_t>(m)]);
    if (im == 0) continue;
    // i_m x^m (1-x)^{n-m}
    for (int t = 0; t <= n - m; ++t) {
      coeffs[static_cast<std::size_t>(m + t)] +=
          im * sign_of_size(t) * binomial(n - m, t);
    }
  }
  return UniLocalFactor(std::move(coeffs));
}

UniLocalFactor factor_by_independent_sets(const CoprimalityGraph& g) {
  return factor_by_independent_sets(g, g.vertices());
}

MultiLocalFactor factor_by_edge_subsets(const CoprimalityGraph& g) {
  if (g.edge_count() > kMaxEdgeSubsetEdges) {
    throw Error(ErrorCode::kGuardExceeded,
                std::to_string(g.edge_count()) + " edges exceed the " +
                    std::to_string(kMaxEdgeSubsetEdges) +
                    "-edge enumeration guard");
  }
  MultiLocalFactor out(g.vertex_count());
  accumulate_edge_subsets(g.edges(), 0, 0, 0, out);
  return out;
}

MultiLocalFactor factor_by_vertex_cover(const CoprimalityGraph& g,
                                        VertexSubset cover) {
  if (!cover.is_subset_of(g.vertices())) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "cover {" + format_members(cover) + "} outside vertex set");
  }
  if (!is_vertex_cover(g, cover)) {
    throw Error(ErrorCode::kNotACover,
                "{" + format_members(cover) + "} misses an edge");
  }
  MultiLocalFactor out(g.vertex_count());
  const std::uint32_t j = cover.bits();
  // Every submask of J, including the empty one.
  std::uint32_t l = j;
  while (true) {
    const VertexSubset chosen = VertexSubset::from_bits(l);
    if (is_independent(g, chosen)) {
      const VertexSubset factors =
          (cover - chosen) | (neighborhood(g, chosen) - cover);
      const std::uint32_t t = factors.bits();
      std::uint32_t u = t;
      while (true) {
        out.add(VertexSubset::from_bits(l | u),
                sign_of_size(std::popcount(u)));
        if (u == 0) break;
        u = (u - 1) & t;
      }
    }
    if (l == 0) break;
    l = (l - 1) & j;
  }
  return out;
}

UniLocalFactor collapse(const MultiLocalFactor& m) {
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(m.k()) + 1, 0);
  for (const auto& [s, c] : m.terms()) {
    coeffs[static_cast<std::size_t>(s.size())] += c;
  }
  return UniLocalFactor(std::move(coeffs));
}

UniLocalFactor pairwise_coprime_factor(int k) {
  if (k < 2) {
    throw Error(ErrorCode::kTooFewVertices,
                "pairwise coprimality needs k >= 2, got " + std::to_string(k));
  }
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(k) + 1, 0);
  coeffs[0] = 1;
  for (int j = 2; j <= k; ++j) {
    coeffs[static_cast<std::size_t>(j)] =
        -sign_of_size(j) * (j - 1) * binomial(k, j);
  }
  return UniLocalFactor(std::move(coeffs));
}

std::int64_t mobius_delta_oracle(const CoprimalityGraph& g,
                                 std::span<const std::uint64_t> n) {
  if (n.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw Error(ErrorCode::kMalformedInput,
                "oracle needs exactly k = " +
                    std::to_string(g.vertex_count()) + " arguments");
  }
  std::vector<std::vector<SignedDivisor>> divisors(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] < 1 || n[i] > kMaxOracleArgument) {
      throw Error(ErrorCode::kGuardExceeded,
                  "oracle arguments must lie in 1.." +
                      std::to_string(kMaxOracleArgument));
    }
    for (std::uint64_t d = 1; d <= n[i]; ++d) {
      if (n[i] % d != 0) continue;
      int mu = moebius(d);
      if (mu != 0) divisors[i].push_back({d, mu});
    }
  }
  std::vector<std::uint64_t> quotient(n.size(), 1);
  std::int64_t total = 0;
  oracle_sum(g, n, divisors, 0, 1, quotient, total);
  return total;
}

LocalFactorCheck check_local_factor(const CoprimalityGraph& g,
                                    VertexSubset cover) {
  LocalFactorCheck check{
      .by_independent_sets = factor_by_independent_sets(g, g.vertices()),
      .by_independent_sets_on_support =
          factor_by_independent_sets(g, non_isolated(g)),
      .by_vertex_cover = factor_by_vertex_cover(g, cover),
      .by_edge_subsets = MultiLocalFactor(g.vertex_count()),
      .cover = cover,
  };
  check.agree =
      check.by_independent_sets == check.by_independent_sets_on_support &&
      collapse(check.by_vertex_cover) == check.by_independent_sets;
  if (g.edge_count() <= kMaxEdgeSubsetEdges) {
    check.by_edge_subsets = factor_by_edge_subsets(g);
    check.edge_subsets_computed = true;
    check.agree = check.agree && check.by_edge_subsets == check.by_vertex_cover;
  }
  return check;
}

LocalFactorCheck check_local_factor(const CoprimalityGraph& g) {
  return check_local_factor(g, min_vertex_cover(g));
}

UniLocalFactor local_factor(const CoprimalityGraph& g) {
  LocalFactorCheck check = check_local_factor(g);
  if (!check.agree) {
    // Would mean a bug in one of the constructions.
    throw Error(ErrorCode::kMalformedInput,
                "local-factor constructions disagree for graph:\n" +
                    format_graph(g));
  }
  return check.by_independent_sets;
}

std::string format_polynomial(const UniLocalFactor& q) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t m = 0; m < q.size(); ++m) {
    std::int64_t c = q[m];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::int64_t a = c < 0 ? -c : c;
    if (m == 0) {
      out << a;
    } else {
      out << a << "/p";
      if (m > 1) out << '^' << m;
    }
    first = false;
  }
  if (first) out << '0';
  return out.str();
}

}  // namespace coprimality
