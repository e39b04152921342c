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

#include "cli.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "coprimality/density.hpp"
#include "coprimality/empirical.hpp"
#include "coprimality/error.hpp"
#include "coprimality/euler_product.hpp"
#include "coprimality/json_io.hpp"
#include "coprimality/local_factor.hpp"
#include "coprimality/primes.hpp"

namespace coprimality::cli {
namespace {

using nlohmann::json;

enum class Format { kHuman, kJson, kCsv };

struct Config {
  std::uint64_t prime_limit = kDefaultPrimeLimit;
  Format format = Format::kHuman;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

std::optional<std::uint64_t> parse_u64(std::string_view text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::string short_decimal(long double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3Lg", value);
  return buffer;
}

std::string coefficient_list(const UniLocalFactor& q, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(q[i]);
  }
  return s;
}

std::string monomial(const VertexSubset& s) {
  if (s.empty()) return "1";
  std::string m;
  for (int v : s.members()) {
    if (!m.empty()) m += '*';
    m += "x" + std::to_string(v);
  }
  return m;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string q = "\"";
  for (char c : field) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

std::string optional_int(const std::optional<int>& r) {
  return r ? std::to_string(*r) : std::string();
}

// ---- density and tuples ---------------------------------------------------

void print_report(const DensityReport& report, const Config& config,
                  std::ostream& out) {
  switch (config.format) {
    case Format::kJson: {
      json j = to_json(report);
      if (report.polynomial) j["polynomial"] = to_json(*report.polynomial);
      out << j.dump(2) << '\n';
      return;
    }
    case Format::kCsv:
      out << "label,k,r,value,error_bound,prime_limit,num_classes,polynomial\n"
          << to_string(report.label) << ',' << report.k << ','
          << optional_int(report.r) << ',' << format_decimal(report.value)
          << ',' << format_decimal(report.error_bound) << ','
          << report.prime_limit << ',' << report.num_classes << ','
          << (report.polynomial ? coefficient_list(*report.polynomial, " ")
                                : std::string())
          << '\n';
      return;
    case Format::kHuman:
      break;
  }
  out << to_string(report.label) << "  k=" << report.k;
  if (report.r) out << "  r=" << *report.r;
  out << '\n'
      << "  value        " << format_decimal(report.value) << '\n'
      << "  error bound  " << short_decimal(report.error_bound) << '\n'
      << "  prime limit  " << report.prime_limit << '\n'
      << "  products     " << report.terms.size() << " (" << report.num_classes
      << " classes)\n"
      << "  formula      " << report.formula << '\n';
  if (report.polynomial) {
    out << "  polynomial   " << format_polynomial(*report.polynomial) << "  ["
        << coefficient_list(*report.polynomial, ", ") << "]\n";
  }
  if (report.cover) {
    out << "  cover        {" << format_members(*report.cover) << "}\n";
  }
}

int cmd_density(const std::string& graph_spec, const Config& config,
                std::ostream& out) {
  DensityEngine engine(config.prime_limit, {config.threads});
  print_report(engine.density_A(load_graph(graph_spec)), config, out);
  return kExitOk;
}

int cmd_tuples(int k, std::optional<int> r, const std::string& mode,
               const Config& config, std::ostream& out) {
  DensityEngine engine(config.prime_limit, {config.threads});
  const bool needs_r = mode == "exact" || mode == "atleast";
  if (needs_r && !r) {
    throw Error(ErrorCode::kMalformedInput, "--mode " + mode + " needs --r");
  }
  if (!needs_r && r) {
    throw Error(ErrorCode::kMalformedInput,
                "--r is not used with --mode " + mode);
  }
  DensityReport report;
  if (mode == "exact") {
    report = engine.density_exact_r(k, *r);
  } else if (mode == "atleast") {
    report = engine.density_at_least_r(k, *r);
  } else if (mode == "noncoprime") {
    report = engine.density_pairwise_noncoprime(k);
  } else {
    report = engine.density_pairwise_coprime(k);
  }
  print_report(report, config, out);
  return kExitOk;
}

// ---- local-factor ---------------------------------------------------------

int cmd_local_factor(const std::string& graph_spec, const std::string& cover,
                     const Config& config, std::ostream& out) {
  const CoprimalityGraph g = load_graph(graph_spec);
  const LocalFactorCheck check =
      cover == "auto" ? check_local_factor(g)
      : cover == "all"
          ? check_local_factor(g, VertexSubset::all(g.vertex_count()))
          : check_local_factor(g, parse_members(cover));
  const UniLocalFactor by_cover = collapse(check.by_vertex_cover);
  std::optional<UniLocalFactor> by_edges;
  if (check.edge_subsets_computed) by_edges = collapse(check.by_edge_subsets);

  switch (config.format) {
    case Format::kJson: {
      json j{
          {"k", g.vertex_count()},
          {"edges", g.edge_count()},
          {"cover", format_members(check.cover)},
          {"independent_sets", to_json(check.by_independent_sets)},
          {"vertex_cover",
           json{{"multivariate", to_json(check.by_vertex_cover)},
                {"univariate", to_json(by_cover)}}},
          {"edge_subsets",
           by_edges ? json{{"multivariate", to_json(check.by_edge_subsets)},
                           {"univariate", to_json(*by_edges)}}
                    : json(nullptr)},
          {"agree", check.agree},
      };
      out << j.dump(2) << '\n';
      break;
    }
    case Format::kCsv: {
      out << "formula,term,coefficient\n";
      auto uni = [&](const char* name, const UniLocalFactor& q) {
        for (std::size_t d = 0; d < q.size(); ++d) {
          out << name << ",x^" << d << ',' << q[d] << '\n';
        }
      };
      auto multi = [&](const char* name, const MultiLocalFactor& m) {
        for (const auto& [s, c] : m.terms()) {
          out << name << ',' << csv_quote(monomial(s)) << ',' << c << '\n';
        }
      };
      uni("independent_sets", check.by_independent_sets);
      multi("vertex_cover", check.by_vertex_cover);
      if (by_edges) multi("edge_subsets", check.by_edge_subsets);
      break;
    }
    case Format::kHuman: {
      out << "graph        k=" << g.vertex_count() << ", " << g.edge_count()
          << " edges\n"
          << "cover        {" << format_members(check.cover) << "}\n"
          << "independent sets\n  " << format_polynomial(check.by_independent_sets)
          << "  [" << coefficient_list(check.by_independent_sets, ", ")
          << "]\n";
      auto multi = [&](const char* name, const MultiLocalFactor& m,
                       const UniLocalFactor& q) {
        out << name << " (" << m.terms().size() << " terms)\n";
        for (const auto& [s, c] : m.terms()) {
          out << "  " << (c > 0 ? "+" : "") << c << "  " << monomial(s) << '\n';
        }
        out << "  collapsed  " << format_polynomial(q) << "  ["
            << coefficient_list(q, ", ") << "]\n";
      };
      multi("vertex cover", check.by_vertex_cover, by_cover);
      if (by_edges) {
        multi("edge subsets", check.by_edge_subsets, *by_edges);
      } else {
        out << "edge subsets\n  skipped (" << g.edge_count() << " edges)\n";
      }
      out << "agreement    " << (check.agree ? "yes" : "NO") << '\n';
      break;
    }
  }
  return check.agree ? kExitOk : kExitError;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string graph;
  std::optional<int> k;
  std::optional<int> r;
  bool at_least = false;
  bool exact = false;
  bool mc = false;
  std::optional<std::uint64_t> x;
  std::uint64_t box = 1'000'000;
  std::uint64_t samples = 1'000'000;
};

int cmd_verify(const VerifyArgs& args, const Config& config, std::ostream& out) {
  if (args.graph.empty() == !args.k.has_value()) {
    throw Error(ErrorCode::kMalformedInput, "give either --graph or --k/--r");
  }
  if (args.exact == args.mc) {
    throw Error(ErrorCode::kMalformedInput, "give exactly one of --exact, --mc");
  }
  if (args.exact && !args.x) {
    throw Error(ErrorCode::kMalformedInput, "--exact needs --x");
  }
  DensityEngine engine(config.prime_limit, {config.threads});
  const CountOptions count_options{config.threads};

  std::optional<CoprimalityGraph> graph;
  PairCountCondition pairs;
  DensityReport density;
  if (!args.graph.empty()) {
    graph = load_graph(args.graph);
    density = engine.density_A(*graph);
  } else {
    if (!args.r) throw Error(ErrorCode::kMalformedInput, "--k needs --r");
    pairs = {*args.k, *args.r,
             args.at_least ? PairCountMode::kAtLeast : PairCountMode::kExactly};
    density = args.at_least ? engine.density_at_least_r(*args.k, *args.r)
                            : engine.density_exact_r(*args.k, *args.r);
  }

  CountResult count;
  std::optional<long double> remainder;
  if (args.exact) {
    if (graph) {
      const auto rows = convergence_diagnostic(*graph, {*args.x},
                                               density.value, count_options);
      count = count_delta_exact(*graph, *args.x, count_options);
      remainder = rows.front().normalized_remainder;
    } else {
      count = count_beta_exact(pairs.k, pairs.r, pairs.mode, *args.x,
                               count_options);
    }
  } else {
    const TupleCondition condition =
        graph ? TupleCondition{*graph} : TupleCondition{pairs};
    count = monte_carlo(condition, args.box, args.samples, config.seed,
                        count_options);
  }
  const long double difference = std::fabs(count.estimate - density.value);
  std::optional<bool> bracketed;
  if (args.mc) {
    bracketed = difference <= count.ci_halfwidth + density.error_bound;
  }

  switch (config.format) {
    case Format::kJson: {
      json j{
          {"count", to_json(count)},
          {"density", to_json(density)},
          {"difference", format_decimal(difference)},
          {"normalized_remainder",
           remainder ? json(format_decimal(*remainder)) : json(nullptr)},
          {"bracketed", bracketed ? json(*bracketed) : json(nullptr)},
      };
      out << j.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      out << "mode,x,samples,count,estimate,ci,seed,label,density,error_bound,"
             "difference,normalized_remainder,bracketed\n"
          << (args.mc ? "mc" : "exact") << ',' << count.x << ','
          << (count.samples ? std::to_string(*count.samples) : "") << ','
          << count.count << ',' << format_decimal(count.estimate) << ','
          << (args.mc ? format_decimal(count.ci_halfwidth) : "") << ','
          << (count.seed ? std::to_string(*count.seed) : "") << ','
          << to_string(density.label) << ',' << format_decimal(density.value)
          << ',' << format_decimal(density.error_bound) << ','
          << format_decimal(difference) << ','
          << (remainder ? format_decimal(*remainder) : "") << ','
          << (bracketed ? (*bracketed ? "true" : "false") : "") << '\n';
      break;
    case Format::kHuman:
      if (args.mc) {
        out << "monte carlo  X=" << count.x << "  samples=" << *count.samples
            << "  seed=" << *count.seed << '\n'
            << "  hits         " << count.count << '\n'
            << "  estimate     " << format_decimal(count.estimate) << " +/- "
            << short_decimal(count.ci_halfwidth) << '\n';
      } else {
        out << "exact count  x=" << count.x << '\n'
            << "  count        " << count.count << '\n'
            << "  estimate     " << format_decimal(count.estimate) << '\n';
      }
      out << "  density      " << format_decimal(density.value) << " +/- "
          << short_decimal(density.error_bound) << "  ("
          << to_string(density.label) << ")\n"
          << "  difference   " << short_decimal(difference) << '\n';
      if (remainder) {
        out << "  normalized remainder  " << short_decimal(*remainder) << '\n';
      }
      if (bracketed) {
        out << "  bracketed    " << (*bracketed ? "yes" : "NO") << '\n';
      }
      break;
  }
  return bracketed.value_or(true) ? kExitOk : kExitNotBracketed;
}

// ---- classes --------------------------------------------------------------

std::string edge_list(const CoprimalityGraph& g) {
  std::string s;
  for (const Edge& e : g.edges()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(e.u) + '-' + std::to_string(e.v);
  }
  return s;
}

int cmd_classes(int k, const Config& config, std::ostream& out) {
  const IsoClassTable table = build_iso_table(k);
  switch (config.format) {
    case Format::kJson:
      out << to_json(table).dump(2) << '\n';
      break;
    case Format::kCsv:
      out << "edges,multiplicity,polynomial,graph\n";
      for (const IsoClass& c : table.classes) {
        out << c.edge_count << ',' << c.multiplicity << ','
            << coefficient_list(c.factor, " ") << ','
            << edge_list(c.representative) << '\n';
      }
      break;
    case Format::kHuman: {
      std::uint64_t total = 0;
      for (const IsoClass& c : table.classes) total += c.multiplicity;
      out << "k=" << k << ": " << table.classes.size() << " classes, " << total
          << " labeled graphs\n";
      char line[256];
      std::snprintf(line, sizeof line, "%5s %12s  %-40s %s\n", "edges",
                    "multiplicity", "polynomial", "representative");
      out << line;
      for (const IsoClass& c : table.classes) {
        std::snprintf(line, sizeof line, "%5d %12llu  %-40s %s\n",
                      c.edge_count,
                      static_cast<unsigned long long>(c.multiplicity),
                      format_polynomial(c.factor).c_str(),
                      edge_list(c.representative).c_str());
        out << line;
      }
      break;
    }
  }
  return kExitOk;
}

std::optional<int> suffix_number(const std::string& spec,
                                 std::string_view prefix) {
  if (spec.size() <= prefix.size() || spec.compare(0, prefix.size(), prefix)) {
    return std::nullopt;
  }
  auto n = parse_u64(std::string_view(spec).substr(prefix.size()));
  if (!n || *n > static_cast<std::uint64_t>(kMaxVertices)) return std::nullopt;
  return static_cast<int>(*n);
}

}  // namespace

CoprimalityGraph load_graph(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) {
    std::ifstream in(spec);
    std::stringstream text;
    text << in.rdbuf();
    if (!in) throw Error(ErrorCode::kIo, "cannot read '" + spec + "'");
    return parse_graph(text.str());
  }
  if (spec == "example2") {
    return CoprimalityGraph(7, {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {4, 5}});
  }
  if (auto n = suffix_number(spec, "empty")) return empty_graph(*n);
  if (auto n = suffix_number(spec, "path")) return path_graph(*n);
  if (auto n = suffix_number(spec, "c")) return cycle_graph(*n);
  if (auto n = suffix_number(spec, "k")) return complete_graph(*n);
  throw Error(ErrorCode::kIo,
              "'" + spec + "' is neither a readable file nor a known graph name");
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Config config;
  if (const char* env = std::getenv(kPrimeLimitEnv); env && *env) {
    auto limit = parse_u64(env);
    if (!limit || *limit < kMinPrimeLimit || *limit > kMaxSieveLimit) {
      err << "error: " << kPrimeLimitEnv << "='" << env
          << "' is not a prime limit in " << kMinPrimeLimit << ".."
          << kMaxSieveLimit << '\n';
      return kExitUsage;
    }
    config.prime_limit = *limit;
  }

  CLI::App app{"Densities of integer tuples with pairwise coprimality "
               "constraints.",
               "coprimality"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  std::string threads = "auto";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--prime-limit", config.prime_limit,
                 std::string("Primes used in Euler products (env ") +
                     kPrimeLimitEnv + ")")
      ->check(CLI::Range(kMinPrimeLimit, kMaxSieveLimit))
      ->capture_default_str();
  app.add_option("--threads", threads, "Worker threads, or auto")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Monte Carlo seed")
      ->capture_default_str();

  std::string graph_spec;
  auto* density = app.add_subcommand("density", "Density A_G of one graph");
  density->add_option("--graph", graph_spec, "Graph file or built-in name")
      ->required();

  int k = 0;
  std::optional<int> r;
  std::string mode = "exact";
  auto* tuples = app.add_subcommand(
      "tuples", "Densities by number of coprime pairs");
  tuples->add_option("--k", k, "Tuple length")->required();
  tuples->add_option("--r", r, "Number of coprime pairs");
  tuples->add_option("--mode", mode)
      ->check(CLI::IsMember({"exact", "atleast", "noncoprime", "coprime"}))
      ->capture_default_str();

  std::string cover = "auto";
  auto* local = app.add_subcommand(
      "local-factor", "Per-prime factor by all three constructions");
  local->add_option("--graph", graph_spec, "Graph file or built-in name")
      ->required();
  local->add_option("--cover", cover, "auto, all, or a list such as 1,2,4")
      ->capture_default_str();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "Compare a density with exact or Monte Carlo counts");
  verify->add_option("--graph", verify_args.graph, "Graph file or built-in name");
  verify->add_option("--k", verify_args.k, "Tuple length");
  verify->add_option("--r", verify_args.r, "Number of coprime pairs");
  verify->add_flag("--atleast", verify_args.at_least,
                   "Count tuples with at least r coprime pairs");
  verify->add_flag("--exact", verify_args.exact, "Exact count over [1,x]^k");
  verify->add_flag("--mc", verify_args.mc, "Monte Carlo over [1,X]^k");
  verify->add_option("--x", verify_args.x, "Box bound for --exact");
  verify->add_option("--X", verify_args.box, "Box bound for --mc")
      ->capture_default_str();
  verify->add_option("--samples", verify_args.samples, "Samples for --mc")
      ->capture_default_str();

  int class_k = 0;
  auto* classes = app.add_subcommand(
      "classes", "Isomorphism classes of graphs on k vertices");
  classes->add_option("--k", class_k, "Number of vertices")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (threads == "auto") {
      config.threads = 0;
    } else {
      auto n = parse_u64(threads);
      if (!n || *n < 1 || *n > 1024) {
        throw CLI::ValidationError("--threads",
                                   "expected a positive integer or auto");
      }
      config.threads = static_cast<unsigned>(*n);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  config.format = format == "json"  ? Format::kJson
                  : format == "csv" ? Format::kCsv
                                    : Format::kHuman;

  try {
    if (*density) return cmd_density(graph_spec, config, out);
    if (*tuples) return cmd_tuples(k, r, mode, config, out);
    if (*local) return cmd_local_factor(graph_spec, cover, config, out);
    if (*verify) return cmd_verify(verify_args, config, out);
    if (*classes) return cmd_classes(class_k, config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace coprimality::cli
