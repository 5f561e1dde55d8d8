// Copyright 2026 The rqaoa-maxcut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Experiment harness: instance sweeps over edge probability, the three
// solvers side by side, and CSV output.
//
// Config files are flat `key = value` text; list-valued keys are repeated.
// '#' starts a comment line. Recognized keys:
//
//   n, m                 part sizes (default 16, 16)
//   p                    edge probability, repeat for a sweep
//   instances            instances per p (default 10)
//   weight_mean          Gaussian mean (default 50)
//   weight_stddev        Gaussian standard deviation (default 5)
//   integer_weights      1 rounds weights to integers (default 1)
//   algorithm            qaoa | rqaoa | rqaoa_star | brute, repeatable
//   n_c                  recursion stop size (default 10)
//   policy               max_abs | max_signed (default max_abs)
//   seed                 master seed (default 0)
//   output               CSV path (CLI may override)
//   record_timing        1 fills wall_ms, 0 writes 0 so output is reproducible
//   qaoa_line_samples    gamma samples for the QAOA baseline (default 20)
//   qaoa_normalize_gamma 1 searches gamma in [0, pi / max|w|], 0 in [0, pi] (default 1)
//   grid_beta, grid_gamma  RQAOA grid size (default 20 x 20)
//   refine_max_iters, refine_tol, refine_learn_rate, fd_step

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rqaoa/analytic.hpp"
#include "rqaoa/bounds.hpp"
#include "rqaoa/edge_list.hpp"
#include "rqaoa/generators.hpp"
#include "rqaoa/optim.hpp"
#include "rqaoa/oracle.hpp"
#include "rqaoa/rqaoa.hpp"

namespace rqaoa::bench {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline const std::vector<std::string>& known_algorithms() {
  static const std::vector<std::string> names{"qaoa", "rqaoa", "rqaoa_star", "brute"};
  return names;
}

struct ExperimentConfig {
  int n = 16;
  int m = 16;
  std::vector<double> p_values;
  int instances = 10;
  WeightDistribution weights;
  std::vector<std::string> algorithms;
  int n_c = 10;
  SelectionPolicy policy = SelectionPolicy::max_abs;
  std::uint64_t seed = 0;
  std::optional<std::string> output;
  bool record_timing = false;
  int qaoa_line_samples = 20;
  bool qaoa_normalize_gamma = true;
  int grid_beta = 20;
  int grid_gamma = 20;
  RefineSettings refine;

  /// Throws ConfigError for invalid values and OversizeError for exhaustive
  /// requests beyond the brute-force limit.
  void validate() const {
    if (n < 1 || m < 1) throw ConfigError("part sizes must be at least 1");
    if (instances < 0) throw ConfigError("instances must be nonnegative");
    for (double p : p_values)
      if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("p must lie in [0, 1]");
    if (weights.stddev < 0) throw ConfigError("weight_stddev must be nonnegative");
    if (weights.mean <= 0 && weights.stddev == 0)
      throw ConfigError("weight distribution must allow positive weights");
    if (algorithms.empty()) throw ConfigError("at least one algorithm is required");
    for (const auto& a : algorithms)
      if (std::find(known_algorithms().begin(), known_algorithms().end(), a) ==
          known_algorithms().end())
        throw ConfigError("unknown algorithm '" + a + "'");
    if (n_c < 1) throw ConfigError("n_c must be at least 1");
    if (qaoa_line_samples < 2 || grid_beta < 2 || grid_gamma < 2)
      throw ConfigError("search grids need at least 2 points per axis");
    if (!(refine.tol > 0) || !(refine.learn_rate > 0) || !(refine.fd_step > 0) ||
        refine.max_iters < 0)
      throw ConfigError("refinement settings must be positive");
    if (n_c > kMaxBruteForceVertices)
      throw OversizeError("n_c = " + std::to_string(n_c) + " exceeds the brute-force limit");
    const bool brute = std::find(algorithms.begin(), algorithms.end(), "brute") != algorithms.end();
    if (brute && n + m > kMaxBruteForceVertices)
      throw OversizeError("brute algorithm requested on " + std::to_string(n + m) + " vertices");
  }

  RqaoaConfig rqaoa_config(Variant variant) const {
    RqaoaConfig c;
    c.variant = variant;
    c.n_c = n_c;
    c.selection = policy;
    for (auto* s : {&c.original, &c.modified}) {
      s->grid_beta = grid_beta;
      s->grid_gamma = grid_gamma;
      s->refine_settings = refine;
      s->refine_settings.freeze_beta = false;
    }
    return c;
  }

  QaoaSettings qaoa_settings() const {
    QaoaSettings q;
    q.line_samples = qaoa_line_samples;
    q.normalize_gamma = qaoa_normalize_gamma;
    q.refine_settings = refine;
    q.refine_settings.freeze_beta = true;
    return q;
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_value(std::string_view key, std::string_view text, int line) {
  auto v = rqaoa::detail::parse_number<T>(text);
  if (!v)
    throw ConfigError("line " + std::to_string(line) + ": bad value '" + std::string(text) +
                      "' for " + std::string(key));
  return *v;
}

}  // namespace detail

inline ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig c;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = detail::trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    const auto key = detail::trim(line.substr(0, eq));
    const auto value = detail::trim(line.substr(eq + 1));
    using detail::parse_value;

    if (key == "n") c.n = parse_value<int>(key, value, line_no);
    else if (key == "m") c.m = parse_value<int>(key, value, line_no);
    else if (key == "p") c.p_values.push_back(parse_value<double>(key, value, line_no));
    else if (key == "instances") c.instances = parse_value<int>(key, value, line_no);
    else if (key == "weight_mean") c.weights.mean = parse_value<double>(key, value, line_no);
    else if (key == "weight_stddev") c.weights.stddev = parse_value<double>(key, value, line_no);
    else if (key == "integer_weights") c.weights.integer = parse_value<int>(key, value, line_no) != 0;
    else if (key == "algorithm") c.algorithms.emplace_back(value);
    else if (key == "n_c") c.n_c = parse_value<int>(key, value, line_no);
    else if (key == "policy") {
      auto p = parse_policy(value);
      if (!p) throw ConfigError("line " + std::to_string(line_no) + ": unknown policy");
      c.policy = *p;
    } else if (key == "seed") c.seed = parse_value<std::uint64_t>(key, value, line_no);
    else if (key == "output") c.output = std::string(value);
    else if (key == "record_timing") c.record_timing = parse_value<int>(key, value, line_no) != 0;
    else if (key == "qaoa_line_samples") c.qaoa_line_samples = parse_value<int>(key, value, line_no);
    else if (key == "qaoa_normalize_gamma")
      c.qaoa_normalize_gamma = parse_value<int>(key, value, line_no) != 0;
    else if (key == "grid_beta") c.grid_beta = parse_value<int>(key, value, line_no);
    else if (key == "grid_gamma") c.grid_gamma = parse_value<int>(key, value, line_no);
    else if (key == "refine_max_iters") c.refine.max_iters = parse_value<int>(key, value, line_no);
    else if (key == "refine_tol") c.refine.tol = parse_value<double>(key, value, line_no);
    else if (key == "refine_learn_rate") c.refine.learn_rate = parse_value<double>(key, value, line_no);
    else if (key == "fd_step") c.refine.fd_step = parse_value<double>(key, value, line_no);
    else
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
  }
  return c;
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

struct RunRecord {
  int instance_id = 0;
  int n = 0;
  int m = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::string algorithm;
  double achieved = 0.0;
  double optimum = 0.0;
  double ratio = 0.0;
  int rounds = 0;
  double wall_ms = 0.0;
  std::string policy;
};

inline constexpr std::string_view kCsvHeader =
    "instance_id,n,m,p,seed,algorithm,achieved,optimum,ratio,rounds,wall_ms,policy";

inline std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline std::string to_csv(std::span<const RunRecord> records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    out += std::to_string(r.instance_id) + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) +
           ',' + format_number(r.p) + ',' + std::to_string(r.seed) + ',' + r.algorithm + ',' +
           format_number(r.achieved) + ',' + format_number(r.optimum) + ',' +
           format_number(r.ratio) + ',' + std::to_string(r.rounds) + ',' +
           format_number(r.wall_ms) + ',' + r.policy + '\n';
  }
  return out;
}

/// Seed of instance `instance` at sweep position `p_index`.
inline std::uint64_t instance_seed(std::uint64_t master, std::size_t p_index, int instance) {
  return derive_seed(master, p_index, static_cast<std::uint64_t>(instance));
}

/// Runs one named algorithm on one instance and fills the result columns.
inline RunRecord run_algorithm(const ExperimentConfig& config, const ParitySignedGraph& instance,
                               const std::string& algorithm, double optimum) {
  RunRecord r;
  r.algorithm = algorithm;
  r.optimum = optimum;
  const auto& g = instance.graph();
  const auto start = std::chrono::steady_clock::now();
  if (algorithm == "qaoa") {
    r.achieved = qaoa_only(g, config.qaoa_settings()).expectation;
    r.policy = "fixed_beta";
  } else if (algorithm == "rqaoa" || algorithm == "rqaoa_star") {
    const auto variant = algorithm == "rqaoa" ? Variant::original : Variant::modified;
    const auto res = run_rqaoa(g, config.rqaoa_config(variant));
    r.achieved = res.cut_value;
    r.rounds = static_cast<int>(res.rounds.size());
    r.policy = std::string(to_string(config.policy));
  } else if (algorithm == "brute") {
    r.achieved = brute_force_maxcut(g).value;
    r.policy = "exact";
  } else {
    throw ConfigError("unknown algorithm '" + algorithm + "'");
  }
  const auto stop = std::chrono::steady_clock::now();
  if (config.record_timing)
    r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  // An edgeless instance has optimum 0; every assignment is optimal there.
  r.ratio = optimum > 0 ? r.achieved / optimum : 1.0;
  return r;
}

/// Full sweep; rows sorted by (p, instance_id, algorithm).
inline std::vector<RunRecord> run_sweep(const ExperimentConfig& config) {
  config.validate();
  std::vector<RunRecord> rows;
  for (std::size_t pi = 0; pi < config.p_values.size(); ++pi) {
    const double p = config.p_values[pi];
    for (int inst = 0; inst < config.instances; ++inst) {
      const auto seed = instance_seed(config.seed, pi, inst);
      const auto instance = random_weighted_bipartite(config.n, config.m, p, config.weights, seed);
      const double optimum = parity_signed_optimum(instance).value;
      for (const auto& algo : config.algorithms) {
        auto r = run_algorithm(config, instance, algo, optimum);
        r.instance_id = inst;
        r.n = config.n;
        r.m = config.m;
        r.p = p;
        r.seed = seed;
        rows.push_back(std::move(r));
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const RunRecord& a, const RunRecord& b) {
    if (a.p != b.p) return a.p < b.p;
    if (a.instance_id != b.instance_id) return a.instance_id < b.instance_id;
    return a.algorithm < b.algorithm;
  });
  return rows;
}

/// Optimized level-1 ratio F_1* / |E| for a unit-weight bipartite graph: beta
/// fixed at pi/8 (optimal for triangle-free graphs), gamma line search over
/// [0, pi/2] followed by refinement.
inline double optimized_alpha1_bipartite(const WeightedGraph& g, int samples) {
  rqaoa::detail::require_unit_weights(g);
  if (g.n_edges() == 0) throw std::invalid_argument("graph has no edges");
  const Qaoa1Expectation model(g);
  CachedCutExpectation objective(model);
  QaoaSettings q;
  q.gamma_hi = std::numbers::pi / 2;
  q.line_samples = samples;
  auto line = line_search_gamma(objective, q.beta, q.gamma_lo, q.gamma_hi, q.line_samples);
  RefineSettings rs;
  rs.freeze_beta = true;
  rs.tol = 1e-15;
  rs.max_iters = 500;
  const ParamDomain box{q.beta - 1.0, q.beta + 1.0, q.gamma_lo, q.gamma_hi, false};
  auto refined = gradient_refine(objective, line.best, rs, &box);
  return refined.best_value / static_cast<double>(g.n_edges());
}

struct BoundsRow {
  int n = 0;
  int m = 0;
  double alpha1 = 0.0;
  double degree_bound = 0.0;
  double avg_degree_bound = 0.0;
  double corollary_bound = 0.0;
};

inline constexpr std::string_view kBoundsHeader =
    "n,m,alpha1,degree_bound,avg_degree_bound,corollary_bound";

inline BoundsRow bounds_row(int n, int m, int samples) {
  if (n < 2 || m < 2) throw std::invalid_argument("bounds table needs n, m >= 2");
  const auto g = complete_bipartite(n, m);
  const auto b = bipartite_bounds(g.graph());
  return {n, m, optimized_alpha1_bipartite(g.graph(), samples), b.degree_bound,
          b.avg_degree_bound, corollary1_bound(n, m)};
}

inline std::string to_csv(std::span<const BoundsRow> rows) {
  std::string out(kBoundsHeader);
  out += '\n';
  for (const auto& r : rows)
    out += std::to_string(r.n) + ',' + std::to_string(r.m) + ',' + format_number(r.alpha1) + ',' +
           format_number(r.degree_bound) + ',' + format_number(r.avg_degree_bound) + ',' +
           format_number(r.corollary_bound) + '\n';
  return out;
}

}  // namespace rqaoa::bench
