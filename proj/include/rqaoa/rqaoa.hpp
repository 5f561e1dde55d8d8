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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rqaoa/analytic.hpp"
#include "rqaoa/graph.hpp"
#include "rqaoa/optim.hpp"
#include "rqaoa/oracle.hpp"

namespace rqaoa {

enum class Variant { original, modified };
enum class SelectionPolicy { max_abs, max_signed };

inline std::string_view to_string(Variant v) {
  return v == Variant::original ? "original" : "modified";
}
inline std::string_view to_string(SelectionPolicy p) {
  return p == SelectionPolicy::max_abs ? "max_abs" : "max_signed";
}
inline std::optional<SelectionPolicy> parse_policy(std::string_view s) {
  if (s == "max_abs") return SelectionPolicy::max_abs;
  if (s == "max_signed") return SelectionPolicy::max_signed;
  return std::nullopt;
}

struct OptimizerSettings {
  int grid_beta = 20;
  int grid_gamma = 20;
  bool refine = true;
  RefineSettings refine_settings;
};

struct RqaoaConfig {
  Variant variant = Variant::modified;
  int n_c = 10;
  SelectionPolicy selection = SelectionPolicy::max_abs;
  OptimizerSettings original;
  OptimizerSettings modified;
  /// Keep every intermediate graph (and its vertex origins) in the result.
  bool record_graphs = false;

  const OptimizerSettings& optimizer() const {
    return variant == Variant::original ? original : modified;
  }
};

/// x_eliminated = sign * x_anchor, in original vertex ids.
struct Constraint {
  Vertex eliminated = 0;
  Vertex anchor = 0;
  int sign = 1;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct EdgeCorrelation {
  EdgeKey edge;
  double value = 0.0;
};

/// M_e = <Z_u Z_v> for every edge at p, in lexicographic edge order.
inline std::vector<EdgeCorrelation> edge_correlations(const Qaoa1Expectation& model, ParamPoint p) {
  const auto m = model.correlations(p);
  const auto edges = model.graph().edges();
  std::vector<EdgeCorrelation> out(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) out[e] = {{edges[e].u, edges[e].v}, m[e]};
  return out;
}

inline std::vector<EdgeCorrelation> edge_correlations(const WeightedGraph& g, ParamPoint p) {
  return edge_correlations(Qaoa1Expectation(g), p);
}

/// argmax |M| (max_abs) or argmax M (max_signed); ties go to the smallest edge.
inline EdgeCorrelation select_edge(std::span<const EdgeCorrelation> correlations,
                                   SelectionPolicy policy) {
  if (correlations.empty()) throw std::invalid_argument("select_edge: no correlations");
  auto score = [policy](const EdgeCorrelation& c) {
    return policy == SelectionPolicy::max_abs ? std::abs(c.value) : c.value;
  };
  const EdgeCorrelation* best = &correlations.front();
  for (const auto& c : correlations) {
    const double sc = score(c), sb = score(*best);
    if (sc > sb || (sc == sb && c.edge < best->edge)) best = &c;
  }
  return *best;
}

struct RoundLog {
  int graph_size = 0;
  std::size_t n_edges = 0;
  EdgeKey chosen;  // ids in the graph of this round
  double correlation = 0.0;
  ParamPoint params;
  double expectation = 0.0;
  std::size_t evaluations = 0;
};

struct RoundResult {
  WeightedGraph reduced;
  /// In the ids of the input graph: eliminated, anchor, sign.
  Constraint constraint;
  RoundLog log;
  double offset = 0.0;
};

/// Optimizes F_1 for the configured variant. Throws std::logic_error if the
/// optimizer leaves its domain.
inline SearchReport optimize_round_parameters(const Qaoa1Expectation& model, const RqaoaConfig& config) {
  const auto& settings = config.optimizer();
  const ParamDomain domain = config.variant == Variant::modified ? restricted_domain(model.graph())
                                                                 : default_domain();
  CachedCutExpectation objective(model);
  auto report = grid_search(objective, domain, settings.grid_beta, settings.grid_gamma);
  if (settings.refine) {
    auto refined = gradient_refine(objective, report.best, settings.refine_settings, &domain);
    refined.evaluations += report.evaluations;
    // Refinement is monotone from the grid point; a flat objective keeps it.
    report = std::move(refined);
  }
  if (!domain.contains(report.best))
    throw std::logic_error("optimizer returned parameters outside its domain");
  return report;
}

/// One elimination step: optimize, correlate, select, contract.
inline RoundResult rqaoa_round(const WeightedGraph& g, const RqaoaConfig& config) {
  if (g.n_edges() == 0) throw std::invalid_argument("rqaoa_round: graph has no edges");
  const Qaoa1Expectation model(g);
  const auto report = optimize_round_parameters(model, config);
  const auto correlations = edge_correlations(model, report.best);
  const auto chosen = select_edge(correlations, config.selection);
  // M == 0 carries no sign information; such an edge is only chosen when every
  // correlation vanishes, and +1 is as good as -1 then.
  const int sign = chosen.value < 0 ? -1 : 1;
  const Vertex eliminated = chosen.edge.v;
  const Vertex anchor = chosen.edge.u;
  auto c = contract(g, eliminated, anchor, sign);

  RoundResult r;
  r.reduced = std::move(c.graph);
  r.constraint = {eliminated, anchor, sign};
  r.offset = c.offset;
  r.log = {g.n_vertices(), g.n_edges(), chosen.edge, chosen.value,
           report.best, report.best_value, report.evaluations};
  return r;
}

struct RqaoaResult {
  std::vector<int> assignment;
  double cut_value = 0.0;
  std::vector<Constraint> constraints;  // original ids, in elimination order
  std::vector<RoundLog> rounds;
  int residual_vertices = 0;
  /// Sum of contraction offsets; equals cut_value minus the residual cut.
  double offset = 0.0;
  VertexMapping mapping;
  std::vector<WeightedGraph> graphs;          // when record_graphs
  std::vector<std::vector<Vertex>> origins;   // current id -> original id, per graph
};

/// Recursive elimination down to n_c vertices (or until no edges remain),
/// exhaustive search on the residual graph, then back-substitution.
inline RqaoaResult run_rqaoa(const WeightedGraph& g, const RqaoaConfig& config) {
  if (config.n_c < 1) throw std::invalid_argument("n_c must be at least 1");
  if (config.n_c > kMaxBruteForceVertices)
    throw OversizeError("n_c above the brute-force limit of " +
                        std::to_string(kMaxBruteForceVertices));

  RqaoaResult result;
  WeightedGraph current = g;
  std::vector<Vertex> origin(static_cast<std::size_t>(g.n_vertices()));
  std::iota(origin.begin(), origin.end(), 0);
  result.mapping = VertexMapping::identity(g.n_vertices());

  auto record = [&] {
    if (!config.record_graphs) return;
    result.graphs.push_back(current);
    result.origins.push_back(origin);
  };
  record();

  while (current.n_vertices() > config.n_c && current.n_edges() > 0) {
    auto round = rqaoa_round(current, config);
    const auto& c = round.constraint;
    result.constraints.push_back({origin[c.eliminated], origin[c.anchor], c.sign});
    result.mapping = result.mapping.after_contraction(c.eliminated, c.anchor, c.sign);
    result.offset += round.offset;
    result.rounds.push_back(round.log);
    origin.erase(origin.begin() + c.eliminated);
    current = std::move(round.reduced);
    record();
  }

  result.residual_vertices = current.n_vertices();
  std::vector<int> residual(static_cast<std::size_t>(current.n_vertices()), 1);
  if (current.n_edges() > 0) residual = brute_force_maxcut(current).assignment;

  std::vector<int> x(static_cast<std::size_t>(g.n_vertices()), 0);
  for (std::size_t r = 0; r < origin.size(); ++r) x[origin[r]] = residual[r];
  for (auto it = result.constraints.rbegin(); it != result.constraints.rend(); ++it)
    x[it->eliminated] = it->sign * x[it->anchor];
  if (x != result.mapping.expand(residual))
    throw std::logic_error("back-substitution disagrees with the vertex mapping");

  result.assignment = std::move(x);
  result.cut_value = rqaoa::cut_value(g, result.assignment);
  return result;
}

struct QaoaSettings {
  double beta = std::numbers::pi / 8;
  double gamma_lo = 0.0;
  double gamma_hi = std::numbers::pi;
  int line_samples = 20;
  // Divide the gamma range by the largest absolute weight, so the search runs
  // over the same phases whatever the weight scale.
  bool normalize_gamma = true;
  bool refine = true;
  RefineSettings refine_settings{.freeze_beta = true};
};

struct QaoaResult {
  double expectation = 0.0;  // optimized F_1
  ParamPoint params;
  std::size_t evaluations = 0;
  std::optional<CutSolution> sampled;
};

/// Level-1 QAOA baseline: gamma line search at fixed beta, then gradient
/// refinement. With shots > 0 the optimized state is also sampled
/// (statevector, so at most kMaxStatevectorQubits vertices).
inline QaoaResult qaoa_only(const WeightedGraph& g, const QaoaSettings& settings, int shots = 0,
                            std::uint64_t seed = 0) {
  if (shots > 0 && g.n_vertices() > kMaxStatevectorQubits)
    throw OversizeError("sampling needs at most " + std::to_string(kMaxStatevectorQubits) +
                        " vertices");
  const Qaoa1Expectation model(g);
  CachedCutExpectation objective(model);
  const double scale =
      settings.normalize_gamma && g.n_edges() > 0 ? 1.0 / g.max_abs_weight() : 1.0;
  const double gamma_lo = settings.gamma_lo * scale, gamma_hi = settings.gamma_hi * scale;
  auto report =
      line_search_gamma(objective, settings.beta, gamma_lo, gamma_hi, settings.line_samples);
  if (settings.refine) {
    const ParamDomain box{settings.refine_settings.freeze_beta ? settings.beta - 1.0 : 0.0,
                          settings.refine_settings.freeze_beta ? settings.beta + 1.0
                                                               : std::numbers::pi / 2,
                          gamma_lo, gamma_hi, false};
    auto refined = gradient_refine(objective, report.best, settings.refine_settings, &box);
    refined.evaluations += report.evaluations;
    report = std::move(refined);
  }
  QaoaResult r{report.best_value, report.best, report.evaluations, std::nullopt};
  if (shots > 0) r.sampled = sample_best_cut(g, r.params, shots, seed);
  return r;
}

}  // namespace rqaoa
