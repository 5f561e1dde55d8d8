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
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rqaoa/analytic.hpp"
#include "rqaoa/graph.hpp"

namespace rqaoa {

/// Inset applied to open interval endpoints so searched sets are closed.
inline constexpr double kDomainInset = 1e-6;

struct ParamDomain {
  double beta_min = 0.0;
  double beta_max = std::numbers::pi / 2;
  double gamma_min = 0.0;
  double gamma_max = std::numbers::pi;
  bool gamma_excludes_zero = false;

  void validate() const {
    if (!(beta_min < beta_max) || !(gamma_min < gamma_max))
      throw std::invalid_argument("parameter domain must satisfy min < max on both axes");
    if (gamma_excludes_zero && gamma_min < 0.0)
      throw std::invalid_argument("zero-excluding gamma range must be nonnegative");
  }

  double gamma_floor() const {
    return gamma_excludes_zero && gamma_min <= 0.0 ? std::min(kDomainInset, gamma_max / 2) : gamma_min;
  }

  bool contains(ParamPoint p) const {
    if (!(p.beta >= beta_min && p.beta <= beta_max)) return false;
    if (!(p.gamma >= gamma_min && p.gamma <= gamma_max)) return false;
    return !(gamma_excludes_zero && p.gamma == 0.0);
  }

  ParamPoint clamp(ParamPoint p) const {
    return {std::clamp(p.beta, beta_min, beta_max), std::clamp(p.gamma, gamma_floor(), gamma_max)};
  }
};

/// Full search box for the unrestricted variant: beta in [0, pi/2], gamma in [0, pi].
/// F_1 has period pi/2 in beta, and for integer weights period 2*pi in gamma
/// with F_1(b, g) = F_1(-b, -g), so this box covers every distinct value.
inline ParamDomain default_domain() { return {}; }

/// Restricted box of the modified recursion: 0 < beta < pi/4 (inset) and
/// 0 < gamma <= pi / (2 w*), w* the largest absolute weight.
inline ParamDomain restricted_domain(const WeightedGraph& g) {
  if (g.n_edges() == 0) throw std::invalid_argument("restricted domain needs at least one edge");
  const double w_star = g.max_abs_weight();
  return {kDomainInset, std::numbers::pi / 4 - kDomainInset, 0.0, std::numbers::pi / (2 * w_star),
          true};
}

struct SearchReport {
  ParamPoint best;
  double best_value = 0.0;
  std::size_t evaluations = 0;
  std::size_t iterations = 0;
  std::vector<std::pair<ParamPoint, double>> trace;
};

/// Evaluates `samples` evenly spaced gamma values (endpoints included) at a
/// fixed beta; the first maximizer wins ties.
template <typename Objective>
SearchReport line_search_gamma(Objective&& objective, double beta, double gamma_lo,
                               double gamma_hi, int samples, bool record_trace = false) {
  if (samples < 2) throw std::invalid_argument("line search needs at least 2 samples");
  SearchReport r;
  const double step = (gamma_hi - gamma_lo) / (samples - 1);
  for (int k = 0; k < samples; ++k) {
    const ParamPoint p{beta, k == samples - 1 ? gamma_hi : gamma_lo + k * step};
    const double v = objective(p);
    ++r.evaluations;
    if (record_trace) r.trace.emplace_back(p, v);
    if (r.evaluations == 1 || v > r.best_value) {
      r.best = p;
      r.best_value = v;
    }
  }
  return r;
}

/// Row-major (beta outer, gamma inner) scan of an n_beta x n_gamma grid with
/// endpoints; gamma = 0 is skipped when the domain excludes it. First
/// maximizer in scan order wins ties.
template <typename Objective>
SearchReport grid_search(Objective&& objective, const ParamDomain& domain, int n_beta, int n_gamma,
                         bool record_trace = false) {
  domain.validate();
  if (n_beta < 2 || n_gamma < 2) throw std::invalid_argument("grid needs at least 2x2 points");
  SearchReport r;
  const double db = (domain.beta_max - domain.beta_min) / (n_beta - 1);
  const double dg = (domain.gamma_max - domain.gamma_min) / (n_gamma - 1);
  for (int i = 0; i < n_beta; ++i) {
    const double beta = i == n_beta - 1 ? domain.beta_max : domain.beta_min + i * db;
    for (int j = 0; j < n_gamma; ++j) {
      const double gamma = j == n_gamma - 1 ? domain.gamma_max : domain.gamma_min + j * dg;
      if (domain.gamma_excludes_zero && gamma == 0.0) continue;
      const ParamPoint p{beta, gamma};
      const double v = objective(p);
      ++r.evaluations;
      if (record_trace) r.trace.emplace_back(p, v);
      if (r.evaluations == 1 || v > r.best_value) {
        r.best = p;
        r.best_value = v;
      }
    }
  }
  if (r.evaluations == 0) throw std::invalid_argument("grid contains no admissible point");
  return r;
}

struct RefineSettings {
  double fd_step = 1e-5;
  double learn_rate = 0.05;
  int max_iters = 200;
  /// Stop once an accepted step gains less than tol * max(1, |value|).
  double tol = 1e-9;
  int max_halvings = 20;
  bool freeze_beta = false;
};

/// Central-difference gradient of `objective` at p.
template <typename Objective>
std::pair<double, double> central_gradient(Objective&& objective, ParamPoint p, double h,
                                           bool freeze_beta, std::size_t& evaluations) {
  double gb = 0.0;
  if (!freeze_beta) {
    gb = (objective(ParamPoint{p.beta + h, p.gamma}) - objective(ParamPoint{p.beta - h, p.gamma})) /
         (2 * h);
    evaluations += 2;
  }
  const double gg =
      (objective(ParamPoint{p.beta, p.gamma + h}) - objective(ParamPoint{p.beta, p.gamma - h})) /
      (2 * h);
  evaluations += 2;
  return {gb, gg};
}

/// Projected gradient ascent from `start` with backtracking step halving.
///
/// When a domain is given, iterates are clamped into it and steps are taken in
/// coordinates normalized by the domain extents (narrow gamma boxes would
/// otherwise force tiny beta steps). The returned value never falls below the
/// value at the (clamped) start.
template <typename Objective>
SearchReport gradient_refine(Objective&& objective, ParamPoint start, const RefineSettings& s,
                             const ParamDomain* domain = nullptr) {
  if (!(s.fd_step > 0) || !(s.learn_rate > 0) || !(s.tol > 0))
    throw std::invalid_argument("fd_step, learn_rate and tol must be positive");
  double scale_b = 1.0, scale_g = 1.0;
  auto project = [&](ParamPoint p) { return domain ? domain->clamp(p) : p; };
  if (domain) {
    domain->validate();
    scale_b = domain->beta_max - domain->beta_min;
    scale_g = domain->gamma_max - domain->gamma_min;
  }

  SearchReport r;
  ParamPoint x = project(start);
  double fx = objective(x);
  r.evaluations = 1;
  double eta = s.learn_rate;

  for (int iter = 0; iter < s.max_iters; ++iter) {
    ++r.iterations;
    auto [gb, gg] = central_gradient(objective, x, s.fd_step, s.freeze_beta, r.evaluations);
    if (gb == 0.0 && gg == 0.0) break;

    bool accepted = false;
    ParamPoint y;
    double fy = 0.0;
    for (int h = 0; h <= s.max_halvings; ++h) {
      y = project({x.beta + eta * scale_b * scale_b * gb, x.gamma + eta * scale_g * scale_g * gg});
      fy = objective(y);
      ++r.evaluations;
      if (fy > fx) {
        accepted = true;
        break;
      }
      eta *= 0.5;
    }
    if (!accepted) break;
    const double gain = fy - fx;
    x = y;
    fx = fy;
    eta *= 2.0;
    if (gain < s.tol * std::max(1.0, std::abs(fx))) break;
  }
  r.best = x;
  r.best_value = fx;
  return r;
}

}  // namespace rqaoa
