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

// Upper bounds on the optimized level-1 QAOA approximation ratio for
// unit-weight bipartite graphs.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>

#include "rqaoa/graph.hpp"

namespace rqaoa {

/// max over gamma of sin(g) cos^{d-1}(g): 1 for d = 1, otherwise
/// d^{-1/2} ((d-1)/d)^{(d-1)/2}, attained at cos^2(g) = 1 - 1/d.
inline double f_d_max(int d) {
  if (d < 1) throw std::invalid_argument("f_d_max: degree must be at least 1");
  if (d == 1) return 1.0;
  const double dd = d;
  if (d > 1000) return std::exp(-0.5 * std::log(dd) + 0.5 * (dd - 1) * std::log1p(-1.0 / dd));
  return std::pow((dd - 1) / dd, (dd - 1) / 2) / std::sqrt(dd);
}

namespace detail {

inline void check_histogram(const DegreeHistogram& hist, std::size_t n_edges) {
  if (n_edges == 0) throw std::invalid_argument("bound needs at least one edge");
  std::size_t degree_sum = 0;
  for (const auto& [d, count] : hist) {
    if (d < 0) throw std::invalid_argument("negative degree in histogram");
    degree_sum += static_cast<std::size_t>(d) * count;
  }
  if (degree_sum != 2 * n_edges)
    throw std::invalid_argument("degree histogram inconsistent with edge count");
}

inline void require_unit_weights(const WeightedGraph& g) {
  if (!g.unit_weights()) throw std::invalid_argument("bounds apply to unit-weight graphs only");
}

}  // namespace detail

/// 1/2 + sum_d (d |D_d| / 2|E|) * 1/(2 sqrt d) ((d-1)/d)^{(d-1)/2}.
inline double theorem1_degree_bound(const DegreeHistogram& hist, std::size_t n_edges) {
  detail::check_histogram(hist, n_edges);
  double sum = 0.0;
  for (const auto& [d, count] : hist)
    if (d > 0) sum += d * static_cast<double>(count) / (2.0 * n_edges) * 0.5 * f_d_max(d);
  return 0.5 + sum;
}

/// 1/2 + 1/(2 sqrt e) (1/sqrt(d_ave) + (sqrt(e) - 1)/d_ave).
inline double theorem1_avg_degree_bound(double d_ave) {
  if (!(d_ave > 0)) throw std::invalid_argument("average degree must be positive");
  const double sqrt_e = std::sqrt(std::numbers::e);
  return 0.5 + (1.0 / std::sqrt(d_ave) + (sqrt_e - 1.0) / d_ave) / (2.0 * sqrt_e);
}

/// Bound for K_{n,m}, n, m >= 2.
inline double corollary1_bound(int n, int m) {
  if (n < 2 || m < 2) throw std::invalid_argument("corollary bound needs n, m >= 2");
  auto term = [](int k) {
    const double kk = k;
    return std::pow(1.0 - 1.0 / kk, kk / 2) / std::sqrt(kk - 1);
  };
  if (n == m) return 0.5 + 0.5 * term(n);
  return 0.5 + 0.25 * term(n) + 0.25 * term(m);
}

struct BoundReport {
  double degree_bound = 0.0;
  double avg_degree_bound = 0.0;
  double d_ave = 0.0;
};

/// Both degree-based bounds for a unit-weight bipartite graph.
inline BoundReport bipartite_bounds(const WeightedGraph& g) {
  detail::require_unit_weights(g);
  BoundReport r;
  r.d_ave = 2.0 * static_cast<double>(g.n_edges()) / g.n_vertices();
  r.degree_bound = theorem1_degree_bound(degree_histogram(g), g.n_edges());
  r.avg_degree_bound = theorem1_avg_degree_bound(r.d_ave);
  return r;
}

}  // namespace rqaoa
