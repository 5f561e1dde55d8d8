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

#include <cmath>
#include <cstdint>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>
#include <vector>

#include "rqaoa/graph.hpp"

namespace rqaoa {

/// splitmix64 finalizer; used to derive independent seeds from a master seed.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
  return mix_seed(mix_seed(mix_seed(master) ^ a) ^ b);
}

namespace detail {

// The standard distributions are implementation-defined; these are not, so
// generated instances are identical across standard libraries.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double standard_normal(std::mt19937_64& rng) {
  double u1 = uniform01(rng);
  while (u1 <= 0.0) u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

inline bool connected(int n, const std::vector<Edge>& edges) {
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        q.push(u);
      }
  }
  return count == n;
}

}  // namespace detail

/// Gaussian edge-weight distribution. With `integer` set, samples are rounded
/// half away from zero; in either mode nonpositive samples are redrawn.
struct WeightDistribution {
  double mean = 50.0;
  double stddev = 5.0;
  bool integer = true;

  double draw(std::mt19937_64& rng) const {
    if (mean <= 0.0 && stddev == 0.0)
      throw std::invalid_argument("weight distribution cannot produce positive values");
    for (int attempt = 0; attempt < 1'000'000; ++attempt) {
      double w = mean + stddev * detail::standard_normal(rng);
      if (integer) w = std::round(w);
      if (w > 0.0) return w;
    }
    throw std::runtime_error("weight distribution keeps producing nonpositive samples");
  }
};

/// Random bipartite graph on parts {0..n-1} and {n..n+m-1}; each cross pair is
/// present with probability p. Part 0 gets parity 0, part 1 parity 1.
inline ParitySignedGraph random_weighted_bipartite(int n, int m, double p,
                                                   const WeightDistribution& weights,
                                                   std::uint64_t seed,
                                                   bool require_connected = false) {
  if (n < 1 || m < 1) throw std::invalid_argument("both parts must be nonempty");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability outside [0,1]");
  if (p == 0.0 && require_connected)
    throw std::invalid_argument("p = 0 cannot produce a connected graph");
  if (weights.stddev < 0.0) throw std::invalid_argument("negative weight stddev");

  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int attempt = 0;; ++attempt) {
    edges.clear();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j)
        if (detail::uniform01(rng) < p) edges.push_back({i, n + j, weights.draw(rng)});
    if (!require_connected || detail::connected(n + m, edges)) break;
    if (attempt >= 1000) throw std::runtime_error("could not draw a connected instance");
  }
  std::vector<std::uint8_t> sigma(static_cast<std::size_t>(n + m), 0);
  std::fill(sigma.begin() + n, sigma.end(), 1);
  return {WeightedGraph(n + m, std::move(edges)), std::move(sigma)};
}

inline ParitySignedGraph random_weighted_bipartite(int n, int m, double p, double mean,
                                                   double stddev, std::uint64_t seed) {
  return random_weighted_bipartite(n, m, p, WeightDistribution{mean, stddev, true}, seed);
}

/// General parity-signed graph: parts of size n0 and n1 with vertex labels
/// shuffled, cross pairs present with probability p_cross (positive weight),
/// same-part pairs with probability p_within (negative weight).
inline ParitySignedGraph random_parity_signed(int n0, int n1, double p_cross, double p_within,
                                              const WeightDistribution& weights,
                                              std::uint64_t seed) {
  if (n0 < 0 || n1 < 0 || n0 + n1 < 1) throw std::invalid_argument("need at least one vertex");
  if (!(p_cross >= 0.0 && p_cross <= 1.0) || !(p_within >= 0.0 && p_within <= 1.0))
    throw std::invalid_argument("edge probability outside [0,1]");
  const int n = n0 + n1;
  std::mt19937_64 rng(seed);
  std::vector<int> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(label[i], label[j]);
  }
  std::vector<std::uint8_t> sigma(static_cast<std::size_t>(n), 0);
  for (int i = n0; i < n; ++i) sigma[label[i]] = 1;

  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const bool cross = sigma[a] != sigma[b];
      if (detail::uniform01(rng) < (cross ? p_cross : p_within)) {
        const double w = weights.draw(rng);
        edges.push_back({a, b, cross ? w : -w});
      }
    }
  return {WeightedGraph(n, std::move(edges)), std::move(sigma)};
}

/// K_{n,m} with unit weights.
inline ParitySignedGraph complete_bipartite(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("both parts must be nonempty");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) edges.push_back({i, n + j, 1.0});
  std::vector<std::uint8_t> sigma(static_cast<std::size_t>(n + m), 0);
  std::fill(sigma.begin() + n, sigma.end(), 1);
  return {WeightedGraph(n + m, std::move(edges)), std::move(sigma)};
}

/// Same topology with every weight replaced by 1.
inline WeightedGraph unit_weight_copy(const WeightedGraph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (auto& e : edges) e.w = 1.0;
  return {g.n_vertices(), std::move(edges)};
}

}  // namespace rqaoa
