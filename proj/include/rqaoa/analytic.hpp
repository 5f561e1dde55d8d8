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

// Closed-form level-1 QAOA expectations for weighted MAX-CUT.
//
// Conventions: cost Hamiltonian H_C = sum_e (w_e/2)(I - Z_u Z_v), state
// exp(-i beta sum X) exp(-i gamma H_C) |+>^n. For an edge (i,j):
//
//   <Z_i Z_j> = -1/2 sin(4b) sin(w_ij g) [prod_{k in N_i\j} cos(w_ki g) + prod_{l in N_j\i} cos(w_lj g)]
//               -1/2 sin^2(2b) prod_{non-triangle nbrs} cos(w g)
//                    * [prod_t cos((w_it + w_tj) g) - prod_t cos((w_it - w_tj) g)]
//
// where t runs over the common neighbours of i and j.

#include <cmath>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "rqaoa/graph.hpp"

namespace rqaoa {

struct ParamPoint {
  double beta = 0.0;
  double gamma = 0.0;

  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
};

struct EdgeNeighborhood {
  struct Incident {
    Vertex vertex;
    double w;
    bool in_triangle;
  };
  struct Triangle {
    Vertex t;
    double w_it;
    double w_tj;
  };
  Vertex i = 0;
  Vertex j = 0;
  double w_ij = 0.0;
  std::vector<Incident> at_i;  // edges (k,i), k != j, sorted by k
  std::vector<Incident> at_j;  // edges (l,j), l != i, sorted by l
  std::vector<Triangle> triangles;
};

inline EdgeNeighborhood edge_neighborhood(const WeightedGraph& g, Vertex i, Vertex j) {
  auto w = g.weight(i, j);
  if (!w)
    throw std::invalid_argument("(" + std::to_string(i) + "," + std::to_string(j) +
                                ") is not an edge");
  EdgeNeighborhood nb;
  nb.i = i;
  nb.j = j;
  nb.w_ij = *w;
  const auto ni = g.neighbors(i);
  const auto nj = g.neighbors(j);
  std::size_t a = 0, b = 0;
  while (a < ni.size() || b < nj.size()) {
    if (a < ni.size() && ni[a].vertex == j) { ++a; continue; }
    if (b < nj.size() && nj[b].vertex == i) { ++b; continue; }
    if (b == nj.size() || (a < ni.size() && ni[a].vertex < nj[b].vertex)) {
      nb.at_i.push_back({ni[a].vertex, ni[a].w, false});
      ++a;
    } else if (a == ni.size() || nj[b].vertex < ni[a].vertex) {
      nb.at_j.push_back({nj[b].vertex, nj[b].w, false});
      ++b;
    } else {
      nb.at_i.push_back({ni[a].vertex, ni[a].w, true});
      nb.at_j.push_back({nj[b].vertex, nj[b].w, true});
      nb.triangles.push_back({ni[a].vertex, ni[a].w, nj[b].w});
      ++a;
      ++b;
    }
  }
  return nb;
}

inline double edge_zz_expectation(const EdgeNeighborhood& nb, ParamPoint p) {
  const double g = p.gamma;
  double prod_i = 1.0, prod_j = 1.0, outer = 1.0;
  for (const auto& k : nb.at_i) {
    const double c = std::cos(k.w * g);
    prod_i *= c;
    if (!k.in_triangle) outer *= c;
  }
  for (const auto& l : nb.at_j) {
    const double c = std::cos(l.w * g);
    prod_j *= c;
    if (!l.in_triangle) outer *= c;
  }
  double plus = 1.0, minus = 1.0;
  for (const auto& t : nb.triangles) {
    plus *= std::cos((t.w_it + t.w_tj) * g);
    minus *= std::cos((t.w_it - t.w_tj) * g);
  }
  const double bracket = nb.triangles.empty() ? 0.0 : plus - minus;
  const double s2b = std::sin(2.0 * p.beta);
  return -0.5 * std::sin(4.0 * p.beta) * std::sin(nb.w_ij * g) * (prod_i + prod_j) -
         0.5 * s2b * s2b * outer * bracket;
}

/// <Z_i Z_j> at level 1 for edge (i,j). Throws std::invalid_argument if absent.
inline double edge_zz_expectation(const WeightedGraph& g, EdgeKey e, ParamPoint p) {
  return edge_zz_expectation(edge_neighborhood(g, e.u, e.v), p);
}

/// Per-graph precomputation of every edge neighbourhood, evaluated with one
/// sin/cos pair per edge and angle-addition for the triangle factors.
///
/// For fixed gamma each edge correlation splits as
///   M_e = -1/2 sin(4b) A_e(g) - 1/2 sin^2(2b) B_e(g)
/// so a whole beta sweep costs one neighbourhood pass.
class Qaoa1Expectation {
 public:
  struct GammaSums {
    double weighted_a = 0.0;  // sum_e w_e A_e
    double weighted_b = 0.0;  // sum_e w_e B_e
  };

  explicit Qaoa1Expectation(const WeightedGraph& g) : graph_(&g) {
    const auto edges = g.edges();
    weights_.reserve(edges.size());
    half_total_ = 0.5 * g.total_weight();
    outer_off_.push_back(0);
    tri_off_.push_back(0);
    for (const auto& e : edges) {
      weights_.push_back(e.w);
      const auto ni = g.neighbors(e.u);
      const auto nj = g.neighbors(e.v);
      std::size_t a = 0, b = 0;
      std::size_t split = 0;
      std::vector<std::uint32_t> from_j;
      while (a < ni.size() || b < nj.size()) {
        if (a < ni.size() && ni[a].vertex == e.v) { ++a; continue; }
        if (b < nj.size() && nj[b].vertex == e.u) { ++b; continue; }
        if (b == nj.size() || (a < ni.size() && ni[a].vertex < nj[b].vertex)) {
          outer_.push_back(static_cast<std::uint32_t>(ni[a++].edge));
          ++split;
        } else if (a == ni.size() || nj[b].vertex < ni[a].vertex) {
          from_j.push_back(static_cast<std::uint32_t>(nj[b++].edge));
        } else {
          tri_.push_back(static_cast<std::uint32_t>(ni[a++].edge));
          tri_.push_back(static_cast<std::uint32_t>(nj[b++].edge));
        }
      }
      outer_split_.push_back(outer_off_.back() + split);
      outer_.insert(outer_.end(), from_j.begin(), from_j.end());
      outer_off_.push_back(outer_.size());
      tri_off_.push_back(tri_.size());
    }
  }

  const WeightedGraph& graph() const { return *graph_; }
  std::size_t n_edges() const { return weights_.size(); }
  double half_total_weight() const { return half_total_; }

  /// A_e and B_e for every edge at the given gamma.
  void edge_terms(double gamma, std::vector<double>& a_terms, std::vector<double>& b_terms) const {
    const std::size_t m = weights_.size();
    cos_.resize(m);
    sin_.resize(m);
    for (std::size_t e = 0; e < m; ++e) {
      cos_[e] = std::cos(weights_[e] * gamma);
      sin_[e] = std::sin(weights_[e] * gamma);
    }
    a_terms.resize(m);
    b_terms.resize(m);
    for (std::size_t e = 0; e < m; ++e) {
      double outer_i = 1.0, outer_j = 1.0;
      for (std::size_t k = outer_off_[e]; k < outer_split_[e]; ++k) outer_i *= cos_[outer_[k]];
      for (std::size_t k = outer_split_[e]; k < outer_off_[e + 1]; ++k) outer_j *= cos_[outer_[k]];
      double tri_i = 1.0, tri_j = 1.0, plus = 1.0, minus = 1.0;
      for (std::size_t k = tri_off_[e]; k < tri_off_[e + 1]; k += 2) {
        const std::uint32_t it = tri_[k], tj = tri_[k + 1];
        const double cc = cos_[it] * cos_[tj];
        const double ss = sin_[it] * sin_[tj];
        tri_i *= cos_[it];
        tri_j *= cos_[tj];
        plus *= cc - ss;
        minus *= cc + ss;
      }
      a_terms[e] = sin_[e] * (outer_i * tri_i + outer_j * tri_j);
      b_terms[e] = tri_off_[e] == tri_off_[e + 1] ? 0.0 : outer_i * outer_j * (plus - minus);
    }
  }

  GammaSums gamma_sums(double gamma) const {
    edge_terms(gamma, a_buf_, b_buf_);
    GammaSums s;
    for (std::size_t e = 0; e < weights_.size(); ++e) {
      s.weighted_a += weights_[e] * a_buf_[e];
      s.weighted_b += weights_[e] * b_buf_[e];
    }
    return s;
  }

  double cut_expectation(double beta, const GammaSums& s) const {
    const double s2b = std::sin(2.0 * beta);
    return half_total_ + 0.25 * std::sin(4.0 * beta) * s.weighted_a + 0.25 * s2b * s2b * s.weighted_b;
  }

  /// F_1(beta, gamma) = sum_e (w_e/2)(1 - <Z_u Z_v>).
  double cut_expectation(ParamPoint p) const { return cut_expectation(p.beta, gamma_sums(p.gamma)); }

  /// <Z_u Z_v> for every edge, in graph edge order.
  std::vector<double> correlations(ParamPoint p) const {
    edge_terms(p.gamma, a_buf_, b_buf_);
    const double s4b = std::sin(4.0 * p.beta);
    const double s2b = std::sin(2.0 * p.beta);
    std::vector<double> m(weights_.size());
    for (std::size_t e = 0; e < m.size(); ++e)
      m[e] = -0.5 * s4b * a_buf_[e] - 0.5 * s2b * s2b * b_buf_[e];
    return m;
  }

 private:
  const WeightedGraph* graph_;
  std::vector<double> weights_;
  double half_total_ = 0.0;
  // Per edge: non-triangle incident edges at u in [outer_off_, outer_split_),
  // at v in [outer_split_, outer_off_+1); triangle edge pairs (it, tj) in tri_.
  std::vector<std::uint32_t> outer_;
  std::vector<std::size_t> outer_off_;
  std::vector<std::size_t> outer_split_;
  std::vector<std::uint32_t> tri_;
  std::vector<std::size_t> tri_off_;
  // Scratch; an instance is not safe for concurrent use.
  mutable std::vector<double> cos_, sin_, a_buf_, b_buf_;
};

/// F_1 on an arbitrary weighted graph; equals half the total weight at (0,0).
inline double cut_expectation(const WeightedGraph& g, ParamPoint p) {
  return Qaoa1Expectation(g).cut_expectation(p);
}

/// F_1 for a triangle-free unit-weight graph from its degree histogram:
/// |E|/2 + 1/4 sin(4b) sin(g) sum_d d |D_d| cos^{d-1}(g).
inline double bipartite_expectation_by_degree(const DegreeHistogram& hist, std::size_t n_edges,
                                              ParamPoint p) {
  const double c = std::cos(p.gamma);
  double sum = 0.0;
  for (const auto& [d, count] : hist)
    if (d > 0) sum += d * static_cast<double>(count) * std::pow(c, d - 1);
  return 0.5 * static_cast<double>(n_edges) +
         0.25 * std::sin(4.0 * p.beta) * std::sin(p.gamma) * sum;
}

/// <C_ij> = (1 - <Z_i Z_j>)/2 on a unit-weight graph from endpoint degrees and
/// the number of triangles through the edge.
inline double unweighted_edge_cut_expectation(int d_i, int d_j, int n_ij, ParamPoint p) {
  if (d_i < 1 || d_j < 1) throw std::invalid_argument("degrees must be at least 1");
  if (n_ij < 0 || n_ij > std::min(d_i, d_j) - 1)
    throw std::invalid_argument("triangle count inconsistent with degrees");
  const double c = std::cos(p.gamma);
  const double s2b = std::sin(2.0 * p.beta);
  return 0.5 -
         0.25 * s2b * s2b * std::pow(c, d_i + d_j - 2 * (n_ij + 1)) *
             (1.0 - std::pow(std::cos(2.0 * p.gamma), n_ij)) +
         0.25 * std::sin(4.0 * p.beta) * std::sin(p.gamma) *
             (std::pow(c, d_i - 1) + std::pow(c, d_j - 1));
}

/// F_1 objective that memoizes the gamma-dependent sums, so grid sweeps and
/// finite-difference stencils sharing a gamma reuse one neighbourhood pass.
class CachedCutExpectation {
 public:
  explicit CachedCutExpectation(const Qaoa1Expectation& model) : model_(&model) {}

  double operator()(ParamPoint p) {
    std::uint64_t key;
    static_assert(sizeof key == sizeof p.gamma);
    std::memcpy(&key, &p.gamma, sizeof key);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      if (cache_.size() > 4096) cache_.clear();
      it = cache_.emplace(key, model_->gamma_sums(p.gamma)).first;
      ++gamma_passes_;
    }
    return model_->cut_expectation(p.beta, it->second);
  }

  std::size_t gamma_passes() const { return gamma_passes_; }

 private:
  const Qaoa1Expectation* model_;
  std::unordered_map<std::uint64_t, Qaoa1Expectation::GammaSums> cache_;
  std::size_t gamma_passes_ = 0;
};

}  // namespace rqaoa
