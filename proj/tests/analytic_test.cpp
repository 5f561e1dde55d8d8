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

#include "rqaoa/analytic.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "rqaoa/generators.hpp"
#include "rqaoa/optim.hpp"
#include "rqaoa/oracle.hpp"
#include "test_support.hpp"

namespace rqaoa {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(EdgeZZ, SingleEdgeCollapsesToMinusOne) {
  for (double w : {1.0, 2.5, 50.0, -4.0}) {
    WeightedGraph g(2, {{0, 1, w}});
    const ParamPoint p{kPi / 8, kPi / (2 * w)};
    EXPECT_NEAR(edge_zz_expectation(g, {0, 1}, p), -1.0, 1e-15) << w;
  }
}

TEST(EdgeZZ, ZeroBetaGivesZero) {
  std::mt19937_64 rng(3);
  auto g = testing::random_mixed_graph(rng, 7, 0.7, 5);
  for (const auto& e : g.edges()) EXPECT_EQ(edge_zz_expectation(g, {e.u, e.v}, {0.0, 0.7}), 0.0);
}

TEST(EdgeZZ, AbsentEdgeThrows) {
  WeightedGraph g(3, {{0, 1, 1}});
  EXPECT_THROW(edge_zz_expectation(g, {1, 2}, {0.1, 0.1}), std::invalid_argument);
}

TEST(EdgeZZ, NeighborhoodSeparatesTriangles) {
  // Edge (0,1) with common neighbour 2 and private neighbours 3 (of 0) and 4 (of 1).
  WeightedGraph g(5, {{0, 1, 1}, {0, 2, 2}, {1, 2, 3}, {0, 3, 4}, {1, 4, 5}});
  auto nb = edge_neighborhood(g, 0, 1);
  ASSERT_EQ(nb.triangles.size(), 1u);
  EXPECT_EQ(nb.triangles[0].t, 2);
  EXPECT_EQ(nb.triangles[0].w_it, 2);
  EXPECT_EQ(nb.triangles[0].w_tj, 3);
  ASSERT_EQ(nb.at_i.size(), 2u);
  ASSERT_EQ(nb.at_j.size(), 2u);
  EXPECT_TRUE(nb.at_i[0].in_triangle);
  EXPECT_FALSE(nb.at_i[1].in_triangle);
}

// Both analytic routes (direct trig and the precomputed evaluator) against the
// dense simulation, on graphs with triangles and mixed-sign real weights.
TEST(EdgeZZ, MatchesStatevectorOnRandomGraphs) {
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 9;
    auto g = trial % 2 ? testing::random_real_graph(rng, n, 0.6, 5.0)
                       : testing::random_mixed_graph(rng, n, 0.6, 5);
    const auto p = testing::random_params(rng);
    const auto sv = statevector_qaoa1(g, p);
    const Qaoa1Expectation model(g);
    const auto fast = model.correlations(p);
    for (std::size_t e = 0; e < g.n_edges(); ++e) {
      const auto& ed = g.edge(e);
      EXPECT_NEAR(edge_zz_expectation(g, {ed.u, ed.v}, p), sv.edge_zz[e], 1e-9);
      EXPECT_NEAR(fast[e], sv.edge_zz[e], 1e-9);
    }
    EXPECT_NEAR(cut_expectation(g, p), sv.cut_expectation, 1e-9);
  }
}

TEST(CutExpectation, HalfTotalWeightAtOrigin) {
  std::mt19937_64 rng(4);
  auto g = testing::random_mixed_graph(rng, 9, 0.5, 5);
  EXPECT_NEAR(cut_expectation(g, {0, 0}), 0.5 * g.total_weight(), 1e-12);
}

TEST(CutExpectation, K22AtOptimalGamma) {
  // cos(g*)^2 = 1 - 1/2 -> g* = pi/4; F1 = 4 (1/2 + 1/2 f_2(g*)) = 3.
  auto g = complete_bipartite(2, 2).graph();
  EXPECT_NEAR(cut_expectation(g, {kPi / 8, kPi / 4}), 3.0, 1e-12);
  EXPECT_NEAR(statevector_qaoa1(g, {kPi / 8, kPi / 4}).cut_expectation, 3.0, 1e-12);
}

TEST(CutExpectation, Symmetries) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = unit_weight_copy(testing::random_mixed_graph(rng, 8, 0.5, 1));
    auto mixed = testing::random_real_graph(rng, 8, 0.5, 4.0);
    const auto p = testing::random_params(rng);
    EXPECT_NEAR(cut_expectation(g, p), cut_expectation(g, {p.beta + kPi / 2, p.gamma}), 1e-10);
    EXPECT_NEAR(cut_expectation(mixed, p), cut_expectation(mixed, {-p.beta, -p.gamma}), 1e-10);
  }
}

TEST(CutExpectation, CorrelationsStayInRange) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = testing::random_real_graph(rng, 12, 0.5, 5.0);
    for (double m : Qaoa1Expectation(g).correlations(testing::random_params(rng))) {
      EXPECT_LE(m, 1.0 + 1e-12);
      EXPECT_GE(m, -1.0 - 1e-12);
    }
  }
}

TEST(DegreeForm, K22) {
  auto g = complete_bipartite(2, 2).graph();
  EXPECT_NEAR(bipartite_expectation_by_degree(degree_histogram(g), 4, {kPi / 8, kPi / 4}), 3.0,
              1e-12);
}

TEST(DegreeForm, ZeroBetaIsHalfTheEdges) {
  DegreeHistogram h{{3, 4}, {4, 3}};
  EXPECT_EQ(bipartite_expectation_by_degree(h, 12, {0.0, 1.1}), 6.0);
}

TEST(DegreeForm, AgreesWithEdgeSum) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = unit_weight_copy(
        random_weighted_bipartite(3 + trial, 4 + trial % 3, 0.6, WeightDistribution{}, rng()).graph());
    const auto hist = degree_histogram(g);
    for (int k = 0; k < 20; ++k) {
      const auto p = testing::random_params(rng);
      EXPECT_NEAR(bipartite_expectation_by_degree(hist, g.n_edges(), p), cut_expectation(g, p),
                  1e-12 * std::max<double>(1.0, g.n_edges()));
    }
  }
}

TEST(UnweightedEdge, SingleEdgePerfectCut) {
  EXPECT_NEAR(unweighted_edge_cut_expectation(1, 1, 0, {kPi / 8, kPi / 2}), 1.0, 1e-15);
}

TEST(UnweightedEdge, ZeroGammaIsHalf) {
  EXPECT_NEAR(unweighted_edge_cut_expectation(4, 6, 2, {0.3, 0.0}), 0.5, 1e-15);
}

TEST(UnweightedEdge, TriangleMatchesStatevector) {
  WeightedGraph k3(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  std::mt19937_64 rng(1);
  for (int k = 0; k < 10; ++k) {
    const auto p = testing::random_params(rng);
    const auto sv = statevector_qaoa1(k3, p);
    EXPECT_NEAR(unweighted_edge_cut_expectation(2, 2, 1, p), 0.5 * (1 - sv.edge_zz[0]), 1e-9);
  }
}

TEST(UnweightedEdge, AgreesWithWeightedFormulaAtUnitWeights) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = unit_weight_copy(testing::random_mixed_graph(rng, 9, 0.6, 1));
    const auto p = testing::random_params(rng);
    for (const auto& e : g.edges()) {
      auto nb = edge_neighborhood(g, e.u, e.v);
      const double expected = 0.5 * (1 - edge_zz_expectation(nb, p));
      EXPECT_NEAR(unweighted_edge_cut_expectation(g.degree(e.u), g.degree(e.v),
                                                  static_cast<int>(nb.triangles.size()), p),
                  expected, 1e-12);
    }
  }
}

TEST(UnweightedEdge, RejectsImpossibleTriangleCounts) {
  EXPECT_THROW(unweighted_edge_cut_expectation(2, 3, 2, {0.1, 0.1}), std::invalid_argument);
  EXPECT_THROW(unweighted_edge_cut_expectation(0, 3, 0, {0.1, 0.1}), std::invalid_argument);
}

// Correlations on a parity-signed graph inside the restricted box are positive
// on same-part edges and negative on cross edges.
TEST(CorrelationSigns, ParitySignedGraphsInRestrictedDomain) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    auto pg = testing::random_parity_graph(rng, 14);
    if (pg.graph().n_edges() == 0) continue;
    const auto dom = restricted_domain(pg.graph());
    std::uniform_real_distribution<double> beta(dom.beta_min, dom.beta_max);
    std::uniform_real_distribution<double> gamma(dom.gamma_floor(), dom.gamma_max);
    const Qaoa1Expectation model(pg.graph());
    for (int k = 0; k < 10; ++k) {
      const auto m = model.correlations({beta(rng), gamma(rng)});
      for (std::size_t e = 0; e < m.size(); ++e) {
        const auto& ed = pg.graph().edge(e);
        if (pg.parity(ed.u) == pg.parity(ed.v))
          EXPECT_GT(m[e], 0.0);
        else
          EXPECT_LT(m[e], 0.0);
      }
    }
  }
}

TEST(CachedObjective, MatchesDirectEvaluation) {
  std::mt19937_64 rng(10);
  auto g = testing::random_real_graph(rng, 9, 0.6, 3.0);
  const Qaoa1Expectation model(g);
  CachedCutExpectation cached(model);
  for (int k = 0; k < 5; ++k) {
    const double gamma = 0.1 * k;
    for (double beta : {0.1, 0.2, 0.3}) EXPECT_EQ(cached({beta, gamma}), model.cut_expectation({beta, gamma}));
  }
  EXPECT_EQ(cached.gamma_passes(), 5u);
}

}  // namespace
}  // namespace rqaoa
