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

// Runs the three solvers on one random weighted bipartite instance and prints
// the ratios.

#include <cstdio>

#include "rqaoa/bench.hpp"

int main() {
  using namespace rqaoa;
  const auto instance = random_weighted_bipartite(12, 12, 0.5, WeightDistribution{}, 2024);
  const double optimum = parity_signed_optimum(instance).value;

  const auto qaoa = qaoa_only(instance.graph(), QaoaSettings{});

  RqaoaConfig config;
  config.variant = Variant::original;
  const auto original = run_rqaoa(instance.graph(), config);
  config.variant = Variant::modified;
  const auto modified = run_rqaoa(instance.graph(), config);

  std::printf("optimum       %.0f\n", optimum);
  std::printf("qaoa          %.4f\n", qaoa.expectation / optimum);
  std::printf("rqaoa         %.4f\n", original.cut_value / optimum);
  std::printf("rqaoa_star    %.4f\n", modified.cut_value / optimum);
  return modified.cut_value == optimum ? 0 : 1;
}
