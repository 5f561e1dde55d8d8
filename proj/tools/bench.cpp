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

// Command-line front end: parameter sweeps, bound tables and single solves.
//
// Exit codes: 0 success, 2 invalid input (arguments, config, graph file),
// 3 exhaustive search requested beyond its size limit.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rqaoa/bench.hpp"
#include "rqaoa/edge_list.hpp"
#include "rqaoa/oracle.hpp"
#include "rqaoa/rqaoa.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitOversize = 3;

int run_sweep(const std::string& config_path, const std::string& output_override) {
  auto config = rqaoa::bench::load_config(config_path);
  if (!output_override.empty()) config.output = output_override;
  const auto rows = rqaoa::bench::run_sweep(config);
  const auto csv = rqaoa::bench::to_csv(rows);
  if (config.output && !config.output->empty() && *config.output != "-") {
    std::ofstream out(*config.output, std::ios::binary);
    if (!out) throw rqaoa::bench::ConfigError("cannot write " + *config.output);
    out << csv;
  } else {
    std::cout << csv;
  }
  return 0;
}

int run_bounds(int n, int m, int samples, int sweep_to) {
  std::vector<rqaoa::bench::BoundsRow> rows;
  const int steps = sweep_to > 0 ? sweep_to - n : 0;
  for (int k = 0; k <= steps; ++k) rows.push_back(rqaoa::bench::bounds_row(n + k, m + k, samples));
  std::cout << rqaoa::bench::to_csv(rows);
  return 0;
}

std::string join_assignment(const std::vector<int>& x) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ' ';
    s += x[i] > 0 ? "+1" : "-1";
  }
  return s;
}

int run_solve(const std::string& path, const std::string& algo, int n_c, const std::string& policy,
              bool as_json) {
  const auto file = rqaoa::read_edge_list_file(path);
  const auto& g = file.graph;
  nlohmann::json j;
  j["algorithm"] = algo;
  j["n_vertices"] = g.n_vertices();
  j["n_edges"] = g.n_edges();

  std::vector<int> assignment;
  double cut = 0.0;
  if (algo == "brute") {
    auto s = rqaoa::brute_force_maxcut(g);
    cut = s.value;
    assignment = std::move(s.assignment);
  } else if (algo == "qaoa") {
    auto q = rqaoa::qaoa_only(g, rqaoa::QaoaSettings{});
    j["expectation"] = q.expectation;
    j["beta"] = q.params.beta;
    j["gamma"] = q.params.gamma;
    if (g.n_vertices() <= rqaoa::kMaxStatevectorQubits) {
      auto s = rqaoa::sample_best_cut(g, q.params, 1024, 0);
      cut = s.value;
      assignment = std::move(s.assignment);
    }
  } else {
    rqaoa::RqaoaConfig config;
    config.variant = algo == "rqaoa" ? rqaoa::Variant::original : rqaoa::Variant::modified;
    config.n_c = n_c;
    config.selection = *rqaoa::parse_policy(policy);
    auto r = rqaoa::run_rqaoa(g, config);
    cut = r.cut_value;
    assignment = std::move(r.assignment);
    auto& trace = j["constraints"] = nlohmann::json::array();
    for (std::size_t i = 0; i < r.constraints.size(); ++i) {
      const auto& c = r.constraints[i];
      const auto& log = r.rounds[i];
      trace.push_back({{"eliminated", c.eliminated},
                       {"anchor", c.anchor},
                       {"sign", c.sign},
                       {"correlation", log.correlation},
                       {"beta", log.params.beta},
                       {"gamma", log.params.gamma},
                       {"graph_size", log.graph_size}});
    }
  }
  if (!assignment.empty() || g.n_vertices() == 0) {
    j["cut"] = cut;
    j["assignment"] = assignment;
  }
  if (file.sigma) {
    rqaoa::ParitySignedGraph pg(g, *file.sigma);
    j["parity_optimum"] = rqaoa::parity_signed_optimum(pg).value;
  }

  if (as_json) {
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << "algorithm   " << algo << '\n'
            << "graph       " << g.n_vertices() << " vertices, " << g.n_edges() << " edges\n";
  if (j.contains("expectation"))
    std::cout << "expectation " << rqaoa::bench::format_number(j["expectation"].get<double>())
              << " at beta=" << rqaoa::bench::format_number(j["beta"].get<double>())
              << " gamma=" << rqaoa::bench::format_number(j["gamma"].get<double>()) << '\n';
  if (j.contains("cut")) {
    std::cout << "cut         " << rqaoa::bench::format_number(cut) << '\n'
              << "assignment  " << join_assignment(assignment) << '\n';
  }
  if (j.contains("parity_optimum"))
    std::cout << "optimum     " << rqaoa::bench::format_number(j["parity_optimum"].get<double>())
              << " (parity labels)\n";
  if (j.contains("constraints")) {
    std::cout << "constraints " << j["constraints"].size() << '\n';
    for (const auto& c : j["constraints"])
      std::cout << "  x" << c["eliminated"].get<int>() << " = "
                << (c["sign"].get<int>() > 0 ? "+" : "-") << "x" << c["anchor"].get<int>()
                << "   M=" << rqaoa::bench::format_number(c["correlation"].get<double>())
                << " on " << c["graph_size"].get<int>() << " vertices\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Level-1 QAOA / recursive QAOA MAX-CUT benchmark"};
  app.require_subcommand(1);

  auto* sweep = app.add_subcommand("sweep", "Run a benchmark sweep and write CSV");
  std::string config_path, output;
  sweep->add_option("--config", config_path, "Experiment config file")->required();
  sweep->add_option("--output", output, "CSV output path (overrides config; '-' for stdout)");

  auto* bounds = app.add_subcommand("bounds", "Level-1 ratio versus bounds for K_{n,m}");
  int n = 0, m = 0, samples = 10000, sweep_to = 0;
  bounds->add_option("--n", n, "First part size")->required();
  bounds->add_option("--m", m, "Second part size")->required();
  bounds->add_option("--samples", samples, "Gamma line-search samples")->check(CLI::Range(2, 100000000));
  bounds->add_option("--sweep-to", sweep_to, "Also emit K_{n+k,m+k} up to first part size N");

  auto* solve = app.add_subcommand("solve", "Solve one edge-list graph");
  std::string graph_path, algo, policy = "max_abs";
  int n_c = 10;
  bool as_json = false;
  solve->add_option("--graph", graph_path, "Edge-list file")->required();
  solve->add_option("--algo", algo, "Algorithm")
      ->required()
      ->check(CLI::IsMember({"qaoa", "rqaoa", "rqaoa_star", "brute"}));
  solve->add_option("--n-c", n_c, "Recursion stop size")->check(CLI::PositiveNumber);
  solve->add_option("--policy", policy, "Edge selection")->check(CLI::IsMember({"max_abs", "max_signed"}));
  solve->add_flag("--json", as_json, "Print a single JSON object");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*sweep) return run_sweep(config_path, output);
    if (*bounds) return run_bounds(n, m, samples, sweep_to);
    if (*solve) return run_solve(graph_path, algo, n_c, policy, as_json);
  } catch (const rqaoa::OversizeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOversize;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
