// Copyright 2026 The psvqe Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "psvqe/ansatz.hpp"
#include "psvqe/cost.hpp"
#include "psvqe/graph.hpp"
#include "psvqe/oracle.hpp"
#include "psvqe/vqe.hpp"

namespace psvqe {

/// Everything a batch run needs. Validated before any computation and echoed
/// verbatim into the artifacts.
struct ExperimentConfig {
  std::string command = "tsp";  // tsp | mvc | support | gatecount
  ProblemKind problem = ProblemKind::Tsp;
  int cities = 4;
  /// TSP: optional graph file (empty = seeded complete graph).
  /// MVC: "builtin6" or a graph file.
  std::string graph;
  std::uint64_t graph_seed = 7;
  AnsatzKind ansatz = AnsatzKind::Proposed1;
  int depth = 1;
  OptimizerKind optimizer = OptimizerKind::NelderMead;
  std::string mode = "exact";
  int trials = 10;
  int max_evals = 1000;
  double tolerance = 1e-10;
  std::optional<double> penalty;
  int draws = 200;  // support only
  std::uint64_t seed = 7;
  int threads = 1;
  std::string csv_path;
  std::string json_path;

  void validate() const;
};

nlohmann::json to_json(const ExperimentConfig& config);
/// Accepts either a bare config object or a summary with a "config" member.
ExperimentConfig config_from_json(const nlohmann::json& j);

AnsatzKind parse_ansatz(const std::string& name);
OptimizerKind parse_optimizer(const std::string& name);
ProblemKind parse_problem(const std::string& name);

/// Graph, cost and ansatz resolved from a config.
struct Problem {
  Graph graph;
  CostFunction cost;
  Circuit circuit;
};

Problem build_problem(const ExperimentConfig& config);

struct OracleSummary {
  double optimum = 0.0;  // best bare objective over feasible answers
  std::vector<std::vector<Vertex>> optimal_answers;
  std::size_t feasible_count = 0;
};

OracleSummary solve_exactly(ProblemKind kind, const Graph& graph);

struct ExperimentResult {
  ExperimentConfig config;
  Problem problem;
  OracleSummary oracle;
  std::vector<ConvergenceRecord> records;
};

/// Runs a tsp/mvc config end to end.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// True when the trial decoded a feasible answer whose objective equals the
/// oracle optimum.
bool trial_reached_optimum(const ExperimentResult& result, const ConvergenceRecord& record);

/// Header `trial,evaluation,expectation,best_so_far,feasible`, one row per
/// objective evaluation; `feasible` is 1 when the most probable basis at
/// that evaluation is feasible. Preceded by one `# config ...` comment line.
void write_convergence_csv(std::ostream& out, const ExperimentResult& result);
nlohmann::json summary_json(const ExperimentResult& result);

struct SupportSummary {
  std::size_t proposed = 0;
  std::size_t all = 0;
  std::size_t feasible = 0;
  bool feasible_in_proposed = false;
  bool proposed_in_all = false;
  bool proposed_equals_feasible = false;
  SupportReport report;
};

SupportSummary run_support(const ExperimentConfig& config);
nlohmann::json support_json(const ExperimentConfig& config, const SupportSummary& s);

/// Gate-count rows for the configured size: TSP ansatze at n = cities^2, the
/// MVC ansatz at n = cities, and the Ry baseline at both sizes.
std::vector<CountCheck> run_gatecount(const ExperimentConfig& config);
void print_count_table(std::ostream& out, const std::vector<CountCheck>& rows);

std::string bitstring(Bits z, int n_bits);

}  // namespace psvqe
