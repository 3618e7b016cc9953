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

// Batch experiment harness: tsp | mvc | support | gatecount.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "psvqe/experiment.hpp"

namespace {

using psvqe::ExperimentConfig;

struct Flags {
  std::string config_file;
  std::string problem;
  std::string ansatz;
  std::string optimizer = "nelder-mead";
};

void add_common(CLI::App* cmd, ExperimentConfig& c, Flags& f) {
  cmd->add_option("--config", f.config_file,
                  "JSON config (or a previous summary); replaces all other flags");
  cmd->add_option("--seed", c.seed, "Master seed");
}

void add_problem(CLI::App* cmd, ExperimentConfig& c, Flags& f) {
  cmd->add_option("--cities", c.cities, "Number of TSP cities");
  cmd->add_option("--graph", c.graph, "Graph file, or builtin6 for the vertex-cover instance");
  cmd->add_option("--graph-seed", c.graph_seed, "Seed for generated complete-graph weights");
  cmd->add_option("--ansatz", f.ansatz, "proposed1 | proposed4 | proposed | ry");
  cmd->add_option("--depth", c.depth, "Ry baseline depth");
  cmd->add_option("--penalty", c.penalty, "Penalty weight A (default per problem)");
}

void add_run(CLI::App* cmd, ExperimentConfig& c, Flags& f) {
  cmd->add_option("--optimizer", f.optimizer, "nelder-mead | spsa");
  cmd->add_option("--mode", c.mode, "exact | shots:K");
  cmd->add_option("--trials", c.trials, "Independent trials");
  cmd->add_option("--max-evals", c.max_evals, "Objective evaluations per trial");
  cmd->add_option("--tolerance", c.tolerance, "Nelder-Mead simplex value spread tolerance");
  cmd->add_option("--threads", c.threads, "Trials run concurrently");
  cmd->add_option("--csv", c.csv_path, "Convergence CSV path");
  cmd->add_option("--json", c.json_path, "Summary JSON path");
}

ExperimentConfig resolve(const std::string& command, ExperimentConfig c, const Flags& f) {
  if (!f.config_file.empty()) {
    std::ifstream in(f.config_file);
    if (!in) throw std::runtime_error("cannot open config file '" + f.config_file + "'");
    auto loaded = psvqe::config_from_json(nlohmann::json::parse(in));
    if (loaded.command != command)
      throw std::invalid_argument("config file is for '" + loaded.command + "', not '" + command +
                                  "'");
    return loaded;
  }
  c.command = command;
  if (command == "tsp") c.problem = psvqe::ProblemKind::Tsp;
  if (command == "mvc") c.problem = psvqe::ProblemKind::Mvc;
  if (!f.problem.empty()) c.problem = psvqe::parse_problem(f.problem);
  if (!f.ansatz.empty()) {
    c.ansatz = psvqe::parse_ansatz(f.ansatz);
  } else {
    c.ansatz = c.problem == psvqe::ProblemKind::Tsp ? psvqe::AnsatzKind::Proposed1
                                                    : psvqe::AnsatzKind::MvcTree;
  }
  if (command == "support" && f.problem.empty()) {
    if (c.ansatz == psvqe::AnsatzKind::MvcTree) c.problem = psvqe::ProblemKind::Mvc;
    if (c.ansatz == psvqe::AnsatzKind::Proposed1 || c.ansatz == psvqe::AnsatzKind::Proposed4)
      c.problem = psvqe::ProblemKind::Tsp;
  }
  if (command == "mvc" && c.graph.empty()) c.graph = "builtin6";
  c.optimizer = psvqe::parse_optimizer(f.optimizer);
  if (c.csv_path.empty()) c.csv_path = command + "_convergence.csv";
  if (c.json_path.empty()) c.json_path = command + "_summary.json";
  c.validate();
  return c;
}

void write_file(const std::string& path, const auto& writer) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  writer(out);
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

int cmd_run(const ExperimentConfig& config) {
  const auto result = psvqe::run_experiment(config);
  write_file(config.csv_path, [&](std::ostream& out) { psvqe::write_convergence_csv(out, result); });
  const auto summary = psvqe::summary_json(result);
  write_file(config.json_path, [&](std::ostream& out) { out << summary.dump(2) << '\n'; });

  std::cout << config.command << " ansatz=" << psvqe::to_string(config.ansatz)
            << " qubits=" << summary["circuit"]["qubits"]
            << " ancillas=" << summary["circuit"]["ancillas"]
            << " params=" << summary["circuit"]["params"] << " mode=" << config.mode << '\n';
  std::cout << "oracle optimum " << result.oracle.optimum << '\n';
  for (const auto& rec : result.records) {
    std::cout << "trial " << rec.trial << ": best " << rec.best_expectation << " after "
              << rec.history.size() << " evals, answer " << psvqe::format_vertices(rec.answer)
              << (psvqe::trial_reached_optimum(result, rec) ? " (optimal)" : "") << '\n';
  }
  std::cout << "optimal trials " << summary["successes"] << "/" << config.trials
            << ", feasible " << summary["feasible_trials"] << "/" << config.trials << '\n';
  std::cout << "wrote " << config.csv_path << " and " << config.json_path << '\n';
  return 0;
}

int cmd_support(const ExperimentConfig& config) {
  const auto s = psvqe::run_support(config);
  auto yes = [](bool b) { return b ? "true" : "false"; };
  std::cout << "|S_proposed| = " << s.proposed << '\n'
            << "|S_all|      = " << s.all << '\n'
            << "|S_feasible| = " << s.feasible << '\n'
            << "S_feasible subset of S_proposed: " << yes(s.feasible_in_proposed) << '\n'
            << "S_proposed subset of S_all:      " << yes(s.proposed_in_all) << '\n'
            << "S_proposed equals S_feasible:    " << yes(s.proposed_equals_feasible) << '\n';
  if (!config.json_path.empty())
    write_file(config.json_path,
               [&](std::ostream& out) { out << psvqe::support_json(config, s).dump(2) << '\n'; });
  return 0;
}

int cmd_gatecount(const ExperimentConfig& config) {
  const auto rows = psvqe::run_gatecount(config);
  psvqe::print_count_table(std::cout, rows);
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.pass();
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Problem-specific VQE workbench"};
  app.require_subcommand(1);

  ExperimentConfig tsp_cfg, mvc_cfg, support_cfg, count_cfg;
  Flags tsp_flags, mvc_flags, support_flags, count_flags;

  auto* tsp = app.add_subcommand("tsp", "Run VQE trials on a TSP instance");
  add_common(tsp, tsp_cfg, tsp_flags);
  add_problem(tsp, tsp_cfg, tsp_flags);
  add_run(tsp, tsp_cfg, tsp_flags);

  auto* mvc = app.add_subcommand("mvc", "Run VQE trials on a vertex-cover instance");
  add_common(mvc, mvc_cfg, mvc_flags);
  add_problem(mvc, mvc_cfg, mvc_flags);
  add_run(mvc, mvc_cfg, mvc_flags);

  auto* sup = app.add_subcommand("support", "Measure an ansatz's reachable basis set");
  add_common(sup, support_cfg, support_flags);
  add_problem(sup, support_cfg, support_flags);
  sup->add_option("--problem", support_flags.problem, "tsp | mvc (inferred from the ansatz)");
  sup->add_option("--draws", support_cfg.draws, "Random parameter draws");
  sup->add_option("--json", support_cfg.json_path, "Optional JSON report path");

  auto* count = app.add_subcommand("gatecount", "Compare gate counts with closed forms");
  add_common(count, count_cfg, count_flags);
  count->add_option("--cities", count_cfg.cities, "TSP cities N (MVC uses N vertices)");
  count->add_option("--depth", count_cfg.depth, "Ry baseline depth");

  CLI11_PARSE(app, argc, argv);

  try {
    if (tsp->parsed()) return cmd_run(resolve("tsp", tsp_cfg, tsp_flags));
    if (mvc->parsed()) return cmd_run(resolve("mvc", mvc_cfg, mvc_flags));
    if (sup->parsed()) {
      auto c = resolve("support", support_cfg, support_flags);
      if (support_cfg.json_path.empty() && support_flags.config_file.empty()) c.json_path.clear();
      return cmd_support(c);
    }
    if (count->parsed()) return cmd_gatecount(resolve("gatecount", count_cfg, count_flags));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
