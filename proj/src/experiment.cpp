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

#include "psvqe/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "psvqe/state_vector.hpp"

namespace psvqe {

using nlohmann::json;

AnsatzKind parse_ansatz(const std::string& name) {
  if (name == "proposed1") return AnsatzKind::Proposed1;
  if (name == "proposed4") return AnsatzKind::Proposed4;
  if (name == "proposed") return AnsatzKind::MvcTree;
  if (name == "ry") return AnsatzKind::RyBaseline;
  throw std::invalid_argument("unknown ansatz '" + name +
                              "' (expected proposed1, proposed4, proposed or ry)");
}

OptimizerKind parse_optimizer(const std::string& name) {
  if (name == "nelder-mead") return OptimizerKind::NelderMead;
  if (name == "spsa") return OptimizerKind::Spsa;
  throw std::invalid_argument("unknown optimizer '" + name + "' (expected nelder-mead or spsa)");
}

ProblemKind parse_problem(const std::string& name) {
  if (name == "tsp") return ProblemKind::Tsp;
  if (name == "mvc") return ProblemKind::Mvc;
  throw std::invalid_argument("unknown problem '" + name + "' (expected tsp or mvc)");
}

void ExperimentConfig::validate() const {
  static const std::set<std::string> commands{"tsp", "mvc", "support", "gatecount"};
  if (!commands.contains(command)) throw std::invalid_argument("unknown command '" + command + "'");
  if (command == "tsp" && problem != ProblemKind::Tsp)
    throw std::invalid_argument("tsp command requires problem tsp");
  if (command == "mvc" && problem != ProblemKind::Mvc)
    throw std::invalid_argument("mvc command requires problem mvc");
  if (problem == ProblemKind::Tsp) {
    if (graph.empty() && (cities < 2 || cities > kMaxEnumeratedCities))
      throw std::invalid_argument("cities must be in [2, " +
                                  std::to_string(kMaxEnumeratedCities) + "]");
    if (ansatz == AnsatzKind::MvcTree)
      throw std::invalid_argument("ansatz 'proposed' is the vertex-cover ansatz; use proposed1, "
                                  "proposed4 or ry for tsp");
  } else {
    if (graph.empty()) throw std::invalid_argument("mvc needs --graph (builtin6 or a file)");
    if (ansatz == AnsatzKind::Proposed1 || ansatz == AnsatzKind::Proposed4)
      throw std::invalid_argument("ansatz proposed1/proposed4 are tsp ansatze; use proposed or ry "
                                  "for mvc");
  }
  if (command == "gatecount" && (cities < 2 || cities > 8))
    throw std::invalid_argument("gatecount: cities must be in [2, 8]");
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (max_evals < 1) throw std::invalid_argument("max-evals must be >= 1");
  if (!(tolerance >= 0.0)) throw std::invalid_argument("tolerance must be >= 0");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (draws < 1) throw std::invalid_argument("draws must be >= 1");
  if (penalty && !std::isfinite(*penalty)) throw std::invalid_argument("penalty must be finite");
  parse_mode(mode);
}

json to_json(const ExperimentConfig& c) {
  json j{{"command", c.command},
         {"problem", to_string(c.problem)},
         {"cities", c.cities},
         {"graph", c.graph},
         {"graph_seed", c.graph_seed},
         {"ansatz", to_string(c.ansatz)},
         {"depth", c.depth},
         {"optimizer", to_string(c.optimizer)},
         {"mode", c.mode},
         {"trials", c.trials},
         {"max_evals", c.max_evals},
         {"tolerance", c.tolerance},
         {"penalty", nullptr},
         {"draws", c.draws},
         {"seed", c.seed},
         {"threads", c.threads},
         {"csv", c.csv_path},
         {"json", c.json_path}};
  if (c.penalty) j["penalty"] = *c.penalty;
  return j;
}

ExperimentConfig config_from_json(const json& input) {
  const json& j = input.contains("config") ? input.at("config") : input;
  ExperimentConfig c;
  c.command = j.value("command", c.command);
  c.problem = parse_problem(j.value("problem", std::string(to_string(c.problem))));
  c.cities = j.value("cities", c.cities);
  c.graph = j.value("graph", c.graph);
  c.graph_seed = j.value("graph_seed", c.graph_seed);
  c.ansatz = parse_ansatz(j.value("ansatz", std::string(to_string(c.ansatz))));
  c.depth = j.value("depth", c.depth);
  c.optimizer = parse_optimizer(j.value("optimizer", std::string(to_string(c.optimizer))));
  c.mode = j.value("mode", c.mode);
  c.trials = j.value("trials", c.trials);
  c.max_evals = j.value("max_evals", c.max_evals);
  c.tolerance = j.value("tolerance", c.tolerance);
  if (j.contains("penalty") && !j.at("penalty").is_null()) c.penalty = j.at("penalty").get<double>();
  c.draws = j.value("draws", c.draws);
  c.seed = j.value("seed", c.seed);
  c.threads = j.value("threads", c.threads);
  c.csv_path = j.value("csv", c.csv_path);
  c.json_path = j.value("json", c.json_path);
  return c;
}

namespace {

Graph resolve_graph(const ExperimentConfig& c) {
  if (c.problem == ProblemKind::Mvc)
    return c.graph == "builtin6" ? builtin_mvc_graph() : load_graph(c.graph);
  if (!c.graph.empty()) return load_graph(c.graph);
  return complete_graph(c.cities, c.graph_seed);
}

}  // namespace

Problem build_problem(const ExperimentConfig& config) {
  config.validate();
  Graph graph = resolve_graph(config);
  const int n = graph.n_vertices();
  if (config.problem == ProblemKind::Tsp && (n < 2 || n > kMaxEnumeratedCities))
    throw std::invalid_argument("tsp graph must have 2.." + std::to_string(kMaxEnumeratedCities) +
                                " vertices");
  if (config.problem == ProblemKind::Mvc && !graph.connected())
    throw std::invalid_argument("mvc graph must be connected");

  CostFunction cost = config.problem == ProblemKind::Tsp
                          ? (config.penalty ? tsp_cost(graph, *config.penalty) : tsp_cost(graph))
                          : mvc_cost(graph, config.penalty.value_or(kDefaultMvcPenalty));
  Circuit circuit;
  switch (config.ansatz) {
    case AnsatzKind::Proposed1: circuit = build_tsp_proposed1(n); break;
    case AnsatzKind::Proposed4: circuit = build_tsp_proposed4(n); break;
    case AnsatzKind::MvcTree: circuit = build_mvc_ansatz(graph, spanning_tree(graph)); break;
    case AnsatzKind::RyBaseline: circuit = build_ry_baseline(cost.n_bits, config.depth); break;
  }
  if (circuit.n_qubits() > StateVector::kMaxQubits)
    throw std::invalid_argument("ansatz needs " + std::to_string(circuit.n_qubits()) +
                                " qubits; the simulator ceiling is " +
                                std::to_string(StateVector::kMaxQubits));
  return {std::move(graph), std::move(cost), std::move(circuit)};
}

OracleSummary solve_exactly(ProblemKind kind, const Graph& graph) {
  const auto feasible = enumerate_feasible(kind, graph);
  if (feasible.empty()) throw std::runtime_error("oracle: no feasible answer");
  OracleSummary s;
  s.feasible_count = feasible.size();
  s.optimum = std::min_element(feasible.begin(), feasible.end(), [](const auto& a, const auto& b) {
                return a.objective < b.objective;
              })->objective;
  for (const auto& f : feasible)
    if (f.objective <= s.optimum + 1e-9 * std::max(1.0, std::abs(s.optimum)))
      s.optimal_answers.push_back(f.answer);
  return s;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  if (config.command != "tsp" && config.command != "mvc")
    throw std::invalid_argument("run_experiment: command must be tsp or mvc");
  ExperimentResult result{config, build_problem(config), {}, {}};
  result.oracle = solve_exactly(config.problem, result.problem.graph);

  VqeOptions options;
  options.optimizer.kind = config.optimizer;
  options.optimizer.max_evals = config.max_evals;
  options.optimizer.tolerance = config.tolerance;
  options.mode = parse_mode(config.mode);
  if (auto* s = std::get_if<SampledMode>(&options.mode)) s->seed = mix_seed(config.seed, 0x5307);
  options.trials = config.trials;
  options.seed = config.seed;
  options.threads = config.threads;
  result.records = run_vqe(result.problem.circuit, result.problem.cost, options);
  return result;
}

bool trial_reached_optimum(const ExperimentResult& result, const ConvergenceRecord& record) {
  if (!record.answer) return false;
  const double objective = result.problem.cost.objective(record.decoded_basis);
  return objective <= result.oracle.optimum + 1e-9 * std::max(1.0, std::abs(result.oracle.optimum));
}

std::string bitstring(Bits z, int n_bits) {
  std::string s(static_cast<std::size_t>(n_bits), '0');
  for (int i = 0; i < n_bits; ++i)
    if (bit_at(z, n_bits, i)) s[i] = '1';
  return s;
}

void write_convergence_csv(std::ostream& out, const ExperimentResult& result) {
  out << "# config " << to_json(result.config).dump() << '\n';
  out << "trial,evaluation,expectation,best_so_far,feasible\n";
  out << std::setprecision(17);
  for (const auto& rec : result.records) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < rec.history.size(); ++i) {
      const auto& e = rec.history[i];
      best = std::min(best, e.value);
      out << rec.trial << ',' << e.index << ',' << e.value << ',' << best << ','
          << (rec.evaluation_feasible[i] ? 1 : 0) << '\n';
    }
  }
}

json summary_json(const ExperimentResult& result) {
  const auto& cost = result.problem.cost;
  json trials = json::array();
  int successes = 0, feasible = 0;
  for (const auto& rec : result.records) {
    const bool optimal = trial_reached_optimum(result, rec);
    successes += optimal;
    feasible += rec.answer.has_value();
    json answer = nullptr;
    if (rec.answer) {
      answer = json::array();
      for (Vertex v : *rec.answer) answer.push_back(v + 1);
    }
    trials.push_back({{"trial", rec.trial},
                      {"seed", rec.seed},
                      {"evaluations", rec.history.size()},
                      {"converged", rec.converged},
                      {"initial_expectation", rec.history.front().value},
                      {"best_expectation", rec.best_expectation},
                      {"best_params", rec.best_params},
                      {"decoded_basis", bitstring(rec.decoded_basis, cost.n_bits)},
                      {"decoded_probability", rec.decoded_probability},
                      {"answer", answer},
                      {"feasible", rec.answer.has_value()},
                      {"success", optimal},
                      {"elapsed_seconds", rec.elapsed_seconds}});
  }
  json optimal_answers = json::array();
  for (const auto& a : result.oracle.optimal_answers) {
    json one = json::array();
    for (Vertex v : a) one.push_back(v + 1);
    optimal_answers.push_back(one);
  }
  const auto counts = gate_counts(result.problem.circuit);
  return {{"config", to_json(result.config)},
          {"problem",
           {{"kind", to_string(result.config.problem)},
            {"vertices", result.problem.graph.n_vertices()},
            {"edges", result.problem.graph.edges().size()},
            {"penalty", cost.penalty}}},
          {"circuit",
           {{"qubits", result.problem.circuit.n_main()},
            {"ancillas", result.problem.circuit.n_ancillas()},
            {"params", counts.params},
            {"one_qubit", counts.one_qubit},
            {"two_qubit", counts.two_qubit},
            {"cswap", counts.cswap}}},
          {"oracle",
           {{"optimum", result.oracle.optimum},
            {"optimal_answers", optimal_answers},
            {"feasible_count", result.oracle.feasible_count}}},
          {"trials", trials},
          {"successes", successes},
          {"feasible_trials", feasible}};
}

SupportSummary run_support(const ExperimentConfig& config) {
  const auto problem = build_problem(config);
  const int n_main = problem.circuit.n_main();
  if (n_main > kBruteForceMaxBits)
    throw std::invalid_argument("support: main register above the oracle ceiling");
  SupportSummary s;
  s.report = support(problem.circuit, n_main, config.draws, config.seed);
  s.proposed = s.report.basis_set.size();
  s.all = std::size_t{1} << n_main;

  const auto feasible = enumerate_feasible(config.problem, problem.graph);
  s.feasible = feasible.size();
  s.feasible_in_proposed = std::all_of(feasible.begin(), feasible.end(),
                                       [&](const auto& f) { return s.report.contains(f.bits); });
  s.proposed_in_all = s.proposed <= s.all;
  s.proposed_equals_feasible = s.feasible_in_proposed && s.proposed == s.feasible;
  return s;
}

json support_json(const ExperimentConfig& config, const SupportSummary& s) {
  return {{"config", to_json(config)},
          {"proposed", s.proposed},
          {"all", s.all},
          {"feasible", s.feasible},
          {"feasible_subset_of_proposed", s.feasible_in_proposed},
          {"proposed_subset_of_all", s.proposed_in_all},
          {"proposed_equals_feasible", s.proposed_equals_feasible},
          {"draws", s.report.draws},
          {"epsilon", s.report.epsilon},
          {"max_zero_amplitude", s.report.max_zero_amplitude}};
}

std::vector<CountCheck> run_gatecount(const ExperimentConfig& config) {
  config.validate();
  const int n = config.cities;
  std::vector<CountCheck> rows;
  auto add = [&](std::vector<CountCheck> r) { rows.insert(rows.end(), r.begin(), r.end()); };
  add(verify_counts(build_tsp_proposed1(n), AnsatzKind::Proposed1));
  add(verify_counts(build_tsp_proposed4(n), AnsatzKind::Proposed4));
  const Graph g = config.problem == ProblemKind::Mvc ? resolve_graph(config)
                                                     : complete_graph(n, config.graph_seed);
  add(verify_counts(build_mvc_ansatz(g, spanning_tree(g)), AnsatzKind::MvcTree));
  add(verify_counts(build_ry_baseline(n * n, config.depth), AnsatzKind::RyBaseline, config.depth));
  add(verify_counts(build_ry_baseline(g.n_vertices(), config.depth), AnsatzKind::RyBaseline,
                    config.depth));
  return rows;
}

void print_count_table(std::ostream& out, const std::vector<CountCheck>& rows) {
  out << std::left << std::setw(11) << "ansatz" << std::setw(5) << "n" << std::setw(7) << "depth"
      << std::setw(11) << "resource" << std::right << std::setw(9) << "observed" << std::setw(11)
      << "formula" << "  verdict\n";
  for (const auto& r : rows) {
    std::ostringstream expected;
    expected << std::setprecision(6) << r.expected;
    out << std::left << std::setw(11) << r.ansatz << std::setw(5) << r.n << std::setw(7)
        << r.depth << std::setw(11) << r.resource << std::right << std::setw(9) << r.observed
        << std::setw(11) << expected.str() << "  "
        << (!r.asserted ? "info" : (r.pass() ? "pass" : "FAIL")) << '\n';
  }
}

}  // namespace psvqe
