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
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "psvqe/circuit.hpp"
#include "psvqe/cost.hpp"
#include "psvqe/optimizer.hpp"

namespace psvqe {

struct ExactMode {
  friend bool operator==(const ExactMode&, const ExactMode&) = default;
};

struct SampledMode {
  int shots = 1024;
  std::uint64_t seed = 0;
  friend bool operator==(const SampledMode&, const SampledMode&) = default;
};

using ExpectationMode = std::variant<ExactMode, SampledMode>;

/// "exact" or "shots:K".
ExpectationMode parse_mode(const std::string& text);
std::string to_string(const ExpectationMode& mode);

/// splitmix64 finaliser; used to derive independent seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Binds a circuit to a cost function. Holds the cost of every main-register
/// basis so repeated expectations only pay for the simulation.
class Estimator {
 public:
  Estimator(Circuit circuit, const CostFunction& cost);

  [[nodiscard]] const Circuit& circuit() const { return circuit_; }
  [[nodiscard]] std::span<const double> costs() const { return costs_; }
  [[nodiscard]] double min_cost() const { return min_cost_; }

  /// Main-register distribution with ancillas summed out.
  [[nodiscard]] std::vector<double> probabilities(std::span<const double> params) const;

  [[nodiscard]] double exact(std::span<const double> params) const;
  /// sum_z p(z) * cost(z) for a main-register distribution.
  [[nodiscard]] double mean_cost(std::span<const double> probabilities) const;
  /// Mean cost over `shots` draws from the exact distribution.
  [[nodiscard]] double sampled(std::span<const double> params, int shots,
                               std::uint64_t seed) const;
  [[nodiscard]] double expectation(std::span<const double> params,
                                   const ExpectationMode& mode) const;

 private:
  Circuit circuit_;
  std::vector<double> costs_;
  double min_cost_ = 0.0;
};

/// One-off expectation. Prefer Estimator inside loops.
double expectation(const Circuit& circuit, std::span<const double> params,
                   const CostFunction& cost, const ExpectationMode& mode);

struct ConvergenceRecord {
  int trial = 0;
  std::uint64_t seed = 0;
  std::vector<double> initial_params;
  std::vector<Evaluation> history;
  /// Per evaluation: is the most probable basis of that state feasible?
  std::vector<bool> evaluation_feasible;
  double best_expectation = 0.0;
  std::vector<double> best_params;
  /// Most probable main-register basis at best_params (ties: lowest index).
  Bits decoded_basis = 0;
  double decoded_probability = 0.0;
  std::optional<std::vector<Vertex>> answer;
  bool converged = false;
  double elapsed_seconds = 0.0;
};

struct VqeOptions {
  OptimizerConfig optimizer;
  ExpectationMode mode = ExactMode{};
  int trials = 1;
  std::uint64_t seed = 0;
  int threads = 1;
};

/// Runs `trials` independent optimisations. Trial t starts from parameters
/// drawn uniformly in [0, 2pi) with seed mix_seed(options.seed, t); results
/// come back ordered by trial regardless of `threads`.
std::vector<ConvergenceRecord> run_vqe(const Circuit& circuit, const CostFunction& cost,
                                       const VqeOptions& options);

/// Same, reusing a prepared estimator.
std::vector<ConvergenceRecord> run_vqe(const Estimator& estimator, const CostFunction& cost,
                                       const VqeOptions& options);

/// Uniform parameters in [0, 2pi).
std::vector<double> random_parameters(int count, std::uint64_t seed);

}  // namespace psvqe
