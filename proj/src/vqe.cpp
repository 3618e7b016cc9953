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

#include "psvqe/vqe.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "psvqe/state_vector.hpp"

namespace psvqe {

ExpectationMode parse_mode(const std::string& text) {
  if (text == "exact") return ExactMode{};
  const std::string prefix = "shots:";
  if (text.rfind(prefix, 0) == 0) {
    const auto digits = text.substr(prefix.size());
    std::size_t used = 0;
    int shots = 0;
    try {
      shots = std::stoi(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == digits.size() && used > 0 && shots >= 1) return SampledMode{shots, 0};
  }
  throw std::invalid_argument("mode must be 'exact' or 'shots:K' with K >= 1, got '" + text + "'");
}

std::string to_string(const ExpectationMode& mode) {
  if (const auto* s = std::get_if<SampledMode>(&mode)) return "shots:" + std::to_string(s->shots);
  return "exact";
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<double> random_parameters(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> theta(static_cast<std::size_t>(count));
  for (auto& t : theta)
    t = 2.0 * std::numbers::pi * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  return theta;
}

Estimator::Estimator(Circuit circuit, const CostFunction& cost) : circuit_(std::move(circuit)) {
  if (cost.n_bits != circuit_.n_main())
    throw std::invalid_argument("Estimator: cost has " + std::to_string(cost.n_bits) +
                                " bits but the circuit's main register has " +
                                std::to_string(circuit_.n_main()) + " qubits");
  costs_ = cost_table(cost);
  min_cost_ = *std::min_element(costs_.begin(), costs_.end());
}

std::vector<double> Estimator::probabilities(std::span<const double> params) const {
  return run_probabilities(circuit_, params);
}

double Estimator::mean_cost(std::span<const double> probabilities) const {
  if (probabilities.size() != costs_.size())
    throw std::invalid_argument("Estimator::mean_cost: distribution size mismatch");
  double total = 0.0;
  for (std::size_t z = 0; z < costs_.size(); ++z)
    if (probabilities[z] != 0.0) total += probabilities[z] * costs_[z];
  return total;
}

double Estimator::exact(std::span<const double> params) const {
  return mean_cost(probabilities(params));
}

double Estimator::sampled(std::span<const double> params, int shots, std::uint64_t seed) const {
  const auto draws = sample(probabilities(params), shots, seed);
  double total = 0.0;
  for (Bits z : draws) total += costs_[z];
  return total / static_cast<double>(shots);
}

double Estimator::expectation(std::span<const double> params, const ExpectationMode& mode) const {
  if (const auto* s = std::get_if<SampledMode>(&mode)) return sampled(params, s->shots, s->seed);
  return exact(params);
}

double expectation(const Circuit& circuit, std::span<const double> params,
                   const CostFunction& cost, const ExpectationMode& mode) {
  return Estimator(circuit, cost).expectation(params, mode);
}

namespace {

// Lowest index among the maxima.
Bits most_probable(std::span<const double> probs) {
  Bits arg = 0;
  for (Bits z = 1; z < probs.size(); ++z)
    if (probs[z] > probs[arg]) arg = z;
  return arg;
}

ConvergenceRecord run_trial(const Estimator& estimator, const CostFunction& cost,
                            const VqeOptions& options, int trial) {
  const auto start = std::chrono::steady_clock::now();
  ConvergenceRecord rec;
  rec.trial = trial;
  rec.seed = mix_seed(options.seed, static_cast<std::uint64_t>(trial));
  rec.initial_params = random_parameters(estimator.circuit().n_params(), rec.seed);

  std::uint64_t calls = 0;
  const auto* sampled = std::get_if<SampledMode>(&options.mode);
  const std::uint64_t shot_seed = sampled ? mix_seed(sampled->seed, rec.seed) : 0;
  Objective objective = [&](std::span<const double> theta) {
    const auto call = calls++;
    const auto probs = estimator.probabilities(theta);
    rec.evaluation_feasible.push_back(cost.feasible(most_probable(probs)));
    if (!sampled) return estimator.mean_cost(probs);
    double total = 0.0;
    for (Bits z : sample(probs, sampled->shots, mix_seed(shot_seed, call)))
      total += estimator.costs()[z];
    return total / static_cast<double>(sampled->shots);
  };

  auto config = options.optimizer;
  config.spsa.seed = mix_seed(config.spsa.seed, rec.seed);
  auto result = minimize(objective, rec.initial_params, config);

  rec.history = std::move(result.history);
  rec.converged = result.converged;
  const auto best = std::min_element(
      rec.history.begin(), rec.history.end(),
      [](const Evaluation& a, const Evaluation& b) { return a.value < b.value; });
  rec.best_expectation = best->value;
  rec.best_params = best->x;

  const auto probs = estimator.probabilities(rec.best_params);
  const Bits arg = most_probable(probs);
  rec.decoded_basis = arg;
  rec.decoded_probability = probs[arg];
  rec.answer = cost.decode(arg);
  rec.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace

std::vector<ConvergenceRecord> run_vqe(const Estimator& estimator, const CostFunction& cost,
                                       const VqeOptions& options) {
  if (options.trials < 1) throw std::invalid_argument("run_vqe: trials must be >= 1");
  if (options.threads < 1) throw std::invalid_argument("run_vqe: threads must be >= 1");
  if (const auto* s = std::get_if<SampledMode>(&options.mode); s && s->shots < 1)
    throw std::invalid_argument("run_vqe: shots must be >= 1");
  if (estimator.circuit().n_params() < 1)
    throw std::invalid_argument("run_vqe: circuit has no parameters");
  options.optimizer.validate();

  std::vector<ConvergenceRecord> records(static_cast<std::size_t>(options.trials));
  std::vector<std::exception_ptr> errors(records.size());
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int t = next++; t < options.trials; t = next++) {
      try {
        records[t] = run_trial(estimator, cost, options, t);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  const int n_threads = std::min(options.threads, options.trials);
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return records;
}

std::vector<ConvergenceRecord> run_vqe(const Circuit& circuit, const CostFunction& cost,
                                       const VqeOptions& options) {
  return run_vqe(Estimator(circuit, cost), cost, options);
}

}  // namespace psvqe
