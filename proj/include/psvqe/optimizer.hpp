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
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace psvqe {

using Objective = std::function<double(std::span<const double>)>;

/// One objective call. `index` counts calls from 0.
struct Evaluation {
  int index = 0;
  std::vector<double> x;
  double value = 0.0;

  friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

struct OptimizeResult {
  std::vector<double> x_best;
  double f_best = 0.0;
  std::vector<Evaluation> history;
  bool converged = false;  // stopped on tolerance rather than budget
};

/// Raised when the objective returns NaN or infinity.
class NonFiniteObjective : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OptimizerKind { NelderMead, Spsa };

const char* to_string(OptimizerKind kind);

struct NelderMeadOptions {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  double initial_step = 0.1;  // radians per coordinate
  /// Convergence also needs every vertex within this distance (max norm) of
  /// the best one.
  double x_tolerance = 1e-4;
};

/// Gains a_k = a / (k + 1 + stability)^alpha, c_k = c / (k + 1)^gamma.
struct SpsaOptions {
  double a = 0.2;
  double c = 0.1;
  double alpha = 0.602;
  double gamma = 0.101;
  double stability = -1.0;  // negative: max_evals / 20
  std::uint64_t seed = 0;
};

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::NelderMead;
  int max_evals = 1000;
  /// Nelder-Mead stops once max f - min f over the simplex drops below this
  /// and the simplex has collapsed to within nelder_mead.x_tolerance.
  double tolerance = 1e-10;
  NelderMeadOptions nelder_mead;
  SpsaOptions spsa;

  /// Throws std::invalid_argument on out-of-range settings.
  void validate() const;
};

/// Simplex search started from x0 and x0 + initial_step * e_i. Stops at
/// max_evals or when the simplex value spread falls below the tolerance and
/// the simplex is smaller than x_tolerance.
/// x_best/f_best is the best evaluated vertex.
OptimizeResult nelder_mead(const Objective& objective, std::span<const double> x0,
                           const OptimizerConfig& config);

/// Simultaneous-perturbation stochastic approximation with Rademacher
/// perturbations drawn from spsa.seed. Two evaluations per step plus one final
/// evaluation of the last iterate, which is returned as x_best/f_best.
OptimizeResult spsa(const Objective& objective, std::span<const double> x0,
                    const OptimizerConfig& config);

OptimizeResult minimize(const Objective& objective, std::span<const double> x0,
                        const OptimizerConfig& config);

}  // namespace psvqe
