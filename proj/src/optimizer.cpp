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

#include "psvqe/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace psvqe {
namespace {

struct BudgetExhausted {};

// Wraps the objective: records every call, enforces the budget and rejects
// non-finite values.
class Recorder {
 public:
  Recorder(const Objective& f, int max_evals) : f_(f), max_evals_(max_evals) {}

  double operator()(std::span<const double> x) {
    if (static_cast<int>(history_.size()) >= max_evals_) throw BudgetExhausted{};
    const double value = f_(x);
    if (!std::isfinite(value)) {
      std::ostringstream msg;
      msg << "objective returned " << value << " at evaluation " << history_.size() << ", x = [";
      for (std::size_t i = 0; i < x.size(); ++i) msg << (i ? ", " : "") << x[i];
      msg << "]";
      throw NonFiniteObjective(msg.str());
    }
    history_.push_back({static_cast<int>(history_.size()), {x.begin(), x.end()}, value});
    return value;
  }

  [[nodiscard]] int remaining() const {
    return max_evals_ - static_cast<int>(history_.size());
  }
  std::vector<Evaluation>& history() { return history_; }

 private:
  const Objective& f_;
  int max_evals_;
  std::vector<Evaluation> history_;
};

void check_start(std::span<const double> x0) {
  if (x0.empty()) throw std::invalid_argument("optimizer: dimension must be >= 1");
  for (double v : x0)
    if (!std::isfinite(v)) throw std::invalid_argument("optimizer: non-finite start point");
}

}  // namespace

const char* to_string(OptimizerKind kind) {
  return kind == OptimizerKind::NelderMead ? "nelder-mead" : "spsa";
}

void OptimizerConfig::validate() const {
  if (max_evals < 1) throw std::invalid_argument("optimizer: max_evals must be >= 1");
  if (!(tolerance >= 0.0)) throw std::invalid_argument("optimizer: tolerance must be >= 0");
  const auto& nm = nelder_mead;
  if (!(nm.reflection > 0.0)) throw std::invalid_argument("nelder-mead: reflection must be > 0");
  if (!(nm.expansion > 1.0 && nm.expansion > nm.reflection))
    throw std::invalid_argument("nelder-mead: expansion must exceed max(1, reflection)");
  if (!(nm.contraction > 0.0 && nm.contraction < 1.0))
    throw std::invalid_argument("nelder-mead: contraction must be in (0, 1)");
  if (!(nm.shrink > 0.0 && nm.shrink < 1.0))
    throw std::invalid_argument("nelder-mead: shrink must be in (0, 1)");
  if (!(nm.initial_step != 0.0 && std::isfinite(nm.initial_step)))
    throw std::invalid_argument("nelder-mead: initial_step must be nonzero");
  if (!(nm.x_tolerance >= 0.0))
    throw std::invalid_argument("nelder-mead: x_tolerance must be >= 0");
  if (!(spsa.a > 0.0 && spsa.c > 0.0)) throw std::invalid_argument("spsa: gains must be > 0");
  if (!(spsa.alpha > 0.0 && spsa.gamma > 0.0))
    throw std::invalid_argument("spsa: exponents must be > 0");
}

OptimizeResult nelder_mead(const Objective& objective, std::span<const double> x0,
                           const OptimizerConfig& config) {
  config.validate();
  check_start(x0);
  const auto& opt = config.nelder_mead;
  const std::size_t n = x0.size();
  Recorder f(objective, config.max_evals);

  std::vector<std::vector<double>> simplex;
  std::vector<double> values;
  OptimizeResult result;

  try {
    simplex.emplace_back(x0.begin(), x0.end());
    values.push_back(f(simplex[0]));
    for (std::size_t i = 0; i < n; ++i) {
      auto v = simplex[0];
      v[i] += opt.initial_step;
      values.push_back(f(v));
      simplex.push_back(std::move(v));
    }

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), xr(n), xe(n), xc(n);
    auto affine = [&](std::vector<double>& out, const std::vector<double>& from,
                      const std::vector<double>& to, double t) {
      for (std::size_t i = 0; i < n; ++i) out[i] = from[i] + t * (to[i] - from[i]);
    };

    while (true) {
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
      {
        std::vector<std::vector<double>> s2;
        std::vector<double> v2;
        for (auto k : order) {
          s2.push_back(std::move(simplex[k]));
          v2.push_back(values[k]);
        }
        simplex = std::move(s2);
        values = std::move(v2);
      }
      double size = 0.0;
      for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t i = 0; i < n; ++i)
          size = std::max(size, std::abs(simplex[k][i] - simplex[0][i]));
      if (values[n] - values[0] < config.tolerance && size <= opt.x_tolerance) {
        result.converged = true;
        break;
      }
      if (f.remaining() <= 0) break;

      std::fill(centroid.begin(), centroid.end(), 0.0);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k][i];
      for (auto& c : centroid) c /= static_cast<double>(n);

      const auto& worst = simplex[n];
      affine(xr, centroid, worst, -opt.reflection);
      const double fr = f(xr);

      if (fr < values[0]) {
        affine(xe, centroid, xr, opt.expansion / opt.reflection);
        const double fe = f(xe);
        if (fe < fr) {
          simplex[n] = xe;
          values[n] = fe;
        } else {
          simplex[n] = xr;
          values[n] = fr;
        }
        continue;
      }
      if (fr < values[n - 1]) {
        simplex[n] = xr;
        values[n] = fr;
        continue;
      }

      bool shrink = false;
      if (fr < values[n]) {
        affine(xc, centroid, xr, opt.contraction);
        const double fc = f(xc);
        if (fc <= fr) {
          simplex[n] = xc;
          values[n] = fc;
        } else {
          shrink = true;
        }
      } else {
        affine(xc, centroid, worst, opt.contraction);
        const double fc = f(xc);
        if (fc < values[n]) {
          simplex[n] = xc;
          values[n] = fc;
        } else {
          shrink = true;
        }
      }
      if (shrink) {
        for (std::size_t k = 1; k <= n; ++k) {
          affine(simplex[k], simplex[0], simplex[k], opt.shrink);
          values[k] = f(simplex[k]);
        }
      }
    }
  } catch (const BudgetExhausted&) {
  }

  result.history = std::move(f.history());
  const auto best = std::min_element(
      result.history.begin(), result.history.end(),
      [](const Evaluation& a, const Evaluation& b) { return a.value < b.value; });
  result.x_best = best->x;
  result.f_best = best->value;
  return result;
}

OptimizeResult spsa(const Objective& objective, std::span<const double> x0,
                    const OptimizerConfig& config) {
  config.validate();
  check_start(x0);
  if (config.max_evals < 3) throw std::invalid_argument("spsa: max_evals must be >= 3");
  const auto& opt = config.spsa;
  const std::size_t n = x0.size();
  const double stability =
      opt.stability >= 0.0 ? opt.stability : static_cast<double>(config.max_evals) / 20.0;

  Recorder f(objective, config.max_evals);
  std::mt19937_64 rng(opt.seed);
  std::vector<double> x(x0.begin(), x0.end()), plus(n), minus(n), delta(n);

  // Keep one evaluation for the final iterate.
  for (int k = 0; f.remaining() >= 3; ++k) {
    const double ak = opt.a / std::pow(k + 1 + stability, opt.alpha);
    const double ck = opt.c / std::pow(k + 1, opt.gamma);
    for (std::size_t i = 0; i < n; ++i) {
      delta[i] = (rng() >> 63) ? 1.0 : -1.0;
      plus[i] = x[i] + ck * delta[i];
      minus[i] = x[i] - ck * delta[i];
    }
    const double fp = f(plus);
    const double fm = f(minus);
    const double slope = (fp - fm) / (2.0 * ck);
    for (std::size_t i = 0; i < n; ++i) x[i] -= ak * slope / delta[i];
  }

  OptimizeResult result;
  result.f_best = f(x);
  result.x_best = x;
  result.history = std::move(f.history());
  return result;
}

OptimizeResult minimize(const Objective& objective, std::span<const double> x0,
                        const OptimizerConfig& config) {
  return config.kind == OptimizerKind::NelderMead ? nelder_mead(objective, x0, config)
                                                  : spsa(objective, x0, config);
}

}  // namespace psvqe
