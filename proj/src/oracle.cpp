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

#include "psvqe/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "psvqe/state_vector.hpp"
#include "psvqe/vqe.hpp"

namespace psvqe {

MinResult brute_force_min(const CostFunction& cost, double tolerance) {
  if (cost.n_bits < 1 || cost.n_bits > kBruteForceMaxBits)
    throw std::invalid_argument("brute_force_min: n_bits must be in [1, " +
                                std::to_string(kBruteForceMaxBits) + "]");
  const Bits total = Bits{1} << cost.n_bits;
  std::vector<double> values(total);
  double best = cost.evaluate(0);
  for (Bits z = 0; z < total; ++z) {
    values[z] = cost.evaluate(z);
    best = std::min(best, values[z]);
  }
  MinResult result{best, {}};
  const double band = tolerance * std::max(1.0, std::abs(best));
  for (Bits z = 0; z < total; ++z)
    if (values[z] <= best + band) result.argmin.push_back(z);
  return result;
}

std::vector<FeasibleAnswer> enumerate_feasible(ProblemKind kind, const Graph& graph) {
  const int n = graph.n_vertices();
  std::vector<FeasibleAnswer> out;
  if (kind == ProblemKind::Tsp) {
    if (n < 2 || n > kMaxEnumeratedCities)
      throw std::invalid_argument("enumerate_feasible: tours need 2 <= N <= " +
                                  std::to_string(kMaxEnumeratedCities));
    std::vector<Vertex> tour(n);
    std::iota(tour.begin(), tour.end(), 0);
    do {
      double length = 0.0;
      for (int p = 0; p < n; ++p) {
        const auto w = graph.weight(tour[p], tour[(p + 1) % n]);
        length += w ? *w : std::numeric_limits<double>::infinity();
      }
      // Permutation matrix built bit by bit, independent of encode_tsp.
      Bits z = 0;
      for (int p = 0; p < n; ++p) {
        const int var = p * n + tour[p];
        z |= Bits{1} << (n * n - 1 - var);
      }
      out.push_back({z, length, tour});
    } while (std::next_permutation(tour.begin(), tour.end()));
    return out;
  }

  if (n < 1 || n > kMaxEnumeratedCoverVertices)
    throw std::invalid_argument("enumerate_feasible: covers need 1 <= N <= " +
                                std::to_string(kMaxEnumeratedCoverVertices));
  for (Bits z = 0; z < (Bits{1} << n); ++z) {
    bool covered = true;
    for (const auto& e : graph.edges()) {
      const bool xu = (z >> (n - 1 - e.u)) & 1U;
      const bool xv = (z >> (n - 1 - e.v)) & 1U;
      if (!xu && !xv) {
        covered = false;
        break;
      }
    }
    if (!covered) continue;
    std::vector<Vertex> cover;
    for (Vertex v = 0; v < n; ++v)
      if ((z >> (n - 1 - v)) & 1U) cover.push_back(v);
    out.push_back({z, static_cast<double>(cover.size()), cover});
  }
  return out;
}

bool SupportReport::contains(Bits z) const {
  return std::binary_search(basis_set.begin(), basis_set.end(), z);
}

SupportReport support(const Circuit& circuit, int n_main, int draws, std::uint64_t seed,
                      double epsilon) {
  if (draws < 1) throw std::invalid_argument("support: draws must be >= 1");
  if (n_main < 1 || n_main > circuit.n_qubits())
    throw std::invalid_argument("support: n_main out of range");
  const std::size_t dim = std::size_t{1} << n_main;
  std::vector<double> max_prob(dim, 0.0);

  auto observe = [&](const std::vector<double>& theta) {
    const auto probs = n_main == circuit.n_main()
                           ? run_probabilities(circuit, theta)
                           : main_register_probabilities(run(circuit, theta), n_main);
    for (std::size_t z = 0; z < dim; ++z) max_prob[z] = std::max(max_prob[z], probs[z]);
  };

  const auto n_params = static_cast<std::size_t>(circuit.n_params());
  observe(std::vector<double>(n_params, 0.0));
  observe(std::vector<double>(n_params, std::numbers::pi / 2));
  for (int d = 0; d < draws; ++d)
    observe(random_parameters(circuit.n_params(), mix_seed(seed, static_cast<std::uint64_t>(d))));

  SupportReport report;
  report.n_main = n_main;
  report.draws = draws;
  report.epsilon = epsilon;
  double max_zero = 0.0;
  for (std::size_t z = 0; z < dim; ++z) {
    if (max_prob[z] > epsilon) {
      report.basis_set.push_back(z);
    } else {
      report.always_zero.push_back(z);
      max_zero = std::max(max_zero, max_prob[z]);
    }
  }
  report.max_zero_amplitude = std::sqrt(max_zero);
  return report;
}

std::vector<CountCheck> expected_counts(AnsatzKind kind, int n, int depth) {
  const double nn = n;
  const double root = std::sqrt(nn);
  const std::string name = to_string(kind);
  auto row = [&](const char* what, double expected, bool asserted = true) {
    return CountCheck{name, n, depth, what, 0, expected, asserted};
  };
  switch (kind) {
    case AnsatzKind::Proposed1:
      return {row("params", nn - root), row("one_qubit", 2 * nn - root),
              row("two_qubit", 2 * nn - 2 * root), row("cswap", 0)};
    case AnsatzKind::Proposed4:
      // Only the parameter count is asserted; the gate rows are informational.
      return {row("params", 0.5 * nn - 0.5 * root), row("one_qubit", nn - 1, false),
              row("two_qubit", nn - root + 2, false),
              row("cswap", nn * root / 3 - nn / 2 + root / 6 - 1, false)};
    case AnsatzKind::MvcTree:
      return {row("params", nn), row("one_qubit", 3 * nn - 2), row("two_qubit", nn - 1),
              row("cswap", 0)};
    case AnsatzKind::RyBaseline:
      return {row("params", (depth + 1) * nn), row("one_qubit", (depth + 1) * nn),
              row("two_qubit", depth * (nn - 1)), row("cswap", 0)};
  }
  return {};
}

std::vector<CountCheck> verify_counts(const Circuit& circuit, AnsatzKind kind, int depth) {
  auto checks = expected_counts(kind, circuit.n_main(), depth);
  const auto counts = gate_counts(circuit);
  const int observed[] = {counts.params, counts.one_qubit, counts.two_qubit, counts.cswap};
  for (std::size_t i = 0; i < checks.size(); ++i) checks[i].observed = observed[i];
  return checks;
}

std::vector<CountCheck> verify_table_counts(int n_min, int n_max, int max_depth) {
  std::vector<CountCheck> all;
  auto add = [&](std::vector<CountCheck> rows) {
    all.insert(all.end(), rows.begin(), rows.end());
  };
  for (int big_n = n_min; big_n <= n_max; ++big_n) {
    add(verify_counts(build_tsp_proposed1(big_n), AnsatzKind::Proposed1));
    add(verify_counts(build_tsp_proposed4(big_n), AnsatzKind::Proposed4));
    const auto k = complete_graph(big_n, static_cast<std::uint64_t>(big_n));
    add(verify_counts(build_mvc_ansatz(k, spanning_tree(k)), AnsatzKind::MvcTree));
    for (int d = 0; d <= max_depth; ++d) {
      add(verify_counts(build_ry_baseline(big_n, d), AnsatzKind::RyBaseline, d));
      add(verify_counts(build_ry_baseline(big_n * big_n, d), AnsatzKind::RyBaseline, d));
    }
  }
  return all;
}

}  // namespace psvqe
