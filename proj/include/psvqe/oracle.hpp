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
#include <string>
#include <vector>

#include "psvqe/ansatz.hpp"
#include "psvqe/circuit.hpp"
#include "psvqe/cost.hpp"

namespace psvqe {

// Brute-force ground truth. Nothing here goes through the simulator except
// `support`, which only observes circuit outputs.

inline constexpr int kBruteForceMaxBits = 24;

struct MinResult {
  double value = 0.0;
  std::vector<Bits> argmin;  // ascending
};

/// Exhaustive minimum over all 2^n bitstrings. Bitstrings within `tolerance`
/// of the minimum count as minimisers.
MinResult brute_force_min(const CostFunction& cost, double tolerance = 1e-9);

struct FeasibleAnswer {
  Bits bits = 0;
  double objective = 0.0;
  std::vector<Vertex> answer;  // tour or sorted cover
};

inline constexpr int kMaxEnumeratedCities = 6;
inline constexpr int kMaxEnumeratedCoverVertices = 16;

/// All tours (as permutation matrices, N <= 6) or all vertex covers
/// (N <= 16), with their bare objective computed directly from the graph.
std::vector<FeasibleAnswer> enumerate_feasible(ProblemKind kind, const Graph& graph);

/// Main-register bases seen with probability above epsilon across parameter
/// draws. Draws are uniform in [0, 2pi) plus the all-0 and all-pi/2 probes.
/// This is a sampling procedure: a basis reachable only on a measure-zero
/// parameter set can be missed.
struct SupportReport {
  int n_main = 0;
  int draws = 0;  // random draws, excluding the two probes
  double epsilon = 0.0;
  std::vector<Bits> basis_set;    // ascending
  std::vector<Bits> always_zero;  // ascending
  /// Largest |amplitude| (sqrt of marginal probability) seen on always_zero.
  double max_zero_amplitude = 0.0;

  [[nodiscard]] bool contains(Bits z) const;
};

SupportReport support(const Circuit& circuit, int n_main, int draws, std::uint64_t seed,
                      double epsilon = 1e-9);

/// One resource comparison against a closed-form table entry.
struct CountCheck {
  std::string ansatz;
  int n = 0;      // qubits in the main register
  int depth = 0;  // Ry baseline only
  std::string resource;
  int observed = 0;
  double expected = 0.0;
  bool asserted = true;  // false: informational only
  [[nodiscard]] bool pass() const { return !asserted || observed == expected; }
};

/// Closed-form resource counts for `kind` at main-register size n (depth is
/// used by the Ry baseline). Order: params, one-qubit, two-qubit, cswap.
std::vector<CountCheck> expected_counts(AnsatzKind kind, int n, int depth = 0);

/// Compares gate_counts(circuit) against expected_counts(kind, n, depth).
std::vector<CountCheck> verify_counts(const Circuit& circuit, AnsatzKind kind, int depth = 0);

/// Builds every implemented ansatz for N = n_min..n_max (TSP: n = N^2; MVC
/// on K_N: n = N; Ry over both sizes for depth 0..max_depth) and checks it.
std::vector<CountCheck> verify_table_counts(int n_min = 2, int n_max = 8, int max_depth = 3);

}  // namespace psvqe
