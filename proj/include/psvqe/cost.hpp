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

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "psvqe/circuit.hpp"
#include "psvqe/graph.hpp"

namespace psvqe {

enum class ProblemKind { Tsp, Mvc };

const char* to_string(ProblemKind kind);

/// Value of binary variable `i` in an n-bit basis index (variable 0 is the
/// most significant bit).
[[nodiscard]] inline bool bit_at(Bits z, int n_bits, int i) {
  return (z >> (n_bits - 1 - i)) & 1U;
}

/// Diagonal cost Hamiltonian seen as a map from basis index to energy.
/// `evaluate` = `objective` + penalty terms; for feasible strings the penalty
/// vanishes. `decode` yields the tour (vertex per position) or the cover
/// (sorted vertex list) for feasible strings and nullopt otherwise.
struct CostFunction {
  ProblemKind kind = ProblemKind::Mvc;
  int n_bits = 0;
  double penalty = 0.0;
  std::function<double(Bits)> objective;
  std::function<double(Bits)> evaluate;
  std::function<bool(Bits)> feasible;
  std::function<std::optional<std::vector<Vertex>>(Bits)> decode;
};

/// Energies of every basis index; n_bits must not exceed 26.
std::vector<double> cost_table(const CostFunction& cost);

// --- TSP ---------------------------------------------------------------
//
// N^2 variables x[v][p] (vertex v visited at position p). Variable x[v][p]
// lives on qubit p*N + v, so each position owns a contiguous row register.

[[nodiscard]] inline int tsp_qubit(int n_cities, Vertex v, int position) {
  return position * n_cities + v;
}

/// 1 + sum of all edge weights: one unit of constraint violation costs more
/// than any tour.
double default_tsp_penalty(const Graph& graph);

/// Tour length plus A * sum_p (sum_v x[v][p] - 1)^2 + A * sum_v (sum_p x[v][p] - 1)^2.
/// Missing edges weigh A. Requires A > total edge weight.
CostFunction tsp_cost(const Graph& graph, double penalty);
CostFunction tsp_cost(const Graph& graph);

using Tour = std::vector<Vertex>;

/// Vertex at each position if `z` is a permutation matrix, else nullopt.
std::optional<Tour> decode_tsp(Bits z, int n_cities);
Bits encode_tsp(std::span<const Vertex> tour);
/// Closed-tour length, wrapping from the last position to the first.
double tour_length(const Graph& graph, std::span<const Vertex> tour);

// --- Minimum vertex cover ------------------------------------------------

inline constexpr double kDefaultMvcPenalty = 2.0;

/// popcount(x) + A * #uncovered edges. Requires A > 1.
CostFunction mvc_cost(const Graph& graph, double penalty = kDefaultMvcPenalty);

bool is_vertex_cover(const Graph& graph, Bits z);
int uncovered_edges(const Graph& graph, Bits z);
std::optional<std::vector<Vertex>> decode_cover(const Graph& graph, Bits z);

/// "(1 2 3 4)" with 1-based labels, or "infeasible".
std::string format_vertices(const std::optional<std::vector<Vertex>>& vertices);

}  // namespace psvqe
