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

#include <span>
#include <string>
#include <vector>

#include "psvqe/circuit.hpp"
#include "psvqe/graph.hpp"

namespace psvqe {

struct GateCounts {
  int params = 0;
  int one_qubit = 0;  // X + Ry
  int two_qubit = 0;  // CZ + CNOT
  int cswap = 0;

  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

/// Counts by inspection; `params` is the number of distinct parameter indices
/// referenced by Ry gates.
GateCounts gate_counts(const Circuit& circuit);

enum class AnsatzKind { Proposed1, Proposed4, MvcTree, RyBaseline };

const char* to_string(AnsatzKind kind);

/// Parameterized W-state chain over `qubits`.
///
/// X on qubits[0]; for k = 1..m-1 the block Ry(t_k) on qubits[k],
/// CZ(qubits[k-1], qubits[k]), Ry(-t_k) on qubits[k]; then CNOT(qubits[k] ->
/// qubits[k-1]) for k = 1..m-1. Parameter t_k is index param_offset + k - 1.
/// The output is sum_k a_k |one-hot at k> with
///   a_k = (prod_{j<k} -sin t_j) * cos t_k,   cos t_m read as 1.
void append_w_chain(Circuit& circuit, std::span<const Qubit> qubits, int param_offset);

/// Standalone m-qubit chain over qubits 0..m-1 with m-1 parameters.
Circuit build_w_chain(int m);

/// One W chain per position register: N^2 qubits, N(N-1) parameters. Every
/// output basis has exactly one 1 per position.
Circuit build_tsp_proposed1(int n_cities);

/// Permutation-preserving ansatz on N^2 main qubits and N(N-1)/2 ancillas.
///
/// Prepares the identity permutation, then for each position pair (r, r'),
/// r < r' in lexicographic order, rotates a fresh ancilla by Ry(t) and uses
/// it to control a swap of rows r and r' (N CSWAPs). The main-register
/// marginal is always supported on permutation matrices.
Circuit build_tsp_proposed4(int n_cities);

/// Parameters that make the Proposed-4 circuit output `tour` with
/// probability 1: t = pi on the transpositions a selection sort of the tour
/// would perform, 0 elsewhere.
std::vector<double> proposed4_parameters_for(std::span<const Vertex> tour);

/// Vertex-cover ansatz over a spanning tree: Ry(t_root) on the root, then for
/// each tree edge (u -> v) in order the VC block Ry(t_e) on v, CZ(u, v),
/// Ry(-t_e) on v, X on v. Every output basis covers every tree edge.
Circuit build_mvc_ansatz(const Graph& graph, const SpanningTree& tree);

/// Hardware-efficient baseline: depth+1 Ry layers with one fresh parameter
/// per qubit, separated by CNOT(q_k, q_{k+1}) ladders.
Circuit build_ry_baseline(int n_qubits, int depth);

}  // namespace psvqe
