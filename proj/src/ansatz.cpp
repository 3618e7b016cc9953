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

#include "psvqe/ansatz.hpp"

#include "psvqe/cost.hpp"

#include <algorithm>
#include <numbers>
#include <set>
#include <stdexcept>

namespace psvqe {

GateCounts gate_counts(const Circuit& circuit) {
  GateCounts counts;
  std::set<int> params;
  for (const auto& op : circuit.ops()) {
    switch (op.kind) {
      case GateKind::X: ++counts.one_qubit; break;
      case GateKind::Ry:
        ++counts.one_qubit;
        params.insert(op.angle->index);
        break;
      case GateKind::CZ:
      case GateKind::CNOT: ++counts.two_qubit; break;
      case GateKind::CSWAP: ++counts.cswap; break;
    }
  }
  counts.params = static_cast<int>(params.size());
  return counts;
}

const char* to_string(AnsatzKind kind) {
  switch (kind) {
    case AnsatzKind::Proposed1: return "proposed1";
    case AnsatzKind::Proposed4: return "proposed4";
    case AnsatzKind::MvcTree: return "proposed";
    case AnsatzKind::RyBaseline: return "ry";
  }
  return "?";
}

void append_w_chain(Circuit& circuit, std::span<const Qubit> qubits, int param_offset) {
  const int m = static_cast<int>(qubits.size());
  if (m < 1) throw std::invalid_argument("w chain: needs at least one qubit");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j)
      if (qubits[i] == qubits[j]) throw std::invalid_argument("w chain: duplicate qubit");
  if (param_offset < 0) throw std::invalid_argument("w chain: negative parameter offset");

  circuit.reserve_params(param_offset + m - 1);
  circuit.x(qubits[0]);
  for (int k = 1; k < m; ++k) {
    const ParamExpr t{param_offset + k - 1, 1, 1.0};
    circuit.ry(qubits[k], t);
    circuit.cz(qubits[k - 1], qubits[k]);
    circuit.ry(qubits[k], t.negated());
  }
  for (int k = 1; k < m; ++k) circuit.cnot(qubits[k], qubits[k - 1]);
}

Circuit build_w_chain(int m) {
  if (m < 1) throw std::invalid_argument("build_w_chain: m must be >= 1");
  Circuit c(m);
  std::vector<Qubit> qubits(m);
  for (int i = 0; i < m; ++i) qubits[i] = i;
  append_w_chain(c, qubits, 0);
  return c;
}

Circuit build_tsp_proposed1(int n_cities) {
  const int n = n_cities;
  if (n < 2) throw std::invalid_argument("proposed1: need at least 2 cities");
  Circuit c(n * n);
  std::vector<Qubit> row(n);
  for (int p = 0; p < n; ++p) {
    for (Vertex v = 0; v < n; ++v) row[v] = tsp_qubit(n, v, p);
    append_w_chain(c, row, p * (n - 1));
  }
  return c;
}

Circuit build_tsp_proposed4(int n_cities) {
  const int n = n_cities;
  if (n < 2) throw std::invalid_argument("proposed4: need at least 2 cities");
  Circuit c(n * n, n * (n - 1) / 2);
  for (int p = 0; p < n; ++p) c.x(tsp_qubit(n, p, p));
  int k = 0;
  for (int r = 0; r < n; ++r) {
    for (int r2 = r + 1; r2 < n; ++r2, ++k) {
      const Qubit a = c.ancilla(k);
      c.ry(a, ParamExpr{c.add_param(), 1, 1.0});
      for (Vertex v = 0; v < n; ++v)
        c.cswap(a, tsp_qubit(n, v, r), tsp_qubit(n, v, r2));
    }
  }
  return c;
}

std::vector<double> proposed4_parameters_for(std::span<const Vertex> tour) {
  const int n = static_cast<int>(tour.size());
  if (n < 2) throw std::invalid_argument("proposed4_parameters_for: need at least 2 cities");
  std::vector<Vertex> sorted(tour.begin(), tour.end());
  std::ranges::sort(sorted);
  for (int i = 0; i < n; ++i)
    if (sorted[i] != i) throw std::invalid_argument("proposed4_parameters_for: not a permutation");

  // current[p] = vertex held by position p; starts at the identity.
  std::vector<Vertex> current(n);
  for (int p = 0; p < n; ++p) current[p] = p;
  std::vector<double> theta(static_cast<std::size_t>(n) * (n - 1) / 2, 0.0);
  int k = 0;
  for (int r = 0; r < n; ++r) {
    for (int r2 = r + 1; r2 < n; ++r2, ++k) {
      if (current[r] != tour[r] && current[r2] == tour[r]) {
        std::swap(current[r], current[r2]);
        theta[k] = std::numbers::pi;
      }
    }
  }
  return theta;
}

Circuit build_mvc_ansatz(const Graph& graph, const SpanningTree& tree) {
  if (!graph.connected()) throw std::invalid_argument("mvc ansatz: graph is not connected");
  validate_spanning_tree(graph, tree);
  Circuit c(graph.n_vertices());
  c.ry(tree.root, ParamExpr{c.add_param(), 1, 1.0});
  for (const auto& [u, v] : tree.edges) {
    const ParamExpr t{c.add_param(), 1, 1.0};
    c.ry(v, t);
    c.cz(u, v);
    c.ry(v, t.negated());
    c.x(v);
  }
  return c;
}

Circuit build_ry_baseline(int n_qubits, int depth) {
  if (n_qubits < 1) throw std::invalid_argument("ry baseline: need at least one qubit");
  if (depth < 0) throw std::invalid_argument("ry baseline: depth must be >= 0");
  Circuit c(n_qubits);
  for (int layer = 0; layer <= depth; ++layer) {
    if (layer > 0)
      for (Qubit q = 0; q + 1 < n_qubits; ++q) c.cnot(q, q + 1);
    for (Qubit q = 0; q < n_qubits; ++q) c.ry(q, ParamExpr{c.add_param(), 1, 1.0});
  }
  return c;
}

}  // namespace psvqe
