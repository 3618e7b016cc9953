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

#include "psvqe/cost.hpp"

#include <bit>
#include <memory>
#include <stdexcept>

namespace psvqe {
namespace {

// x[v][p] unpacked into a dense 0/1 matrix, row-major by position.
std::vector<unsigned char> unpack_tsp(Bits z, int n) {
  std::vector<unsigned char> x(static_cast<std::size_t>(n) * n);
  for (int p = 0; p < n; ++p)
    for (Vertex v = 0; v < n; ++v) x[p * n + v] = bit_at(z, n * n, tsp_qubit(n, v, p));
  return x;
}

struct TspModel {
  int n = 0;
  double penalty = 0.0;
  std::vector<double> w;  // n*n, absent edges weigh `penalty`

  double objective(const std::vector<unsigned char>& x) const {
    double total = 0.0;
    for (int p = 0; p < n; ++p) {
      const int next = (p + 1) % n;
      for (Vertex u = 0; u < n; ++u) {
        if (!x[p * n + u]) continue;
        for (Vertex v = 0; v < n; ++v)
          if (v != u && x[next * n + v]) total += w[u * n + v];
      }
    }
    return total;
  }

  double violation(const std::vector<unsigned char>& x) const {
    double total = 0.0;
    for (int p = 0; p < n; ++p) {
      int s = 0;
      for (Vertex v = 0; v < n; ++v) s += x[p * n + v];
      total += static_cast<double>((s - 1) * (s - 1));
    }
    for (Vertex v = 0; v < n; ++v) {
      int s = 0;
      for (int p = 0; p < n; ++p) s += x[p * n + v];
      total += static_cast<double>((s - 1) * (s - 1));
    }
    return total;
  }
};

}  // namespace

const char* to_string(ProblemKind kind) {
  return kind == ProblemKind::Tsp ? "tsp" : "mvc";
}

std::vector<double> cost_table(const CostFunction& cost) {
  if (cost.n_bits < 1 || cost.n_bits > 26)
    throw std::invalid_argument("cost_table: n_bits must be in [1, 26]");
  std::vector<double> table(std::size_t{1} << cost.n_bits);
  for (Bits z = 0; z < table.size(); ++z) table[z] = cost.evaluate(z);
  return table;
}

double default_tsp_penalty(const Graph& graph) { return 1.0 + graph.total_weight(); }

CostFunction tsp_cost(const Graph& graph, double penalty) {
  const int n = graph.n_vertices();
  if (n < 2) throw std::invalid_argument("tsp_cost: need at least 2 cities");
  if (n * n > 62) throw std::invalid_argument("tsp_cost: too many cities for 64-bit encoding");
  if (!(penalty > graph.total_weight()))
    throw std::invalid_argument("tsp_cost: penalty must exceed the total edge weight");

  auto model = std::make_shared<TspModel>();
  model->n = n;
  model->penalty = penalty;
  model->w.assign(static_cast<std::size_t>(n) * n, penalty);
  for (const auto& e : graph.edges()) {
    model->w[e.u * n + e.v] = e.weight;
    model->w[e.v * n + e.u] = e.weight;
  }

  CostFunction cost;
  cost.kind = ProblemKind::Tsp;
  cost.n_bits = n * n;
  cost.penalty = penalty;
  cost.objective = [model](Bits z) { return model->objective(unpack_tsp(z, model->n)); };
  cost.evaluate = [model](Bits z) {
    const auto x = unpack_tsp(z, model->n);
    return model->objective(x) + model->penalty * model->violation(x);
  };
  cost.feasible = [n](Bits z) { return decode_tsp(z, n).has_value(); };
  cost.decode = [n](Bits z) { return decode_tsp(z, n); };
  return cost;
}

CostFunction tsp_cost(const Graph& graph) {
  return tsp_cost(graph, default_tsp_penalty(graph));
}

std::optional<Tour> decode_tsp(Bits z, int n_cities) {
  const int n = n_cities;
  Tour tour(n, -1);
  std::vector<bool> used(n, false);
  for (int p = 0; p < n; ++p) {
    for (Vertex v = 0; v < n; ++v) {
      if (!bit_at(z, n * n, tsp_qubit(n, v, p))) continue;
      if (tour[p] != -1 || used[v]) return std::nullopt;
      tour[p] = v;
      used[v] = true;
    }
    if (tour[p] == -1) return std::nullopt;
  }
  return tour;
}

Bits encode_tsp(std::span<const Vertex> tour) {
  const int n = static_cast<int>(tour.size());
  Bits z = 0;
  for (int p = 0; p < n; ++p) {
    if (tour[p] < 0 || tour[p] >= n) throw std::invalid_argument("encode_tsp: bad vertex");
    z |= Bits{1} << (n * n - 1 - tsp_qubit(n, tour[p], p));
  }
  return z;
}

double tour_length(const Graph& graph, std::span<const Vertex> tour) {
  double total = 0.0;
  const auto n = tour.size();
  for (std::size_t p = 0; p < n; ++p) {
    const auto w = graph.weight(tour[p], tour[(p + 1) % n]);
    if (!w) throw std::invalid_argument("tour_length: tour uses a missing edge");
    total += *w;
  }
  return total;
}

bool is_vertex_cover(const Graph& graph, Bits z) { return uncovered_edges(graph, z) == 0; }

int uncovered_edges(const Graph& graph, Bits z) {
  const int n = graph.n_vertices();
  int count = 0;
  for (const auto& e : graph.edges())
    if (!bit_at(z, n, e.u) && !bit_at(z, n, e.v)) ++count;
  return count;
}

std::optional<std::vector<Vertex>> decode_cover(const Graph& graph, Bits z) {
  if (!is_vertex_cover(graph, z)) return std::nullopt;
  std::vector<Vertex> cover;
  for (Vertex v = 0; v < graph.n_vertices(); ++v)
    if (bit_at(z, graph.n_vertices(), v)) cover.push_back(v);
  return cover;
}

CostFunction mvc_cost(const Graph& graph, double penalty) {
  const int n = graph.n_vertices();
  if (n < 1 || n > 63) throw std::invalid_argument("mvc_cost: vertex count out of range");
  if (!(penalty > 1.0)) throw std::invalid_argument("mvc_cost: penalty must exceed 1");
  auto g = std::make_shared<const Graph>(graph);

  CostFunction cost;
  cost.kind = ProblemKind::Mvc;
  cost.n_bits = n;
  cost.penalty = penalty;
  cost.objective = [](Bits z) { return static_cast<double>(std::popcount(z)); };
  cost.evaluate = [g, penalty](Bits z) {
    return static_cast<double>(std::popcount(z)) + penalty * uncovered_edges(*g, z);
  };
  cost.feasible = [g](Bits z) { return is_vertex_cover(*g, z); };
  cost.decode = [g](Bits z) { return decode_cover(*g, z); };
  return cost;
}

std::string format_vertices(const std::optional<std::vector<Vertex>>& vertices) {
  if (!vertices) return "infeasible";
  std::string out = "(";
  for (std::size_t i = 0; i < vertices->size(); ++i) {
    if (i) out += ' ';
    out += std::to_string((*vertices)[i] + 1);
  }
  return out + ")";
}

}  // namespace psvqe
