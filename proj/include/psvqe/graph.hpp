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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace psvqe {

/// Vertex id. Internally 0-based; files and printed output use 1-based labels.
using Vertex = int;

struct Edge {
  Vertex u = 0;  // u < v
  Vertex v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted undirected simple graph. Edges are stored canonically (u < v) in
/// insertion order.
class Graph {
 public:
  explicit Graph(int n_vertices = 0);

  /// Adds {u, v}. Throws on self-loops, out-of-range endpoints, duplicates,
  /// and negative or non-finite weights.
  void add_edge(Vertex u, Vertex v, double weight = 1.0);

  [[nodiscard]] int n_vertices() const { return n_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] std::optional<double> weight(Vertex u, Vertex v) const;
  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const { return weight(u, v).has_value(); }
  /// Neighbours in ascending order.
  [[nodiscard]] std::vector<Vertex> neighbours(Vertex u) const;
  [[nodiscard]] double total_weight() const;
  [[nodiscard]] bool connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::optional<double>> matrix_;  // n*n, symmetric
};

/// Rooted tree over the vertices of a graph. `edges` lists (parent, child)
/// pairs in breadth-first discovery order, so a parent always appears as a
/// child (or as the root) before it appears as a parent.
struct SpanningTree {
  Vertex root = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

/// BFS tree rooted at vertex 0 (label 1), visiting neighbours in ascending
/// order. Throws std::invalid_argument if the graph is disconnected.
SpanningTree spanning_tree(const Graph& graph);

/// Throws unless `tree` is a spanning tree of `graph`.
void validate_spanning_tree(const Graph& graph, const SpanningTree& tree);

/// K_N with explicit weights listed in lexicographic (u, v) order, u < v.
Graph complete_graph(int n, std::span<const double> weights);
/// K_N with weights drawn uniformly from [1, 10) using `seed`.
Graph complete_graph(int n, std::uint64_t seed);

Graph path_graph(int n);

/// Six vertices: 4-cycle 1-2-3-4-1 with tail 4-5-6.
Graph builtin_mvc_graph();

/// Text format:
///   vertices N
///   u v [weight]      (1-based labels, weight defaults to 1)
/// Blank lines and '#' comments are ignored.
Graph parse_graph(std::istream& in);
Graph load_graph(const std::string& path);
void write_graph(std::ostream& out, const Graph& graph);

}  // namespace psvqe
