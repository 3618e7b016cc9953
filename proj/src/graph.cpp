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

#include "psvqe/graph.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>

namespace psvqe {

Graph::Graph(int n_vertices) : n_(n_vertices) {
  if (n_vertices < 0) throw std::invalid_argument("Graph: negative vertex count");
  matrix_.assign(static_cast<std::size_t>(n_) * n_, std::nullopt);
}

void Graph::add_edge(Vertex u, Vertex v, double weight) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("Graph: edge endpoint out of range");
  if (u == v) throw std::invalid_argument("Graph: self-loop");
  if (!std::isfinite(weight) || weight < 0.0)
    throw std::invalid_argument("Graph: weight must be finite and nonnegative");
  if (u > v) std::swap(u, v);
  if (matrix_[u * n_ + v]) throw std::invalid_argument("Graph: duplicate edge");
  edges_.push_back({u, v, weight});
  matrix_[u * n_ + v] = weight;
  matrix_[v * n_ + u] = weight;
}

std::optional<double> Graph::weight(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
  return matrix_[u * n_ + v];
}

std::vector<Vertex> Graph::neighbours(Vertex u) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v)
    if (matrix_[u * n_ + v]) out.push_back(v);
  return out;
}

double Graph::total_weight() const {
  double total = 0.0;
  for (const auto& e : edges_) total += e.weight;
  return total;
}

bool Graph::connected() const {
  if (n_ == 0) return false;
  std::vector<bool> seen(n_, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : neighbours(u))
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
  }
  return count == n_;
}

SpanningTree spanning_tree(const Graph& graph) {
  if (!graph.connected())
    throw std::invalid_argument("spanning_tree: graph is not connected");
  SpanningTree tree;
  tree.root = 0;
  std::vector<bool> seen(graph.n_vertices(), false);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = true;
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex v : graph.neighbours(u)) {
      if (seen[v]) continue;
      seen[v] = true;
      tree.edges.emplace_back(u, v);
      frontier.push(v);
    }
  }
  return tree;
}

void validate_spanning_tree(const Graph& graph, const SpanningTree& tree) {
  const int n = graph.n_vertices();
  if (tree.root < 0 || tree.root >= n)
    throw std::invalid_argument("spanning tree: root out of range");
  if (static_cast<int>(tree.edges.size()) != n - 1)
    throw std::invalid_argument("spanning tree: needs exactly N-1 edges");
  std::vector<bool> placed(n, false);
  placed[tree.root] = true;
  for (const auto& [parent, child] : tree.edges) {
    if (!graph.has_edge(parent, child))
      throw std::invalid_argument("spanning tree: edge not in graph");
    if (!placed[parent])
      throw std::invalid_argument("spanning tree: parent emitted before it is reached");
    if (placed[child])
      throw std::invalid_argument("spanning tree: vertex reached twice");
    placed[child] = true;
  }
}

Graph complete_graph(int n, std::span<const double> weights) {
  if (n < 2) throw std::invalid_argument("complete_graph: need at least 2 vertices");
  const auto expected = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (weights.size() != expected)
    throw std::invalid_argument("complete_graph: expected " + std::to_string(expected) +
                                " weights, got " + std::to_string(weights.size()));
  Graph g(n);
  std::size_t k = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v, weights[k++]);
  return g;
}

Graph complete_graph(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("complete_graph: need at least 2 vertices");
  std::mt19937_64 rng(seed);
  std::vector<double> weights(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (auto& w : weights) w = 1.0 + 9.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  return complete_graph(n, weights);
}

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph builtin_mvc_graph() {
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 0);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  return g;
}

Graph parse_graph(std::istream& in) {
  std::optional<Graph> graph;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("graph line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (first == "vertices") {
      int n = 0;
      if (graph) fail("duplicate 'vertices' header");
      if (!(fields >> n) || n < 1) fail("bad vertex count");
      graph.emplace(n);
      continue;
    }
    if (!graph) fail("edge before 'vertices N' header");
    int u = 0, v = 0;
    double w = 1.0;
    try {
      u = std::stoi(first);
    } catch (const std::exception&) {
      fail("expected vertex label, got '" + first + "'");
    }
    if (!(fields >> v)) fail("missing second endpoint");
    if (std::string token; fields >> token) {
      std::size_t used = 0;
      try {
        w = std::stod(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != token.size()) fail("bad weight '" + token + "'");
    }
    std::string extra;
    if (fields >> extra) fail("trailing field '" + extra + "'");
    try {
      graph->add_edge(u - 1, v - 1, w);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  if (!graph) throw std::invalid_argument("graph: missing 'vertices N' header");
  return *graph;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& graph) {
  out << "vertices " << graph.n_vertices() << '\n';
  for (const auto& e : graph.edges())
    out << e.u + 1 << ' ' << e.v + 1 << ' ' << std::setprecision(17) << e.weight << '\n';
}

}  // namespace psvqe
