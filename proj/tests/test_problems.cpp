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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include <doctest.h>

#include "psvqe/cost.hpp"
#include "psvqe/graph.hpp"

using namespace psvqe;

namespace {

// Weights 1..6 on K4 in (1,2) (1,3) (1,4) (2,3) (2,4) (3,4) order.
Graph k4() {
  const double w[] = {1, 4, 3, 2, 6, 5};
  return complete_graph(4, w);
}

// x[v][p] read from a basis index, written out directly from the layout
// (position-major rows, qubit 0 = MSB).
double reference_tsp(const Graph& g, double a, Bits z) {
  const int n = g.n_vertices();
  auto x = [&](int v, int p) { return static_cast<int>((z >> (n * n - 1 - (p * n + v))) & 1U); };
  double total = 0.0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      const double w = g.weight(u, v).value_or(a);
      for (int p = 0; p < n; ++p) total += w * x(u, p) * x(v, (p + 1) % n);
    }
  for (int p = 0; p < n; ++p) {
    int s = 0;
    for (int v = 0; v < n; ++v) s += x(v, p);
    total += a * (s - 1) * (s - 1);
  }
  for (int v = 0; v < n; ++v) {
    int s = 0;
    for (int p = 0; p < n; ++p) s += x(v, p);
    total += a * (s - 1) * (s - 1);
  }
  return total;
}

}  // namespace

TEST_CASE("graph construction and queries") {
  Graph g(3);
  g.add_edge(2, 0, 1.5);
  CHECK(g.edges()[0] == Edge{0, 2, 1.5});
  CHECK(g.weight(0, 2) == 1.5);
  CHECK(g.weight(2, 0) == 1.5);
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK_FALSE(g.connected());
  g.add_edge(0, 1);
  CHECK(g.connected());
  CHECK(g.neighbours(0) == std::vector<Vertex>{1, 2});
  CHECK(g.total_weight() == 2.5);
  CHECK_THROWS(g.add_edge(1, 1));
  CHECK_THROWS(g.add_edge(0, 3));
  CHECK_THROWS(g.add_edge(1, 0));
  CHECK_THROWS(g.add_edge(1, 2, -1.0));
  CHECK_THROWS(g.add_edge(1, 2, std::nan("")));
}

TEST_CASE("built-in vertex-cover graph and its BFS tree") {
  const auto g = builtin_mvc_graph();
  CHECK(g.n_vertices() == 6);
  CHECK(g.edges().size() == 6);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}, {4, 5}})
    CHECK(g.has_edge(u, v));
  const auto tree = spanning_tree(g);
  CHECK(tree.root == 0);
  const std::vector<std::pair<Vertex, Vertex>> want{{0, 1}, {0, 3}, {1, 2}, {3, 4}, {4, 5}};
  CHECK(tree.edges == want);
  CHECK_NOTHROW(validate_spanning_tree(g, tree));
  SpanningTree bad = tree;
  bad.edges[2] = {2, 3};
  CHECK_THROWS(validate_spanning_tree(g, bad));
  Graph split(3);
  split.add_edge(0, 1);
  CHECK_THROWS(spanning_tree(split));
}

TEST_CASE("spanning tree of a path and of K4") {
  const auto p = spanning_tree(path_graph(4));
  const std::vector<std::pair<Vertex, Vertex>> path_edges{{0, 1}, {1, 2}, {2, 3}};
  CHECK(p.edges == path_edges);
  const auto k = spanning_tree(k4());
  const std::vector<std::pair<Vertex, Vertex>> star{{0, 1}, {0, 2}, {0, 3}};
  CHECK(k.edges == star);
}

TEST_CASE("graph text format round trip and diagnostics") {
  std::istringstream in("# triangle\nvertices 3\n1 2 2.5\n2 3   # default weight\n\n3 1 4\n");
  const auto g = parse_graph(in);
  CHECK(g.n_vertices() == 3);
  CHECK(g.weight(0, 1) == 2.5);
  CHECK(g.weight(1, 2) == 1.0);
  CHECK(g.weight(0, 2) == 4.0);
  std::ostringstream out;
  write_graph(out, g);
  std::istringstream back(out.str());
  CHECK(parse_graph(back) == g);

  auto fails_at = [](const std::string& text, const std::string& needle) {
    std::istringstream s(text);
    try {
      parse_graph(s);
    } catch (const std::invalid_argument& e) {
      return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
  };
  CHECK(fails_at("vertices 3\n1 2\n1 4\n", "line 3"));
  CHECK(fails_at("vertices 3\n1 2 abc\n", "line 2"));
  CHECK(fails_at("vertices 3\n1 1\n", "line 2"));
  CHECK(fails_at("1 2\n", "line 1"));
  std::istringstream empty("");
  CHECK_THROWS(parse_graph(empty));
  CHECK_THROWS_AS(load_graph("/nonexistent/graph.txt"), std::runtime_error);
}

TEST_CASE("seeded complete graphs are reproducible") {
  const auto a = complete_graph(5, std::uint64_t{7});
  const auto b = complete_graph(5, std::uint64_t{7});
  const auto c = complete_graph(5, std::uint64_t{8});
  CHECK(a == b);
  CHECK_FALSE(a == c);
  for (const auto& e : a.edges()) {
    CHECK(e.weight >= 1.0);
    CHECK(e.weight < 10.0);
  }
  CHECK(a.edges().size() == 10);
}

TEST_CASE("TSP cost matches a direct evaluation") {
  const auto g = complete_graph(3, std::uint64_t{7});
  const double a = default_tsp_penalty(g);
  CHECK(a == doctest::Approx(1.0 + g.total_weight()));
  const auto cost = tsp_cost(g);
  CHECK(cost.n_bits == 9);
  for (Bits z = 0; z < 512; ++z)
    CHECK(cost.evaluate(z) == doctest::Approx(reference_tsp(g, a, z)).epsilon(1e-12));

  const auto g4 = k4();
  const auto c4 = tsp_cost(g4, 30.0);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 2000; ++i) {
    const Bits z = rng() & 0xFFFF;
    CHECK(c4.evaluate(z) == doctest::Approx(reference_tsp(g4, 30.0, z)).epsilon(1e-12));
  }
  CHECK_THROWS(tsp_cost(g4, g4.total_weight()));
}

TEST_CASE("TSP examples") {
  const auto g = k4();
  const auto cost = tsp_cost(g);
  const double a = cost.penalty;
  CHECK(cost.evaluate(0) == doctest::Approx(2 * 4 * a));

  const std::vector<Vertex> tour{0, 1, 2, 3};
  CHECK(tour_length(g, tour) == 11.0);
  const Bits z = encode_tsp(tour);
  CHECK(z == 0b1000010000100001);
  CHECK(cost.evaluate(z) == 11.0);
  CHECK(cost.objective(z) == 11.0);
  CHECK(cost.feasible(z));
  CHECK(decode_tsp(z, 4) == tour);
  CHECK(cost.decode(z) == std::optional<std::vector<Vertex>>(tour));

  const std::vector<Vertex> other{0, 2, 1, 3};
  CHECK(tour_length(g, other) == 4 + 2 + 6 + 3);
  const std::vector<Vertex> third{0, 1, 3, 2};
  CHECK(tour_length(g, third) == 1 + 6 + 5 + 4);

  // Two cities in one position.
  const Bits clash = z | (Bits{1} << 14);
  CHECK_FALSE(decode_tsp(clash, 4).has_value());
  CHECK_FALSE(cost.feasible(clash));
  CHECK(cost.evaluate(clash) > 11.0);
  CHECK(format_vertices(decode_tsp(z, 4)) == "(1 2 3 4)");
  CHECK(format_vertices(std::nullopt) == "infeasible");
}

TEST_CASE("TSP penalty dominance") {
  for (auto seed : {std::uint64_t{1}, std::uint64_t{7}}) {
    const auto g = complete_graph(3, seed);
    const auto cost = tsp_cost(g);
    double worst_feasible = -1.0, best_infeasible = 1e300;
    for (Bits z = 0; z < 512; ++z) {
      if (cost.feasible(z))
        worst_feasible = std::max(worst_feasible, cost.evaluate(z));
      else
        best_infeasible = std::min(best_infeasible, cost.evaluate(z));
    }
    CHECK(best_infeasible > worst_feasible);
  }
  const auto g4 = k4();
  const auto cost = tsp_cost(g4);
  double worst_feasible = -1.0, best_infeasible = 1e300;
  for (Bits z = 0; z < (Bits{1} << 16); ++z) {
    if (cost.feasible(z))
      worst_feasible = std::max(worst_feasible, cost.evaluate(z));
    else
      best_infeasible = std::min(best_infeasible, cost.evaluate(z));
  }
  CHECK(worst_feasible == 16.0);
  CHECK(best_infeasible > worst_feasible);
}

TEST_CASE("TSP with missing edges charges the penalty") {
  Graph g(3);
  g.add_edge(0, 1, 1.0);
  g.add_edge(1, 2, 1.0);
  const auto cost = tsp_cost(g, 5.0);
  const std::vector<Vertex> tour{0, 1, 2};
  CHECK(cost.evaluate(encode_tsp(tour)) == 1.0 + 1.0 + 5.0);
  CHECK_THROWS(tour_length(g, tour));
}

TEST_CASE("encode/decode round trip") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<Vertex> tour(n);
    std::iota(tour.begin(), tour.end(), 0);
    do {
      CHECK(decode_tsp(encode_tsp(tour), n) == tour);
    } while (std::next_permutation(tour.begin(), tour.end()));
  }
}

TEST_CASE("vertex cover examples") {
  const auto g = builtin_mvc_graph();
  const auto cost = mvc_cost(g);
  CHECK(cost.penalty == 2.0);
  // {2,4,5}: bits for vertices 1,3,4 (0-based) of 6.
  const Bits cover = 0b010110;
  CHECK(is_vertex_cover(g, cover));
  CHECK(cost.evaluate(cover) == 3.0);
  CHECK(decode_cover(g, cover) == std::optional<std::vector<Vertex>>({1, 3, 4}));
  CHECK(format_vertices(decode_cover(g, cover)) == "(2 4 5)");
  CHECK(uncovered_edges(g, 0) == 6);
  CHECK(cost.evaluate(0) == 12.0);
  CHECK(cost.evaluate(0b111111) == 6.0);
  CHECK_FALSE(cost.feasible(0b010100));
  CHECK(cost.evaluate(0b010100) == 2.0 + 2.0 * 1);
  CHECK_THROWS(mvc_cost(g, 1.0));
}

TEST_CASE("vertex cover penalty ordering") {
  // Every uncovered string costs more than the cover obtained by adding one
  // endpoint per uncovered edge.
  for (const auto& g : {builtin_mvc_graph(), path_graph(5)}) {
    const int n = g.n_vertices();
    const auto cost = mvc_cost(g);
    for (Bits z = 0; z < (Bits{1} << n); ++z) {
      if (is_vertex_cover(g, z)) continue;
      Bits repaired = z;
      for (const auto& e : g.edges())
        if (!bit_at(repaired, n, e.u) && !bit_at(repaired, n, e.v))
          repaired |= Bits{1} << (n - 1 - e.u);
      CHECK(is_vertex_cover(g, repaired));
      CHECK(cost.evaluate(z) > cost.evaluate(repaired));
    }

    // With A = N + 1 every infeasible string outranks every cover.
    const auto strict = mvc_cost(g, n + 1.0);
    double worst_cover = -1.0, best_bad = 1e300;
    for (Bits z = 0; z < (Bits{1} << n); ++z) {
      if (strict.feasible(z))
        worst_cover = std::max(worst_cover, strict.evaluate(z));
      else
        best_bad = std::min(best_bad, strict.evaluate(z));
    }
    CHECK(best_bad > worst_cover);
  }
}

TEST_CASE("cost table") {
  const auto cost = mvc_cost(path_graph(3));
  const auto t = cost_table(cost);
  REQUIRE(t.size() == 8);
  for (Bits z = 0; z < 8; ++z) CHECK(t[z] == cost.evaluate(z));
}
