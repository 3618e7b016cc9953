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
#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include <doctest.h>

#include "psvqe/ansatz.hpp"
#include "psvqe/cost.hpp"
#include "psvqe/graph.hpp"
#include "psvqe/oracle.hpp"
#include "psvqe/state_vector.hpp"

using namespace psvqe;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> uniform_angles(int count, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(0.0, 2 * kPi);
  std::vector<double> t(count);
  for (auto& v : t) v = d(rng);
  return t;
}

// a_k = (prod_{j<k} -sin t_j) cos t_k, with cos t_m = 1.
std::vector<double> w_amplitudes(const std::vector<double>& t) {
  const std::size_t m = t.size() + 1;
  std::vector<double> a(m);
  double prefix = 1.0;
  for (std::size_t k = 0; k < m; ++k) {
    a[k] = prefix * (k < t.size() ? std::cos(t[k]) : 1.0);
    if (k < t.size()) prefix *= -std::sin(t[k]);
  }
  return a;
}

std::size_t popcount(std::size_t z) { return static_cast<std::size_t>(__builtin_popcountll(z)); }

}  // namespace

TEST_CASE("W chain gate sequence") {
  const auto c = build_w_chain(3);
  CHECK(c.n_qubits() == 3);
  CHECK(c.n_params() == 2);
  const auto& ops = c.ops();
  REQUIRE(ops.size() == 9);
  CHECK(ops[0].kind == GateKind::X);
  CHECK(ops[0].qubits[0] == 0);
  CHECK(ops[1].kind == GateKind::Ry);
  CHECK(ops[1].qubits[0] == 1);
  CHECK(*ops[1].angle == ParamExpr{0, 1, 1.0});
  CHECK(ops[2].kind == GateKind::CZ);
  CHECK(ops[3].kind == GateKind::Ry);
  CHECK(*ops[3].angle == ParamExpr{0, -1, 1.0});
  CHECK(ops[6].qubits[0] == 2);
  CHECK(*ops[6].angle == ParamExpr{1, -1, 1.0});
  CHECK(ops[7].kind == GateKind::CNOT);
  CHECK(ops[7].qubits[0] == 1);
  CHECK(ops[7].qubits[1] == 0);
  CHECK(ops[8].qubits[0] == 2);
  CHECK(ops[8].qubits[1] == 1);
}

TEST_CASE("W chain amplitudes follow the product law") {
  std::mt19937_64 rng(3);
  for (int m = 2; m <= 6; ++m) {
    const auto c = build_w_chain(m);
    for (int trial = 0; trial < 50; ++trial) {
      const auto t = uniform_angles(m - 1, rng);
      const auto s = run(c, t);
      const auto want = w_amplitudes(t);
      for (Bits z = 0; z < s.dimension(); ++z) {
        if (popcount(z) == 1) {
          const int k = m - 1 - std::countr_zero(z);
          CHECK(std::abs(s[z] - Amplitude{want[k]}) < 1e-12);
        } else {
          CHECK(std::abs(s[z]) < 1e-14);
        }
      }
    }
  }
  const auto single = run(build_w_chain(1), std::vector<double>{});
  CHECK(std::abs(single[1] - Amplitude{1.0}) < 1e-15);
  CHECK_THROWS(build_w_chain(0));
}

TEST_CASE("append_w_chain honours qubit list and parameter offset") {
  Circuit c(5);
  c.reserve_params(4);
  const Qubit qs[] = {4, 1, 3};
  append_w_chain(c, qs, 2);
  const std::vector<double> t{9.0, 9.0, 0.4, 1.3};
  const auto s = run(c, t);
  const auto want = w_amplitudes({0.4, 1.3});
  CHECK(std::abs(s[0b00001].real() - want[0]) < 1e-12);
  CHECK(std::abs(s[0b01000].real() - want[1]) < 1e-12);
  CHECK(std::abs(s[0b00010].real() - want[2]) < 1e-12);
}

TEST_CASE("Proposed 1 keeps one city per position") {
  const auto c = build_tsp_proposed1(3);
  CHECK(c.n_qubits() == 9);
  CHECK(c.n_params() == 6);
  const auto rep = support(c, 9, 100, 1);
  CHECK(rep.basis_set.size() == 27);
  CHECK(rep.always_zero.size() == 485);
  CHECK(rep.max_zero_amplitude < 1e-14);
  for (Bits z : rep.basis_set)
    for (int p = 0; p < 3; ++p) {
      int ones = 0;
      for (int v = 0; v < 3; ++v) ones += bit_at(z, 9, tsp_qubit(3, v, p));
      CHECK(ones == 1);
    }
}

TEST_CASE("Proposed 4 only reaches permutation matrices") {
  const auto c = build_tsp_proposed4(3);
  CHECK(c.n_main() == 9);
  CHECK(c.n_ancillas() == 3);
  CHECK(c.n_params() == 3);
  const auto rep = support(c, 9, 100, 2);
  CHECK(rep.basis_set.size() == 6);
  for (Bits z : rep.basis_set) CHECK(decode_tsp(z, 3).has_value());
}

TEST_CASE("Proposed 4 parameters reproduce a chosen tour") {
  const auto c = build_tsp_proposed4(4);
  std::vector<Vertex> tour{0, 1, 2, 3};
  do {
    const auto p = run_probabilities(c, proposed4_parameters_for(tour));
    INFO("tour " << tour[0] << tour[1] << tour[2] << tour[3]);
    CHECK(std::abs(p[encode_tsp(tour)] - 1.0) < 1e-12);
  } while (std::next_permutation(tour.begin(), tour.end()));

  // The tour (2,1,4,3) in 1-based labels.
  const std::vector<Vertex> sigma{1, 0, 3, 2};
  const auto p = run_probabilities(c, proposed4_parameters_for(sigma));
  Bits expect = 0;
  for (int pos = 0; pos < 4; ++pos) expect |= Bits{1} << (15 - (pos * 4 + sigma[pos]));
  CHECK(std::abs(p[expect] - 1.0) < 1e-12);
}

TEST_CASE("MVC ansatz on a path reaches exactly its covers") {
  const auto g = path_graph(3);
  const auto tree = spanning_tree(g);
  const auto c = build_mvc_ansatz(g, tree);
  const auto rep = support(c, 3, 200, 4);
  // Covers of 1-2-3: {2}, {1,2}, {2,3}, {1,3}, {1,2,3}.
  const std::set<Bits> covers{0b010, 0b110, 0b011, 0b101, 0b111};
  CHECK(std::set<Bits>(rep.basis_set.begin(), rep.basis_set.end()) == covers);
}

TEST_CASE("MVC two-qubit block amplitudes") {
  Graph g(2);
  g.add_edge(0, 1);
  const auto c = build_mvc_ansatz(g, spanning_tree(g));
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = uniform_angles(2, rng);
    const auto s = run(c, t);
    CHECK(std::abs(s[0]) < 1e-14);
    CHECK(std::abs(s[1].real() - std::cos(t[0] / 2)) < 1e-12);
    CHECK(std::abs(s[2].real() + std::sin(t[0] / 2) * std::sin(t[1])) < 1e-12);
    CHECK(std::abs(s[3].real() - std::sin(t[0] / 2) * std::cos(t[1])) < 1e-12);
  }
}

TEST_CASE("Ry baseline layout") {
  const auto c = build_ry_baseline(3, 1);
  CHECK(gate_counts(c) == GateCounts{6, 6, 2, 0});
  CHECK(c.ops()[3].kind == GateKind::CNOT);
  CHECK(c.ops()[3].qubits[0] == 0);
  CHECK(c.ops()[3].qubits[1] == 1);
  CHECK(gate_counts(build_ry_baseline(4, 0)) == GateCounts{4, 4, 0, 0});
  CHECK_THROWS(build_ry_baseline(3, -1));
}

TEST_CASE("resource counts follow the closed forms") {
  for (int n_cities = 2; n_cities <= 8; ++n_cities) {
    const int n = n_cities * n_cities;
    const int r = n_cities;
    CHECK(gate_counts(build_tsp_proposed1(n_cities)) == GateCounts{n - r, 2 * n - r, 2 * n - 2 * r, 0});
    CHECK(gate_counts(build_tsp_proposed4(n_cities)).params == (n - r) / 2);
    const auto k = complete_graph(n_cities, std::uint64_t{1});
    CHECK(gate_counts(build_mvc_ansatz(k, spanning_tree(k))) ==
          GateCounts{n_cities, 3 * n_cities - 2, n_cities - 1, 0});
    for (int d = 0; d <= 3; ++d)
      CHECK(gate_counts(build_ry_baseline(n, d)) == GateCounts{(d + 1) * n, (d + 1) * n, d * (n - 1), 0});
  }
  for (const auto& row : verify_table_counts()) {
    INFO(row.ansatz << " n=" << row.n << " " << row.resource);
    CHECK(row.pass());
  }
}
