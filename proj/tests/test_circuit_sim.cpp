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

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <doctest.h>

#include "psvqe/ansatz.hpp"
#include "psvqe/circuit.hpp"
#include "psvqe/graph.hpp"
#include "psvqe/state_vector.hpp"

using namespace psvqe;

namespace {

constexpr double kPi = std::numbers::pi;

// Qubit values of basis index `z` as a vector, qubit 0 first.
std::vector<int> digits(std::size_t z, int n) {
  std::vector<int> d(n);
  for (int i = n - 1; i >= 0; --i) {
    d[i] = static_cast<int>(z % 2);
    z /= 2;
  }
  return d;
}

std::size_t from_digits(const std::vector<int>& d) {
  std::size_t z = 0;
  for (int v : d) z = 2 * z + static_cast<std::size_t>(v);
  return z;
}

// Column `in` of the full matrix of `gate` on n qubits, built from the gate
// definitions.
std::vector<Amplitude> reference_column(const GateOp& gate, double theta, int n, std::size_t in) {
  std::vector<Amplitude> col(std::size_t{1} << n);
  auto d = digits(in, n);
  const auto& q = gate.qubits;
  switch (gate.kind) {
    case GateKind::X:
      d[q[0]] ^= 1;
      col[from_digits(d)] = 1.0;
      break;
    case GateKind::Ry: {
      const double c = std::cos(theta / 2), s = std::sin(theta / 2);
      auto d0 = d, d1 = d;
      d0[q[0]] = 0;
      d1[q[0]] = 1;
      // Ry = [[c, -s], [s, c]]
      if (d[q[0]] == 0) {
        col[from_digits(d0)] = c;
        col[from_digits(d1)] = s;
      } else {
        col[from_digits(d0)] = -s;
        col[from_digits(d1)] = c;
      }
      break;
    }
    case GateKind::CZ:
      col[in] = (d[q[0]] && d[q[1]]) ? -1.0 : 1.0;
      break;
    case GateKind::CNOT:
      if (d[q[0]]) d[q[1]] ^= 1;
      col[from_digits(d)] = 1.0;
      break;
    case GateKind::CSWAP:
      if (d[q[0]]) std::swap(d[q[1]], d[q[2]]);
      col[from_digits(d)] = 1.0;
      break;
  }
  return col;
}

StateVector basis_state(int n, std::size_t z) {
  std::vector<Amplitude> a(std::size_t{1} << n);
  a[z] = 1.0;
  return StateVector::from_amplitudes(std::move(a));
}

GateOp make_gate(GateKind kind, std::vector<Qubit> qs) {
  GateOp g;
  g.kind = kind;
  g.arity = static_cast<int>(qs.size());
  for (std::size_t i = 0; i < qs.size(); ++i) g.qubits[i] = qs[i];
  if (kind == GateKind::Ry) g.angle = ParamExpr{0, 1, 1.0};
  return g;
}

Circuit random_circuit(int n, int n_gates, std::mt19937_64& rng) {
  Circuit c(n);
  c.add_param();
  c.add_param();
  std::uniform_int_distribution<int> pick_kind(0, 4), pick_q(0, n - 1), pick_p(0, 1),
      pick_sign(0, 1);
  for (int g = 0; g < n_gates; ++g) {
    const int kind = pick_kind(rng);
    Qubit a = pick_q(rng), b = pick_q(rng), t = pick_q(rng);
    while (b == a) b = pick_q(rng);
    while (t == a || t == b) t = pick_q(rng);
    switch (kind) {
      case 0: c.x(a); break;
      case 1: c.ry(a, ParamExpr{pick_p(rng), pick_sign(rng) ? 1 : -1, pick_sign(rng) ? 1.0 : 0.5}); break;
      case 2: c.cz(a, b); break;
      case 3: c.cnot(a, b); break;
      default: c.cswap(a, b, t); break;
    }
  }
  return c;
}

}  // namespace

TEST_CASE("fresh state is |0...0>") {
  StateVector s(3);
  CHECK(s.dimension() == 8);
  CHECK(s[0] == Amplitude{1.0, 0.0});
  for (Bits z = 1; z < 8; ++z) CHECK(s[z] == Amplitude{0.0, 0.0});
  CHECK_THROWS_AS(StateVector(0), std::invalid_argument);
  CHECK_THROWS_AS(StateVector(StateVector::kMaxQubits + 1), std::invalid_argument);
}

TEST_CASE("qubit 0 is the most significant bit") {
  StateVector s(3);
  s.apply_x(0);
  CHECK(std::abs(s[4] - Amplitude{1.0}) < 1e-15);
  StateVector t(3);
  t.apply_x(2);
  CHECK(std::abs(t[1] - Amplitude{1.0}) < 1e-15);
}

TEST_CASE("gate kernels match the reference matrices column by column") {
  const int n = 3;
  const double theta = 0.7312;
  const std::vector<GateOp> gates = {
      make_gate(GateKind::X, {0}),          make_gate(GateKind::X, {2}),
      make_gate(GateKind::Ry, {1}),         make_gate(GateKind::Ry, {2}),
      make_gate(GateKind::CZ, {0, 2}),      make_gate(GateKind::CZ, {2, 1}),
      make_gate(GateKind::CNOT, {0, 1}),    make_gate(GateKind::CNOT, {2, 0}),
      make_gate(GateKind::CSWAP, {0, 1, 2}), make_gate(GateKind::CSWAP, {2, 0, 1})};
  for (const auto& g : gates) {
    for (std::size_t in = 0; in < 8; ++in) {
      auto s = basis_state(n, in);
      std::optional<double> angle;
      if (g.kind == GateKind::Ry) angle = theta;
      s.apply(g, angle);
      const auto want = reference_column(g, theta, n, in);
      for (std::size_t out = 0; out < 8; ++out) {
        INFO(to_string(g.kind) << " column " << in << " row " << out);
        CHECK(std::abs(s[out] - want[out]) < 1e-15);
      }
    }
  }
}

TEST_CASE("CSWAP exchanges |101> and |110> only") {
  for (std::size_t in = 0; in < 8; ++in) {
    auto s = basis_state(3, in);
    s.apply_cswap(0, 1, 2);
    const std::size_t expect = in == 5 ? 6 : in == 6 ? 5 : in;
    CHECK(std::abs(s[expect] - Amplitude{1.0}) < 1e-15);
  }
}

TEST_CASE("Ry periodicity") {
  for (double theta : {0.3, 1.9, -2.4}) {
    StateVector a(1), b(1), c(1);
    a.apply_ry(0, theta);
    b.apply_ry(0, theta + 4 * kPi);
    c.apply_ry(0, theta + 2 * kPi);
    for (Bits z = 0; z < 2; ++z) {
      CHECK(std::abs(a[z] - b[z]) < 1e-12);
      CHECK(std::abs(a[z] + c[z]) < 1e-12);
    }
  }
  StateVector h(1);
  h.apply_ry(0, kPi / 2);
  CHECK(std::abs(h[0].real() - std::sqrt(0.5)) < 1e-15);
  CHECK(std::abs(h[1].real() - std::sqrt(0.5)) < 1e-15);
}

TEST_CASE("random circuits preserve the norm") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(-4 * kPi, 4 * kPi);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto c = random_circuit(5, 20, rng);
    const std::vector<double> theta{angle(rng), angle(rng)};
    const auto s = run(c, theta);
    REQUIRE(std::abs(s.norm_squared() - 1.0) < 1e-12);
  }
}

TEST_CASE("sparse and dense simulation agree") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(0, 2 * kPi);
  auto compare = [&](const Circuit& c) {
    std::vector<double> theta(c.n_params());
    for (auto& t : theta) t = angle(rng);
    const auto dense = main_register_probabilities(run(c, theta), c.n_main());
    const auto fast = run_probabilities(c, theta);
    REQUIRE(dense.size() == fast.size());
    double worst = 0.0;
    for (std::size_t z = 0; z < dense.size(); ++z) worst = std::max(worst, std::abs(dense[z] - fast[z]));
    CHECK(worst < 1e-12);
  };
  for (int trial = 0; trial < 50; ++trial) compare(random_circuit(6, 30, rng));
  compare(build_tsp_proposed1(3));
  compare(build_tsp_proposed4(3));
  compare(build_ry_baseline(9, 2));
  const auto g = builtin_mvc_graph();
  compare(build_mvc_ansatz(g, spanning_tree(g)));
}

TEST_CASE("shared parameters receive the summed derivative") {
  // Shared: p0 drives Ry(p0) on q0 and Ry(-p0/2) on q1.
  Circuit shared(2);
  shared.add_param();
  shared.ry(0, {0, 1, 1.0}).ry(1, {0, -1, 0.5}).cz(0, 1).ry(1, {0, 1, 1.0});
  // Same gates with every occurrence given its own parameter.
  Circuit split(2);
  split.reserve_params(3);
  split.ry(0, {0, 1, 1.0}).ry(1, {1, 1, 1.0}).cz(0, 1).ry(1, {2, 1, 1.0});

  auto f_shared = [&](double t) {
    const std::vector<double> p{t};
    return run_probabilities(shared, p)[1];
  };
  auto f_split = [&](std::vector<double> p) { return run_probabilities(split, p)[1]; };

  const double t = 0.83, h = 1e-5;
  const double d_shared = (f_shared(t + h) - f_shared(t - h)) / (2 * h);
  const std::vector<double> at{t, -t / 2, t};
  const double chain[] = {1.0, -0.5, 1.0};
  double d_split = 0.0;
  for (int i = 0; i < 3; ++i) {
    auto up = at, down = at;
    up[i] += h;
    down[i] -= h;
    d_split += chain[i] * (f_split(up) - f_split(down)) / (2 * h);
  }
  CHECK(std::abs(d_shared - d_split) < 1e-6);
}

TEST_CASE("16-qubit state stays normalised and matches a product state") {
  // Ry layer only: amplitudes factor into per-qubit cos/sin.
  Circuit c(16);
  std::vector<double> theta(16);
  for (int q = 0; q < 16; ++q) {
    c.ry(q, {c.add_param(), 1, 1.0});
    theta[q] = 0.1 + 0.17 * q;
  }
  const auto s = run(c, theta);
  CHECK(std::abs(s.norm_squared() - 1.0) < 1e-12);
  for (std::size_t z : {std::size_t{0}, std::size_t{1}, std::size_t{12345}, std::size_t{65535}}) {
    double expect = 1.0;
    const auto d = digits(z, 16);
    for (int q = 0; q < 16; ++q) expect *= d[q] ? std::sin(theta[q] / 2) : std::cos(theta[q] / 2);
    CHECK(std::abs(s[z].real() - expect) < 1e-14);
  }
}

TEST_CASE("ancillas are summed out of the main register") {
  Circuit c(1, 1);
  c.add_param();
  c.ry(1, {0, 1, 1.0}).cnot(1, 0);
  const std::vector<double> theta{1.1};
  const auto p = main_register_probabilities(run(c, theta), 1);
  REQUIRE(p.size() == 2);
  CHECK(std::abs(p[0] - std::pow(std::cos(0.55), 2)) < 1e-14);
  CHECK(std::abs(p[1] - std::pow(std::sin(0.55), 2)) < 1e-14);
}

TEST_CASE("circuit validation") {
  Circuit c(2, 1);
  CHECK(c.n_qubits() == 3);
  CHECK(c.ancilla(0) == 2);
  CHECK_THROWS(c.x(3));
  CHECK_THROWS(c.cz(1, 1));
  CHECK_THROWS(c.ry(0, {0, 1, 1.0}));  // no parameter reserved
  c.add_param();
  CHECK_THROWS(c.ry(0, {0, 2, 1.0}));
  CHECK_THROWS(c.ry(0, {0, 1, 0.25}));
  GateOp bad = make_gate(GateKind::CZ, {0, 1});
  bad.angle = ParamExpr{};
  CHECK_THROWS(c.append(bad));
  c.ry(0, {0, -1, 0.5});
  CHECK_THROWS(run(c, std::vector<double>{}));
  StateVector s(2);
  CHECK_THROWS(s.apply(make_gate(GateKind::Ry, {0}), std::nullopt));
  CHECK_THROWS(s.apply(make_gate(GateKind::X, {0}), 0.3));
  CHECK_THROWS(StateVector::from_amplitudes({1.0, 1.0}));
  CHECK_THROWS(StateVector::from_amplitudes({1.0, 0.0, 0.0}));
}

TEST_CASE("sampling is deterministic and unbiased") {
  const std::vector<double> probs(8, 0.125);
  const auto a = sample(probs, 1000, 42);
  const auto b = sample(probs, 1000, 42);
  const auto c = sample(probs, 1000, 43);
  CHECK(a == b);
  CHECK(a != c);

  const int shots = 1000000;
  const auto draws = sample(probs, shots, 9);
  std::vector<int> hist(8);
  for (Bits z : draws) ++hist[z];
  for (int k = 0; k < 8; ++k) CHECK(std::abs(hist[k] / double(shots) - 0.125) < 0.01);

  const std::vector<double> spike{0.0, 0.0, 1.0, 0.0};
  for (Bits z : sample(spike, 100, 1)) CHECK(z == 2);

  CHECK_THROWS(sample(probs, 0, 1));
  CHECK_THROWS(sample(std::vector<double>{0.5, 0.4}, 10, 1));
  CHECK_THROWS(sample(std::vector<double>{1.5, -0.5}, 10, 1));
}
