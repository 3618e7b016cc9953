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

#include "psvqe/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace psvqe {
namespace {

// Calls f(base) for every submask of `mask`, in increasing order.
template <typename F>
inline void for_each_submask(Bits mask, F&& f) {
  Bits s = 0;
  while (true) {
    f(s);
    if (s == mask) break;
    s = (s - mask) & mask;
  }
}

// Uniform double in [0, 1) from the top 53 bits, identical across standard
// libraries.
inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw std::invalid_argument("StateVector: qubit count must be in [1, " +
                                std::to_string(kMaxQubits) + "], got " +
                                std::to_string(n_qubits));
  amps_.assign(std::size_t{1} << n_qubits, Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
  const auto size = amplitudes.size();
  if (size < 2 || !std::has_single_bit(size))
    throw std::invalid_argument("StateVector: size must be a power of two >= 2");
  const int n = std::countr_zero(size);
  if (n > kMaxQubits) throw std::invalid_argument("StateVector: too many qubits");
  StateVector s;
  s.n_qubits_ = n;
  s.amps_ = std::move(amplitudes);
  s.touched_ = (Bits{1} << n) - 1;
  if (std::abs(s.norm_squared() - 1.0) > 1e-10)
    throw std::invalid_argument("StateVector: amplitudes are not normalised");
  return s;
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return total;
}

void StateVector::check_qubits(std::span<const Qubit> qubits) const {
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] < 0 || qubits[i] >= n_qubits_)
      throw std::out_of_range("StateVector: qubit " + std::to_string(qubits[i]) +
                              " out of range for " + std::to_string(n_qubits_) +
                              " qubits");
    for (std::size_t j = 0; j < i; ++j)
      if (qubits[i] == qubits[j])
        throw std::invalid_argument("StateVector: repeated qubit in gate");
  }
}

void StateVector::apply_x(Qubit q) {
  const Qubit qs[] = {q};
  check_qubits(qs);
  const Bits b = bit_of(q);
  touched_ |= b;
  for_each_submask(touched_ & ~b, [&](Bits i) { std::swap(amps_[i], amps_[i | b]); });
}

void StateVector::apply_ry(Qubit q, double theta) {
  const Qubit qs[] = {q};
  check_qubits(qs);
  const Bits b = bit_of(q);
  touched_ |= b;
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  for_each_submask(touched_ & ~b, [&](Bits i) {
    const Amplitude a0 = amps_[i];
    const Amplitude a1 = amps_[i | b];
    amps_[i] = c * a0 - s * a1;
    amps_[i | b] = s * a0 + c * a1;
  });
}

void StateVector::apply_cz(Qubit a, Qubit b) {
  const Qubit qs[] = {a, b};
  check_qubits(qs);
  const Bits ba = bit_of(a), bb = bit_of(b);
  // Either qubit still |0>: identity.
  if (!(touched_ & ba) || !(touched_ & bb)) return;
  const Bits both = ba | bb;
  for_each_submask(touched_ & ~both, [&](Bits i) { amps_[i | both] = -amps_[i | both]; });
}

void StateVector::apply_cnot(Qubit control, Qubit target) {
  const Qubit qs[] = {control, target};
  check_qubits(qs);
  const Bits bc = bit_of(control), bt = bit_of(target);
  if (!(touched_ & bc)) return;
  touched_ |= bt;
  for_each_submask(touched_ & ~(bc | bt),
                   [&](Bits i) { std::swap(amps_[i | bc], amps_[i | bc | bt]); });
}

void StateVector::apply_cswap(Qubit control, Qubit a, Qubit b) {
  const Qubit qs[] = {control, a, b};
  check_qubits(qs);
  const Bits bc = bit_of(control), ba = bit_of(a), bb = bit_of(b);
  if (!(touched_ & bc)) return;
  if (!(touched_ & (ba | bb))) return;
  touched_ |= ba | bb;
  for_each_submask(touched_ & ~(bc | ba | bb),
                   [&](Bits i) { std::swap(amps_[i | bc | ba], amps_[i | bc | bb]); });
}

void StateVector::apply(const GateOp& gate, std::optional<double> bound_angle) {
  if ((gate.kind == GateKind::Ry) != bound_angle.has_value())
    throw std::invalid_argument(std::string("apply: angle must be given iff gate is Ry, gate ") +
                                to_string(gate.kind));
  if (gate.arity != arity_of(gate.kind))
    throw std::invalid_argument("apply: wrong arity");
  const auto& q = gate.qubits;
  switch (gate.kind) {
    case GateKind::X: apply_x(q[0]); break;
    case GateKind::Ry: apply_ry(q[0], *bound_angle); break;
    case GateKind::CZ: apply_cz(q[0], q[1]); break;
    case GateKind::CNOT: apply_cnot(q[0], q[1]); break;
    case GateKind::CSWAP: apply_cswap(q[0], q[1], q[2]); break;
  }
}

StateVector new_state(int n_qubits) { return StateVector(n_qubits); }

StateVector apply_gate(StateVector state, const GateOp& gate,
                       std::optional<double> bound_angle) {
  state.apply(gate, bound_angle);
  return state;
}

StateVector run(const Circuit& circuit, std::span<const double> params) {
  if (static_cast<int>(params.size()) != circuit.n_params())
    throw std::invalid_argument("run: expected " + std::to_string(circuit.n_params()) +
                                " parameters, got " + std::to_string(params.size()));
  StateVector state(circuit.n_qubits());
  for (const auto& op : circuit.ops()) {
    std::optional<double> angle;
    if (op.angle) angle = op.angle->bind(params);
    state.apply(op, angle);
  }
  return state;
}

std::vector<double> main_register_probabilities(const StateVector& state,
                                                int n_main) {
  if (n_main < 0 || n_main > state.n_qubits())
    throw std::invalid_argument("main_register_probabilities: n_main out of range");
  const int n_aux = state.n_qubits() - n_main;
  const std::size_t block = std::size_t{1} << n_aux;
  const auto amps = state.amplitudes();
  std::vector<double> probs(std::size_t{1} << n_main, 0.0);
  for (std::size_t z = 0; z < probs.size(); ++z) {
    double p = 0.0;
    const auto* a = amps.data() + z * block;
    for (std::size_t k = 0; k < block; ++k) p += std::norm(a[k]);
    probs[z] = p;
  }
  return probs;
}

namespace {

using SparseState = std::unordered_map<Bits, Amplitude>;

void sparse_ry(SparseState& state, Bits b, double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  SparseState next;
  next.reserve(2 * state.size());
  for (const auto& [k, a] : state) {
    const Bits lo = k & ~b;
    if (k & b) {
      next[lo] -= s * a;
      next[lo | b] += c * a;
    } else {
      next[lo] += c * a;
      next[lo | b] += s * a;
    }
  }
  std::erase_if(next, [](const auto& kv) { return kv.second == Amplitude{0.0, 0.0}; });
  state.swap(next);
}

template <typename Map>
void sparse_permute(SparseState& state, Map&& map) {
  SparseState next;
  next.reserve(state.size());
  for (const auto& [k, a] : state) next.emplace(map(k), a);
  state.swap(next);
}

}  // namespace

std::vector<double> run_probabilities(const Circuit& circuit,
                                      std::span<const double> params) {
  if (static_cast<int>(params.size()) != circuit.n_params())
    throw std::invalid_argument("run_probabilities: expected " +
                                std::to_string(circuit.n_params()) + " parameters, got " +
                                std::to_string(params.size()));
  const int n = circuit.n_qubits();
  if (n < 1 || n > StateVector::kMaxQubits)
    throw std::invalid_argument("run_probabilities: qubit count out of range");
  const std::size_t limit = std::max<std::size_t>(16, (std::size_t{1} << n) / 16);
  auto bit = [n](Qubit q) { return Bits{1} << (n - 1 - q); };

  SparseState sparse{{0, Amplitude{1.0, 0.0}}};
  const auto& ops = circuit.ops();
  std::size_t i = 0;
  for (; i < ops.size() && sparse.size() <= limit; ++i) {
    const auto& op = ops[i];
    const auto& q = op.qubits;
    switch (op.kind) {
      case GateKind::X:
        sparse_permute(sparse, [b = bit(q[0])](Bits k) { return k ^ b; });
        break;
      case GateKind::Ry:
        sparse_ry(sparse, bit(q[0]), op.angle->bind(params));
        break;
      case GateKind::CZ: {
        const Bits both = bit(q[0]) | bit(q[1]);
        for (auto& [k, a] : sparse)
          if ((k & both) == both) a = -a;
        break;
      }
      case GateKind::CNOT:
        sparse_permute(sparse, [bc = bit(q[0]), bt = bit(q[1])](Bits k) {
          return (k & bc) ? k ^ bt : k;
        });
        break;
      case GateKind::CSWAP:
        sparse_permute(sparse, [bc = bit(q[0]), ba = bit(q[1]), bb = bit(q[2])](Bits k) {
          if (!(k & bc) || !(k & ba) == !(k & bb)) return k;
          return k ^ ba ^ bb;
        });
        break;
    }
  }

  const int n_main = circuit.n_main();
  const int shift = n - n_main;
  std::vector<double> probs(std::size_t{1} << n_main, 0.0);
  if (i == ops.size()) {
    for (const auto& [k, a] : sparse) probs[k >> shift] += std::norm(a);
    return probs;
  }

  std::vector<Amplitude> amps(std::size_t{1} << n, Amplitude{0.0, 0.0});
  for (const auto& [k, a] : sparse) amps[k] = a;
  sparse.clear();
  auto state = StateVector::from_amplitudes(std::move(amps));
  for (; i < ops.size(); ++i) {
    std::optional<double> angle;
    if (ops[i].angle) angle = ops[i].angle->bind(params);
    state.apply(ops[i], angle);
  }
  return main_register_probabilities(state, n_main);
}

std::vector<Bits> sample(std::span<const double> probabilities, int shots,
                         std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample: shots must be >= 1");
  if (probabilities.empty()) throw std::invalid_argument("sample: empty distribution");
  std::vector<double> cdf(probabilities.size());
  double total = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    if (!(probabilities[i] >= 0.0))
      throw std::invalid_argument("sample: negative or NaN probability");
    total += probabilities[i];
    cdf[i] = total;
  }
  if (std::abs(total - 1.0) > 1e-8)
    throw std::invalid_argument("sample: probabilities sum to " + std::to_string(total));

  std::mt19937_64 rng(seed);
  std::vector<Bits> out;
  out.reserve(static_cast<std::size_t>(shots));
  for (int s = 0; s < shots; ++s) {
    const double u = unit_double(rng) * total;
    auto idx = static_cast<std::size_t>(
        std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    // u < total, so the search only runs off the end through rounding.
    if (idx == cdf.size()) {
      idx = cdf.size() - 1;
      while (idx > 0 && probabilities[idx] == 0.0) --idx;
    }
    out.push_back(idx);
  }
  return out;
}

}  // namespace psvqe
