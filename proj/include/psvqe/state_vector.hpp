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

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "psvqe/circuit.hpp"

namespace psvqe {

using Amplitude = std::complex<double>;

/// Dense statevector over n qubits, initialised to |0...0>.
///
/// Gates are applied in place by stride iteration. The vector remembers which
/// qubits have been touched by a gate since |0...0>; untouched qubits are
/// known to be |0>, so kernels only visit the subspace spanned by touched
/// qubits. States built from explicit amplitudes treat every qubit as touched.
class StateVector {
 public:
  /// 2^28 amplitudes (4 GiB) is the largest register accepted.
  static constexpr int kMaxQubits = 28;

  explicit StateVector(int n_qubits);

  /// Takes ownership of `amplitudes`; the size must be a power of two and the
  /// norm must be 1 within 1e-10.
  static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

  [[nodiscard]] int n_qubits() const { return n_qubits_; }
  [[nodiscard]] std::size_t dimension() const { return amps_.size(); }
  [[nodiscard]] std::span<const Amplitude> amplitudes() const { return amps_; }
  [[nodiscard]] Amplitude operator[](Bits index) const { return amps_[index]; }
  [[nodiscard]] double norm_squared() const;

  void apply_x(Qubit q);
  void apply_ry(Qubit q, double theta);
  void apply_cz(Qubit a, Qubit b);
  void apply_cnot(Qubit control, Qubit target);
  void apply_cswap(Qubit control, Qubit a, Qubit b);

  /// Dispatches on gate.kind. `bound_angle` must be present iff the gate is Ry.
  void apply(const GateOp& gate, std::optional<double> bound_angle);

  /// Bit mask of the basis-index bit owned by qubit q.
  [[nodiscard]] Bits bit_of(Qubit q) const {
    return Bits{1} << (n_qubits_ - 1 - q);
  }

 private:
  StateVector() = default;
  void check_qubits(std::span<const Qubit> qubits) const;

  int n_qubits_ = 0;
  std::vector<Amplitude> amps_;
  Bits touched_ = 0;
};

StateVector new_state(int n_qubits);

/// Returns a copy of `state` with `gate` applied.
StateVector apply_gate(StateVector state, const GateOp& gate,
                       std::optional<double> bound_angle);

/// Runs `circuit` from |0...0> with its parameters bound to `params`.
StateVector run(const Circuit& circuit, std::span<const double> params);

/// Marginal distribution of the leading `n_main` qubits; trailing qubits are
/// summed out. Result has 2^n_main entries indexed by main-register basis.
std::vector<double> main_register_probabilities(const StateVector& state,
                                                int n_main);

/// Same distribution as main_register_probabilities(run(circuit, params),
/// circuit.n_main()). Keeps the state as a sparse map while at most 1/16 of
/// the amplitudes are nonzero and switches to the dense kernels after that.
std::vector<double> run_probabilities(const Circuit& circuit,
                                      std::span<const double> params);

/// Draws `shots` basis indices from `probabilities` with a seeded
/// mt19937_64. Rejects distributions whose total deviates from 1 by more
/// than 1e-8.
std::vector<Bits> sample(std::span<const double> probabilities, int shots,
                         std::uint64_t seed);

}  // namespace psvqe
