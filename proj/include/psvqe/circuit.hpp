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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace psvqe {

/// Qubit position in a register. Qubit 0 is the most significant bit of a
/// basis index, so |q0 q1 ... q(n-1)> maps to sum_i q_i * 2^(n-1-i).
using Qubit = int;

/// Computational basis index.
using Bits = std::uint64_t;

enum class GateKind { X, Ry, CZ, CNOT, CSWAP };

const char* to_string(GateKind kind);

/// Reference into a circuit's parameter table. Binds to
/// sign * scale * theta[index].
struct ParamExpr {
  int index = 0;
  int sign = 1;        // +1 or -1
  double scale = 1.0;  // 1 or 1/2

  [[nodiscard]] double bind(std::span<const double> theta) const {
    return sign * scale * theta[static_cast<std::size_t>(index)];
  }

  [[nodiscard]] ParamExpr negated() const { return {index, -sign, scale}; }

  friend bool operator==(const ParamExpr&, const ParamExpr&) = default;
};

/// One gate of the five-gate set. For CNOT and CSWAP the control comes first;
/// CZ is symmetric.
struct GateOp {
  GateKind kind = GateKind::X;
  std::array<Qubit, 3> qubits{};
  int arity = 1;
  std::optional<ParamExpr> angle;

  [[nodiscard]] std::span<const Qubit> targets() const {
    return {qubits.data(), static_cast<std::size_t>(arity)};
  }

  friend bool operator==(const GateOp&, const GateOp&) = default;
};

int arity_of(GateKind kind);

/// Ordered gate list over a main register followed by trailing ancillas.
/// Ancillas occupy the least significant positions and are excluded from
/// cost evaluation.
class Circuit {
 public:
  Circuit() = default;
  Circuit(int n_main, int n_ancillas = 0);

  [[nodiscard]] int n_main() const { return n_main_; }
  [[nodiscard]] int n_ancillas() const { return n_ancillas_; }
  [[nodiscard]] int n_qubits() const { return n_main_ + n_ancillas_; }
  [[nodiscard]] int n_params() const { return n_params_; }
  [[nodiscard]] const std::vector<GateOp>& ops() const { return ops_; }
  [[nodiscard]] bool empty() const { return ops_.empty(); }

  /// Index of the first ancilla qubit.
  [[nodiscard]] Qubit ancilla(int k) const;

  /// Reserves a fresh parameter and returns its index.
  int add_param();
  /// Grows the parameter table to at least `count` entries.
  void reserve_params(int count);

  Circuit& x(Qubit q);
  Circuit& ry(Qubit q, ParamExpr angle);
  Circuit& cz(Qubit a, Qubit b);
  Circuit& cnot(Qubit control, Qubit target);
  Circuit& cswap(Qubit control, Qubit a, Qubit b);

  /// Validates and appends. Throws std::invalid_argument on a bad qubit
  /// index, repeated qubit, a missing/extra angle or an unknown parameter.
  Circuit& append(const GateOp& op);

 private:
  int n_main_ = 0;
  int n_ancillas_ = 0;
  int n_params_ = 0;
  std::vector<GateOp> ops_;
};

}  // namespace psvqe
