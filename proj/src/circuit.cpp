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

#include "psvqe/circuit.hpp"

#include <stdexcept>

namespace psvqe {

const char* to_string(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "X";
    case GateKind::Ry: return "Ry";
    case GateKind::CZ: return "CZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CSWAP: return "CSWAP";
  }
  return "?";
}

int arity_of(GateKind kind) {
  switch (kind) {
    case GateKind::X:
    case GateKind::Ry: return 1;
    case GateKind::CZ:
    case GateKind::CNOT: return 2;
    case GateKind::CSWAP: return 3;
  }
  return 0;
}

Circuit::Circuit(int n_main, int n_ancillas)
    : n_main_(n_main), n_ancillas_(n_ancillas) {
  if (n_main < 0 || n_ancillas < 0)
    throw std::invalid_argument("Circuit: negative register size");
}

Qubit Circuit::ancilla(int k) const {
  if (k < 0 || k >= n_ancillas_)
    throw std::out_of_range("Circuit::ancilla: no such ancilla");
  return n_main_ + k;
}

int Circuit::add_param() { return n_params_++; }

void Circuit::reserve_params(int count) {
  if (count > n_params_) n_params_ = count;
}

Circuit& Circuit::x(Qubit q) {
  return append(GateOp{GateKind::X, {q, 0, 0}, 1, std::nullopt});
}

Circuit& Circuit::ry(Qubit q, ParamExpr angle) {
  return append(GateOp{GateKind::Ry, {q, 0, 0}, 1, angle});
}

Circuit& Circuit::cz(Qubit a, Qubit b) {
  return append(GateOp{GateKind::CZ, {a, b, 0}, 2, std::nullopt});
}

Circuit& Circuit::cnot(Qubit control, Qubit target) {
  return append(GateOp{GateKind::CNOT, {control, target, 0}, 2, std::nullopt});
}

Circuit& Circuit::cswap(Qubit control, Qubit a, Qubit b) {
  return append(GateOp{GateKind::CSWAP, {control, a, b}, 3, std::nullopt});
}

Circuit& Circuit::append(const GateOp& op) {
  if (op.arity != arity_of(op.kind))
    throw std::invalid_argument(std::string("Circuit: wrong arity for ") +
                                to_string(op.kind));
  const auto qs = op.targets();
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (qs[i] < 0 || qs[i] >= n_qubits())
      throw std::invalid_argument("Circuit: qubit index out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (qs[i] == qs[j])
        throw std::invalid_argument("Circuit: repeated qubit in gate");
  }
  if ((op.kind == GateKind::Ry) != op.angle.has_value())
    throw std::invalid_argument("Circuit: only Ry carries an angle");
  if (op.angle) {
    const auto& a = *op.angle;
    if (a.index < 0 || a.index >= n_params_)
      throw std::invalid_argument("Circuit: unknown parameter index");
    if (a.sign != 1 && a.sign != -1)
      throw std::invalid_argument("Circuit: parameter sign must be +-1");
    if (a.scale != 1.0 && a.scale != 0.5)
      throw std::invalid_argument("Circuit: parameter scale must be 1 or 1/2");
  }
  ops_.push_back(op);
  return *this;
}

}  // namespace psvqe
