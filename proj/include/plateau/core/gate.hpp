// Copyright 2026 The plateau-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>

#include "plateau/core/statevector.hpp"
#include "plateau/core/types.hpp"

namespace plateau {

/// Unitary on `arity` qubits; construction checks U U^dagger = 1.
class GateMatrix {
  public:
    explicit GateMatrix(CMatrix matrix);

    int arity() const { return arity_; }
    const CMatrix &matrix() const { return matrix_; }
    GateMatrix adjoint() const;

  private:
    int arity_;
    CMatrix matrix_;
};

/// Applies `gate` to `targets` of `state`; targets[0] maps to the most
/// significant bit of the gate's local index.
Statevector apply_gate(Statevector state, const GateMatrix &gate,
                       std::span<const int> targets);
void apply_gate_inplace(Statevector &state, const GateMatrix &gate,
                        std::span<const int> targets);

/// Validates a target list against a register size and gate arity.
void check_targets(int n_qubits, int arity, std::span<const int> targets);

enum class PauliAxis { X, Y, Z };

namespace gates {
GateMatrix identity(int arity);
GateMatrix pauli(PauliAxis axis);
GateMatrix hadamard();
GateMatrix s_dagger();
GateMatrix cz();
/// exp(-i angle sigma / 2).
GateMatrix rotation(PauliAxis axis, double angle);
GateMatrix rx(double angle);
GateMatrix ry(double angle);
GateMatrix rz(double angle);
} // namespace gates

} // namespace plateau
