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

#include "plateau/core/gate.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "plateau/core/kernels.hpp"

namespace plateau {

GateMatrix::GateMatrix(CMatrix matrix) : matrix_(std::move(matrix)) {
    const auto dim = matrix_.rows();
    require(dim >= 2 && dim == matrix_.cols(), "gate matrix must be square");
    require((dim & (dim - 1)) == 0, "gate dimension must be a power of two");
    arity_ = 0;
    while ((Eigen::Index{1} << arity_) < dim) {
        ++arity_;
    }
    const double err =
        (matrix_ * matrix_.adjoint() - CMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
    require(err < kAlgebraicTol,
            "gate matrix is not unitary (max |UU^+ - 1| = " + std::to_string(err) + ")");
}

GateMatrix GateMatrix::adjoint() const { return GateMatrix(matrix_.adjoint()); }

void check_targets(int n_qubits, int arity, std::span<const int> targets) {
    require(static_cast<int>(targets.size()) == arity,
            "target count " + std::to_string(targets.size()) +
                " does not match gate arity " + std::to_string(arity));
    std::vector<int> sorted(targets.begin(), targets.end());
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            "duplicate target qubit");
    for (int t : targets) {
        require(t >= 0 && t < n_qubits, "target qubit " + std::to_string(t) +
                                            " out of range for " +
                                            std::to_string(n_qubits) + " qubits");
    }
}

void apply_gate_inplace(Statevector &state, const GateMatrix &gate,
                        std::span<const int> targets) {
    check_targets(state.n_qubits(), gate.arity(), targets);
    kernels::apply_matrix(state.mutable_amplitudes(), state.n_qubits(),
                          gate.matrix(), targets);
}

Statevector apply_gate(Statevector state, const GateMatrix &gate,
                       std::span<const int> targets) {
    apply_gate_inplace(state, gate, targets);
    return state;
}

namespace gates {

namespace {
const Complex kI{0.0, 1.0};

CMatrix pauli_matrix(PauliAxis axis) {
    CMatrix m(2, 2);
    switch (axis) {
    case PauliAxis::X:
        m << 0.0, 1.0, 1.0, 0.0;
        break;
    case PauliAxis::Y:
        m << 0.0, -kI, kI, 0.0;
        break;
    case PauliAxis::Z:
        m << 1.0, 0.0, 0.0, -1.0;
        break;
    }
    return m;
}
} // namespace

GateMatrix identity(int arity) {
    require(arity >= 1, "identity arity must be >= 1");
    const Eigen::Index dim = Eigen::Index{1} << arity;
    return GateMatrix(CMatrix::Identity(dim, dim));
}

GateMatrix pauli(PauliAxis axis) { return GateMatrix(pauli_matrix(axis)); }

GateMatrix hadamard() {
    CMatrix m(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
    return GateMatrix(m);
}

GateMatrix s_dagger() {
    CMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -kI;
    return GateMatrix(m);
}

GateMatrix cz() {
    CMatrix m = CMatrix::Identity(4, 4);
    m(3, 3) = -1.0;
    return GateMatrix(m);
}

GateMatrix rotation(PauliAxis axis, double angle) {
    const CMatrix id = CMatrix::Identity(2, 2);
    return GateMatrix(std::cos(angle / 2) * id - kI * std::sin(angle / 2) * pauli_matrix(axis));
}

GateMatrix rx(double angle) { return rotation(PauliAxis::X, angle); }
GateMatrix ry(double angle) { return rotation(PauliAxis::Y, angle); }
GateMatrix rz(double angle) { return rotation(PauliAxis::Z, angle); }

} // namespace gates

} // namespace plateau
