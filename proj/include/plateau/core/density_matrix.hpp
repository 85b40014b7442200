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

/// Dense mixed state. Only allowed up to kMaxQubits = 14.
class DensityMatrix {
  public:
    static constexpr int kMaxQubits = 14;

    /// Validates Hermiticity and unit trace within kAlgebraicTol, and
    /// eigenvalues >= -1e-9 for dimensions up to 256.
    DensityMatrix(int n_qubits, CMatrix matrix);

    static DensityMatrix from_pure(const Statevector &state);
    static DensityMatrix maximally_mixed(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    Eigen::Index dim() const { return matrix_.rows(); }
    const CMatrix &matrix() const { return matrix_; }

  private:
    int n_qubits_;
    CMatrix matrix_;
};

/// Reduced state on `keep` (ascending order in the output).
DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const int> keep);

/// Reduced state of a pure state on `keep`, computed from the reshaped
/// amplitude matrix so the full density matrix is never formed.
DensityMatrix reduced_density_matrix(const Statevector &state,
                                     std::span<const int> keep);

/// Partial trace of an arbitrary square matrix on `n_qubits` over the
/// qubits not in `keep`. No state invariants are checked.
CMatrix partial_trace_matrix(const CMatrix &m, int n_qubits,
                             std::span<const int> keep);

} // namespace plateau
