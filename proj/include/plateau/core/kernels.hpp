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

#include <array>
#include <cstddef>
#include <span>

#include "plateau/core/types.hpp"

/// Amplitude-update kernels. The production kernels update the state in
/// place over strided amplitude groups and split the outer loop across
/// OpenMP threads once the state is large enough; the `_reference`
/// variants are deliberately naive serial loops kept as test oracles and
/// benchmark baselines.
namespace plateau::kernels {

/// States with fewer amplitudes than this are updated on one thread.
inline constexpr std::size_t kParallelMinDim = std::size_t{1} << 14;

/// Applies the 2x2 matrix [[m00, m01], [m10, m11]] to qubit `q`.
void apply_1q(std::span<Complex> amps, int n_qubits, int q, Complex m00,
              Complex m01, Complex m10, Complex m11);

/// Real 2x2 matrix, e.g. Ry.
void apply_1q_real(std::span<Complex> amps, int n_qubits, int q, double m00,
                   double m01, double m10, double m11);

/// Diagonal diag(d0, d1), e.g. Rz.
void apply_1q_diagonal(std::span<Complex> amps, int n_qubits, int q, Complex d0,
                       Complex d1);

/// Real 4x4 row-major matrix on (a, b), a being the high local bit.
void apply_2q_real(std::span<Complex> amps, int n_qubits, int a, int b,
                   const std::array<double, 16> &m);

/// Applies a 2^k x 2^k matrix to `targets` (targets[0] is the most
/// significant bit of the local index). The matrix need not be unitary.
void apply_matrix(std::span<Complex> amps, int n_qubits, const CMatrix &m,
                  std::span<const int> targets);

/// Multiplies amplitudes with qubits `a` and `b` both set by -1.
void apply_cz(std::span<Complex> amps, int n_qubits, int a, int b);

/// Serial reference: builds each output amplitude from the matrix row.
void apply_matrix_reference(std::span<Complex> amps, int n_qubits,
                            const CMatrix &m, std::span<const int> targets);

/// Sum of |a_i|^2.
double norm_squared(std::span<const Complex> amps);
double norm_squared_reference(std::span<const Complex> amps);

/// Inserts a zero bit at each (ascending) bit position of `positions`.
inline std::uint64_t insert_zero_bits(std::uint64_t value,
                                      std::span<const int> sorted_positions) {
    for (int pos : sorted_positions) {
        const std::uint64_t low = value & ((std::uint64_t{1} << pos) - 1);
        value = ((value >> pos) << (pos + 1)) | low;
    }
    return value;
}

} // namespace plateau::kernels
