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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "plateau/core/types.hpp"

namespace plateau {

/// Dense pure state of `n` qubits. Qubit 0 is the most significant bit of
/// the basis index.
class Statevector {
  public:
    /// Largest register the dense simulator accepts.
    static constexpr int kMaxQubits = 30;

    /// |0...0> on `n_qubits` qubits.
    explicit Statevector(int n_qubits);

    /// Takes ownership of `amplitudes`; the length must be 2^n and the
    /// vector normalized within kAlgebraicTol.
    Statevector(int n_qubits, std::vector<Complex> amplitudes);

    static Statevector basis(int n_qubits, std::uint64_t index);
    /// Computational basis state from a bit list, bits[q] for qubit q.
    static Statevector from_bits(std::span<const int> bits);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }

    std::span<const Complex> amplitudes() const { return amplitudes_; }
    /// Mutable access for kernels. Callers keep the state normalized.
    std::span<Complex> mutable_amplitudes() { return amplitudes_; }

    Complex operator[](std::size_t i) const { return amplitudes_[i]; }

    double norm_squared() const;
    std::vector<double> probabilities() const;
    /// Probability that qubit `q` is measured as 0.
    double zero_probability(int q) const;

    Complex inner(const Statevector &other) const;

  private:
    int n_qubits_;
    std::vector<Complex> amplitudes_;
};

/// Product of single-qubit pure states, usable on registers far beyond
/// dense reach (light-cone evaluation).
class ProductState {
  public:
    using Qubit = std::array<Complex, 2>;

    /// |0...0>.
    explicit ProductState(int n_qubits);
    /// Each factor is renormalized; a zero factor is an argument error.
    explicit ProductState(std::vector<Qubit> factors);

    static ProductState from_bits(std::span<const int> bits);

    int n_qubits() const { return static_cast<int>(factors_.size()); }
    const Qubit &qubit(int q) const { return factors_.at(static_cast<std::size_t>(q)); }
    const std::vector<Qubit> &factors() const { return factors_; }

    /// Dense expansion; requires n_qubits <= Statevector::kMaxQubits.
    Statevector to_statevector() const;
    /// Dense state of the listed qubits only, in list order.
    Statevector restrict_to(std::span<const int> qubits) const;

  private:
    std::vector<Qubit> factors_;
};

/// Returns the product factorization of `state` when it is a product of
/// single-qubit states (fidelity within 1e-10), otherwise nullopt.
std::optional<ProductState> try_factor_product(const Statevector &state);

} // namespace plateau
