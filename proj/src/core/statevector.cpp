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

#include "plateau/core/statevector.hpp"

#include <cmath>
#include <string>

#include "plateau/core/kernels.hpp"

namespace plateau {

namespace {

void check_qubit_count(int n_qubits) {
    require(n_qubits >= 1 && n_qubits <= Statevector::kMaxQubits,
            "qubit count must be in [1, " +
                std::to_string(Statevector::kMaxQubits) + "], got " +
                std::to_string(n_qubits));
}

} // namespace

Statevector::Statevector(int n_qubits) : n_qubits_(n_qubits) {
    check_qubit_count(n_qubits);
    amplitudes_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

Statevector::Statevector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    check_qubit_count(n_qubits);
    require(amplitudes_.size() == (std::size_t{1} << n_qubits),
            "amplitude vector length must be 2^n");
    const double norm = kernels::norm_squared(amplitudes_);
    require(std::abs(norm - 1.0) < kAlgebraicTol,
            "state is not normalized: norm^2 = " + std::to_string(norm));
}

Statevector Statevector::basis(int n_qubits, std::uint64_t index) {
    Statevector s(n_qubits);
    require(index < s.dim(), "basis index out of range");
    s.amplitudes_[0] = 0.0;
    s.amplitudes_[index] = 1.0;
    return s;
}

Statevector Statevector::from_bits(std::span<const int> bits) {
    const int n = static_cast<int>(bits.size());
    std::uint64_t index = 0;
    for (int q = 0; q < n; ++q) {
        require(bits[q] == 0 || bits[q] == 1, "bits must be 0 or 1");
        if (bits[q]) {
            index |= qubit_mask(n, q);
        }
    }
    return basis(n, index);
}

double Statevector::norm_squared() const {
    return kernels::norm_squared(amplitudes_);
}

std::vector<double> Statevector::probabilities() const {
    std::vector<double> p(amplitudes_.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = std::norm(amplitudes_[i]);
    }
    return p;
}

double Statevector::zero_probability(int q) const {
    require(q >= 0 && q < n_qubits_, "qubit index out of range");
    const std::uint64_t mask = qubit_mask(n_qubits_, q);
    double p = 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if ((i & mask) == 0) {
            p += std::norm(amplitudes_[i]);
        }
    }
    return p;
}

Complex Statevector::inner(const Statevector &other) const {
    require(other.n_qubits_ == n_qubits_, "inner product dimension mismatch");
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        acc += std::conj(amplitudes_[i]) * other.amplitudes_[i];
    }
    return acc;
}

ProductState::ProductState(int n_qubits) {
    require(n_qubits >= 1, "product state needs at least one qubit");
    factors_.assign(static_cast<std::size_t>(n_qubits), Qubit{1.0, 0.0});
}

ProductState::ProductState(std::vector<Qubit> factors) : factors_(std::move(factors)) {
    require(!factors_.empty(), "product state needs at least one qubit");
    for (Qubit &f : factors_) {
        const double norm = std::sqrt(std::norm(f[0]) + std::norm(f[1]));
        require(norm > 1e-12, "product-state factor has zero norm");
        f[0] /= norm;
        f[1] /= norm;
    }
}

ProductState ProductState::from_bits(std::span<const int> bits) {
    std::vector<Qubit> f;
    f.reserve(bits.size());
    for (int b : bits) {
        require(b == 0 || b == 1, "bits must be 0 or 1");
        f.push_back(b ? Qubit{0.0, 1.0} : Qubit{1.0, 0.0});
    }
    return ProductState(std::move(f));
}

Statevector ProductState::to_statevector() const {
    std::vector<int> all(factors_.size());
    for (std::size_t q = 0; q < all.size(); ++q) {
        all[q] = static_cast<int>(q);
    }
    return restrict_to(all);
}

Statevector ProductState::restrict_to(std::span<const int> qubits) const {
    const int k = static_cast<int>(qubits.size());
    require(k >= 1 && k <= Statevector::kMaxQubits,
            "too many qubits for a dense expansion");
    std::vector<Complex> amps(std::size_t{1} << k);
    amps[0] = Complex{1.0, 0.0};
    // grow one factor at a time; the new qubit becomes the low bit
    std::size_t size = 1;
    for (int j = 0; j < k; ++j) {
        const Qubit &f = qubit(qubits[j]);
        for (std::size_t i = size; i-- > 0;) {
            amps[2 * i + 1] = amps[i] * f[1];
            amps[2 * i] = amps[i] * f[0];
        }
        size *= 2;
    }
    return Statevector(k, std::move(amps));
}

std::optional<ProductState> try_factor_product(const Statevector &state) {
    const int n = state.n_qubits();
    // Each candidate factor is the dominant column of the qubit's reduced
    // state; the product is accepted when it reproduces the state.
    std::vector<ProductState::Qubit> factors;
    factors.reserve(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        const std::uint64_t mask = qubit_mask(n, q);
        Complex r00{0.0, 0.0}, r01{0.0, 0.0}, r11{0.0, 0.0};
        for (std::size_t i = 0; i < state.dim(); ++i) {
            if (i & mask) {
                continue;
            }
            const Complex a0 = state[i];
            const Complex a1 = state[i | mask];
            r00 += a0 * std::conj(a0);
            r01 += a0 * std::conj(a1);
            r11 += a1 * std::conj(a1);
        }
        if (r00.real() >= r11.real()) {
            factors.push_back({r00, std::conj(r01)});
        } else {
            factors.push_back({r01, r11});
        }
    }
    ProductState product(std::move(factors));
    const double fidelity = std::norm(product.to_statevector().inner(state));
    if (std::abs(fidelity - 1.0) > 1e-10) {
        return std::nullopt;
    }
    return product;
}

} // namespace plateau
