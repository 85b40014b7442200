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

#include "plateau/core/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

namespace plateau {

namespace {

std::vector<int> sorted_keep(int n_qubits, std::span<const int> keep) {
    require(!keep.empty(), "keep set must be non-empty");
    std::vector<int> k(keep.begin(), keep.end());
    std::sort(k.begin(), k.end());
    require(std::adjacent_find(k.begin(), k.end()) == k.end(),
            "duplicate qubit in keep set");
    require(k.front() >= 0 && k.back() < n_qubits, "keep qubit out of range");
    return k;
}

// Splits a full index into (kept index, traced index) bit fields.
struct Splitter {
    int n;
    std::vector<int> kept;
    std::vector<int> traced;

    Splitter(int n_qubits, std::vector<int> keep) : n(n_qubits), kept(std::move(keep)) {
        for (int q = 0; q < n; ++q) {
            if (!std::binary_search(kept.begin(), kept.end(), q)) {
                traced.push_back(q);
            }
        }
    }

    std::uint64_t compose(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t idx = 0;
        const int ka = static_cast<int>(kept.size());
        const int kb = static_cast<int>(traced.size());
        for (int j = 0; j < ka; ++j) {
            if (a & (std::uint64_t{1} << (ka - 1 - j))) {
                idx |= qubit_mask(n, kept[static_cast<std::size_t>(j)]);
            }
        }
        for (int j = 0; j < kb; ++j) {
            if (b & (std::uint64_t{1} << (kb - 1 - j))) {
                idx |= qubit_mask(n, traced[static_cast<std::size_t>(j)]);
            }
        }
        return idx;
    }
};

} // namespace

DensityMatrix::DensityMatrix(int n_qubits, CMatrix matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
    require(n_qubits >= 1 && n_qubits <= kMaxQubits,
            "density matrices are limited to " + std::to_string(kMaxQubits) + " qubits");
    const Eigen::Index d = Eigen::Index{1} << n_qubits;
    require(matrix_.rows() == d && matrix_.cols() == d, "density matrix must be 2^n x 2^n");
    const double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    require(herm < kAlgebraicTol, "density matrix is not Hermitian");
    const Complex tr = matrix_.trace();
    require(std::abs(tr - 1.0) < kAlgebraicTol,
            "density matrix trace is " + std::to_string(tr.real()));
    if (d <= 256) {
        Eigen::SelfAdjointEigenSolver<CMatrix> es(matrix_, Eigen::EigenvaluesOnly);
        require(es.eigenvalues().minCoeff() >= -1e-9, "density matrix is not positive");
    }
}

DensityMatrix DensityMatrix::from_pure(const Statevector &state) {
    require(state.n_qubits() <= kMaxQubits, "state too large for a density matrix");
    const auto amps = state.amplitudes();
    const Eigen::Map<const CVector> v(amps.data(), static_cast<Eigen::Index>(amps.size()));
    return DensityMatrix(state.n_qubits(), v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
    require(n_qubits >= 1 && n_qubits <= kMaxQubits, "qubit count out of range");
    const Eigen::Index d = Eigen::Index{1} << n_qubits;
    return DensityMatrix(n_qubits, CMatrix::Identity(d, d) / static_cast<double>(d));
}

CMatrix partial_trace_matrix(const CMatrix &m, int n_qubits, std::span<const int> keep) {
    require(m.rows() == (Eigen::Index{1} << n_qubits) && m.cols() == m.rows(),
            "matrix size does not match qubit count");
    const Splitter split(n_qubits, sorted_keep(n_qubits, keep));
    const std::uint64_t dk = std::uint64_t{1} << split.kept.size();
    const std::uint64_t dt = std::uint64_t{1} << split.traced.size();
    CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
    for (std::uint64_t a = 0; a < dk; ++a) {
        for (std::uint64_t b = 0; b < dk; ++b) {
            Complex acc{0.0, 0.0};
            for (std::uint64_t t = 0; t < dt; ++t) {
                acc += m(static_cast<Eigen::Index>(split.compose(a, t)),
                         static_cast<Eigen::Index>(split.compose(b, t)));
            }
            out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = acc;
        }
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const int> keep) {
    const auto k = sorted_keep(rho.n_qubits(), keep);
    return DensityMatrix(static_cast<int>(k.size()),
                         partial_trace_matrix(rho.matrix(), rho.n_qubits(), k));
}

DensityMatrix reduced_density_matrix(const Statevector &state, std::span<const int> keep) {
    const int n = state.n_qubits();
    const Splitter split(n, sorted_keep(n, keep));
    require(static_cast<int>(split.kept.size()) <= DensityMatrix::kMaxQubits,
            "reduced state too large");
    const auto dk = Eigen::Index{1} << split.kept.size();
    const auto dt = Eigen::Index{1} << split.traced.size();
    // psi(a, t) with a the kept index; rho = psi psi^dagger.
    CMatrix psi(dk, dt);
    for (Eigen::Index a = 0; a < dk; ++a) {
        for (Eigen::Index t = 0; t < dt; ++t) {
            psi(a, t) = state[split.compose(static_cast<std::uint64_t>(a),
                                            static_cast<std::uint64_t>(t))];
        }
    }
    CMatrix rho = psi * psi.adjoint();
    // Symmetrize away rounding so the Hermitian check never trips.
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix(static_cast<int>(split.kept.size()), std::move(rho));
}

} // namespace plateau
