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

// Independent reference constructions used only by the tests.

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <random>
#include <vector>

#include "plateau/core/rng.hpp"
#include "plateau/core/statevector.hpp"

namespace plateau::testing {

inline CMatrix kron_all(const std::vector<CMatrix> &factors) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (const CMatrix &f : factors) {
        out = Eigen::kroneckerProduct(out, f).eval();
    }
    return out;
}

/// 1_{2^first} (x) g (x) 1_{2^rest} for a gate on contiguous qubits.
inline CMatrix embed_contiguous(const CMatrix &g, int first, int n) {
    const int k = static_cast<int>(std::log2(static_cast<double>(g.rows())) + 0.5);
    const auto left = Eigen::Index{1} << first;
    const auto right = Eigen::Index{1} << (n - first - k);
    return kron_all({CMatrix::Identity(left, left), g, CMatrix::Identity(right, right)});
}

inline CVector to_vector(const Statevector &s) {
    CVector v(static_cast<Eigen::Index>(s.dim()));
    for (std::size_t i = 0; i < s.dim(); ++i) {
        v(static_cast<Eigen::Index>(i)) = s[i];
    }
    return v;
}

inline Statevector from_vector(int n, const CVector &v) {
    return Statevector(n, std::vector<Complex>(v.data(), v.data() + v.size()));
}

inline Statevector random_state(int n, Rng &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> a(std::size_t{1} << n);
    double norm = 0.0;
    for (auto &x : a) {
        x = {g(rng), g(rng)};
        norm += std::norm(x);
    }
    for (auto &x : a) {
        x /= std::sqrt(norm);
    }
    return Statevector(n, std::move(a));
}

inline CMatrix random_unitary_qr(int d, Rng &rng) {
    std::normal_distribution<double> g;
    CMatrix m(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            m(i, j) = {g(rng), g(rng)};
        }
    }
    return Eigen::HouseholderQR<CMatrix>(m).householderQ();
}

inline double max_abs_diff(const CVector &a, const CVector &b) { return (a - b).cwiseAbs().maxCoeff(); }

} // namespace plateau::testing
