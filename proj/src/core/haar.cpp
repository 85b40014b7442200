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

#include "plateau/core/haar.hpp"

#include <cmath>
#include <random>

#include <Eigen/QR>

namespace plateau {

CMatrix sample_haar(Eigen::Index dim, Rng &rng) {
    require(dim >= 2, "Haar dimension must be >= 2");
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix z(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        for (Eigen::Index r = 0; r < dim; ++r) {
            const double re = g(rng);
            const double im = g(rng);
            z(r, c) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ();
    const CMatrix &r = qr.matrixQR();
    for (Eigen::Index c = 0; c < dim; ++c) {
        const Complex diag = r(c, c);
        const double mod = std::abs(diag);
        q.col(c) *= (mod > 0.0 ? diag / mod : Complex{1.0, 0.0});
    }
    return q;
}

GateMatrix haar_random_unitary(Eigen::Index dim, std::uint64_t seed) {
    require(dim >= 2, "Haar dimension must be >= 2");
    require((dim & (dim - 1)) == 0, "gate dimension must be a power of two");
    Rng rng(seed);
    return GateMatrix(sample_haar(dim, rng));
}

RMatrix random_isometry(Eigen::Index rows, Eigen::Index cols, Rng &rng) {
    require(rows >= 1 && cols >= 1 && cols <= rows, "isometry needs 1 <= cols <= rows");
    std::normal_distribution<double> g(0.0, 1.0);
    RMatrix z(rows, cols);
    for (Eigen::Index c = 0; c < cols; ++c) {
        for (Eigen::Index r = 0; r < rows; ++r) {
            z(r, c) = g(rng);
        }
    }
    Eigen::HouseholderQR<RMatrix> qr(z);
    RMatrix q = qr.householderQ() * RMatrix::Identity(rows, cols);
    const RMatrix &r = qr.matrixQR();
    for (Eigen::Index c = 0; c < cols; ++c) {
        if (r(c, c) < 0.0) {
            q.col(c) *= -1.0;
        }
    }
    return q;
}

} // namespace plateau
