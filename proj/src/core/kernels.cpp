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

#include "plateau/core/kernels.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace plateau::kernels {

namespace {

// Calls f(i0, i1) for every amplitude pair differing in bit `pos`.
template <class F>
void for_each_pair(std::size_t dim, int pos, F f) {
    const std::int64_t stride = std::int64_t{1} << pos;
    const auto n = static_cast<std::int64_t>(dim);
    if (dim < kParallelMinDim) {
        for (std::int64_t base = 0; base < n; base += 2 * stride) {
            for (std::int64_t j = base; j < base + stride; ++j) {
                f(j, j + stride);
            }
        }
        return;
    }
#pragma omp parallel for
    for (std::int64_t g = 0; g < n / 2; ++g) {
        const std::int64_t i0 = ((g >> pos) << (pos + 1)) | (g & (stride - 1));
        f(i0, i0 + stride);
    }
}

} // namespace

void apply_1q(std::span<Complex> amps, int n_qubits, int q, Complex m00,
              Complex m01, Complex m10, Complex m11) {
    Complex *data = amps.data();
    for_each_pair(amps.size(), n_qubits - 1 - q, [=](std::int64_t i0, std::int64_t i1) {
        const Complex a = data[i0];
        const Complex b = data[i1];
        data[i0] = m00 * a + m01 * b;
        data[i1] = m10 * a + m11 * b;
    });
}

void apply_1q_real(std::span<Complex> amps, int n_qubits, int q, double m00,
                   double m01, double m10, double m11) {
    Complex *data = amps.data();
    for_each_pair(amps.size(), n_qubits - 1 - q, [=](std::int64_t i0, std::int64_t i1) {
        const Complex a = data[i0];
        const Complex b = data[i1];
        data[i0] = m00 * a + m01 * b;
        data[i1] = m10 * a + m11 * b;
    });
}

void apply_1q_diagonal(std::span<Complex> amps, int n_qubits, int q, Complex d0,
                       Complex d1) {
    const std::uint64_t mask = qubit_mask(n_qubits, q);
    const auto dim = static_cast<std::int64_t>(amps.size());
    Complex *data = amps.data();
#pragma omp parallel for if (amps.size() >= kParallelMinDim)
    for (std::int64_t i = 0; i < dim; ++i) {
        data[i] *= (static_cast<std::uint64_t>(i) & mask) ? d1 : d0;
    }
}

void apply_2q_real(std::span<Complex> amps, int n_qubits, int a, int b,
                   const std::array<double, 16> &m) {
    const std::uint64_t ma = qubit_mask(n_qubits, a);
    const std::uint64_t mb = qubit_mask(n_qubits, b);
    std::array<int, 2> positions{n_qubits - 1 - a, n_qubits - 1 - b};
    std::sort(positions.begin(), positions.end());
    const auto groups = static_cast<std::int64_t>(amps.size() >> 2);
    Complex *data = amps.data();
#pragma omp parallel for if (amps.size() >= kParallelMinDim)
    for (std::int64_t g = 0; g < groups; ++g) {
        const std::uint64_t i0 = insert_zero_bits(static_cast<std::uint64_t>(g), positions);
        const std::uint64_t idx[4] = {i0, i0 | mb, i0 | ma, i0 | ma | mb};
        const Complex v[4] = {data[idx[0]], data[idx[1]], data[idx[2]], data[idx[3]]};
        for (int r = 0; r < 4; ++r) {
            data[idx[r]] = m[4 * r] * v[0] + m[4 * r + 1] * v[1] + m[4 * r + 2] * v[2] +
                           m[4 * r + 3] * v[3];
        }
    }
}

void apply_matrix(std::span<Complex> amps, int n_qubits, const CMatrix &m,
                  std::span<const int> targets) {
    const int k = static_cast<int>(targets.size());
    if (k == 1) {
        apply_1q(amps, n_qubits, targets[0], m(0, 0), m(0, 1), m(1, 0),
                 m(1, 1));
        return;
    }
    const std::size_t local_dim = std::size_t{1} << k;
    std::vector<std::uint64_t> offsets(local_dim, 0);
    for (std::size_t j = 0; j < local_dim; ++j) {
        for (int b = 0; b < k; ++b) {
            if (j & (std::size_t{1} << (k - 1 - b))) {
                offsets[j] |= qubit_mask(n_qubits, targets[b]);
            }
        }
    }
    std::vector<int> positions(targets.size());
    std::transform(targets.begin(), targets.end(), positions.begin(),
                   [n_qubits](int t) { return n_qubits - 1 - t; });
    std::sort(positions.begin(), positions.end());

    const auto groups = static_cast<std::int64_t>(amps.size() >> k);
    Complex *data = amps.data();
#pragma omp parallel if (amps.size() >= kParallelMinDim)
    {
        std::vector<Complex> in(local_dim);
#pragma omp for
        for (std::int64_t g = 0; g < groups; ++g) {
            const std::uint64_t base =
                insert_zero_bits(static_cast<std::uint64_t>(g), positions);
            for (std::size_t j = 0; j < local_dim; ++j) {
                in[j] = data[base + offsets[j]];
            }
            for (std::size_t r = 0; r < local_dim; ++r) {
                Complex acc{0.0, 0.0};
                for (std::size_t c = 0; c < local_dim; ++c) {
                    acc += m(static_cast<Eigen::Index>(r),
                             static_cast<Eigen::Index>(c)) *
                           in[c];
                }
                data[base + offsets[r]] = acc;
            }
        }
    }
}

void apply_cz(std::span<Complex> amps, int n_qubits, int a, int b) {
    const std::uint64_t both = qubit_mask(n_qubits, a) | qubit_mask(n_qubits, b);
    const auto dim = static_cast<std::int64_t>(amps.size());
    Complex *data = amps.data();
#pragma omp parallel for if (amps.size() >= kParallelMinDim)
    for (std::int64_t i = 0; i < dim; ++i) {
        if ((static_cast<std::uint64_t>(i) & both) == both) [[unlikely]] {
            data[i] = -data[i];
        }
    }
}

void apply_matrix_reference(std::span<Complex> amps, int n_qubits,
                            const CMatrix &m, std::span<const int> targets) {
    const int k = static_cast<int>(targets.size());
    std::uint64_t target_bits = 0;
    for (int t : targets) {
        target_bits |= qubit_mask(n_qubits, t);
    }
    const std::vector<Complex> in(amps.begin(), amps.end());
    for (std::size_t i = 0; i < in.size(); ++i) {
        std::size_t row = 0;
        for (int b = 0; b < k; ++b) {
            row = (row << 1) | ((i & qubit_mask(n_qubits, targets[b])) ? 1 : 0);
        }
        Complex acc{0.0, 0.0};
        for (std::size_t col = 0; col < (std::size_t{1} << k); ++col) {
            std::uint64_t src = i & ~target_bits;
            for (int b = 0; b < k; ++b) {
                if (col & (std::size_t{1} << (k - 1 - b))) {
                    src |= qubit_mask(n_qubits, targets[b]);
                }
            }
            acc += m(static_cast<Eigen::Index>(row),
                     static_cast<Eigen::Index>(col)) *
                   in[src];
        }
        amps[i] = acc;
    }
}

double norm_squared(std::span<const Complex> amps) {
    const auto dim = static_cast<std::int64_t>(amps.size());
    const Complex *data = amps.data();
    double total = 0.0;
#pragma omp parallel for reduction(+ : total) if (amps.size() >= kParallelMinDim)
    for (std::int64_t i = 0; i < dim; ++i) {
        total += std::norm(data[i]);
    }
    return total;
}

double norm_squared_reference(std::span<const Complex> amps) {
    double total = 0.0;
    for (const Complex &a : amps) {
        total += std::norm(a);
    }
    return total;
}

} // namespace plateau::kernels
