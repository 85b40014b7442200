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

#include <gtest/gtest.h>

#include <omp.h>

#include "oracles.hpp"
#include "plateau/core/gate.hpp"
#include "plateau/core/kernels.hpp"

using namespace plateau;
using plateau::testing::embed_contiguous;
using plateau::testing::random_state;
using plateau::testing::to_vector;

namespace {

CVector kernel_apply(const Statevector &s, const CMatrix &m, std::vector<int> targets) {
    Statevector out = s;
    kernels::apply_matrix(out.mutable_amplitudes(), s.n_qubits(), m, targets);
    return to_vector(out);
}

} // namespace

TEST(Kernels, SingleQubitMatchesKroneckerEmbedding) {
    Rng rng(11);
    for (int n : {1, 3, 5}) {
        const Statevector s = random_state(n, rng);
        for (int q = 0; q < n; ++q) {
            const CMatrix u = plateau::testing::random_unitary_qr(2, rng);
            const CVector want = embed_contiguous(u, q, n) * to_vector(s);
            EXPECT_LT((kernel_apply(s, u, {q}) - want).cwiseAbs().maxCoeff(), 1e-12) << n << " " << q;
        }
    }
}

TEST(Kernels, TwoQubitContiguousMatchesKronecker) {
    Rng rng(12);
    const int n = 5;
    const Statevector s = random_state(n, rng);
    const CMatrix u = plateau::testing::random_unitary_qr(4, rng);
    for (int q = 0; q + 1 < n; ++q) {
        const CVector want = embed_contiguous(u, q, n) * to_vector(s);
        EXPECT_LT((kernel_apply(s, u, {q, q + 1}) - want).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Kernels, ProductionMatchesSerialReferenceOnScatteredTargets) {
    Rng rng(13);
    const int n = 6;
    const Statevector s = random_state(n, rng);
    const std::vector<std::vector<int>> target_sets{{4, 1}, {5, 0, 2}, {3}, {0, 5}};
    for (const auto &t : target_sets) {
        const CMatrix u = plateau::testing::random_unitary_qr(1 << t.size(), rng);
        Statevector ref = s;
        kernels::apply_matrix_reference(ref.mutable_amplitudes(), n, u, t);
        EXPECT_LT((kernel_apply(s, u, t) - to_vector(ref)).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Kernels, ParallelPathIsBitIdenticalToSingleThread) {
    // 2^15 amplitudes is past the parallel threshold
    Rng rng(14);
    const int n = 15;
    const Statevector s = random_state(n, rng);
    const CMatrix u = plateau::testing::random_unitary_qr(4, rng);
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const CVector one = kernel_apply(s, u, {3, 9});
    omp_set_num_threads(4);
    const CVector four = kernel_apply(s, u, {3, 9});
    omp_set_num_threads(saved);
    EXPECT_EQ(one, four);
}

TEST(Kernels, RealAndDiagonalSpecializations) {
    Rng rng(15);
    const int n = 4;
    const Statevector s = random_state(n, rng);
    const double c = std::cos(0.35), si = std::sin(0.35);
    for (int q = 0; q < n; ++q) {
        Statevector a = s;
        kernels::apply_1q_real(a.mutable_amplitudes(), n, q, c, -si, si, c);
        CMatrix ry(2, 2);
        ry << c, -si, si, c;
        EXPECT_LT((to_vector(a) - kernel_apply(s, ry, {q})).cwiseAbs().maxCoeff(), 1e-13);

        Statevector b = s;
        const Complex d0(c, -si), d1(c, si);
        kernels::apply_1q_diagonal(b.mutable_amplitudes(), n, q, d0, d1);
        CMatrix dz = CMatrix::Zero(2, 2);
        dz(0, 0) = d0;
        dz(1, 1) = d1;
        EXPECT_LT((to_vector(b) - kernel_apply(s, dz, {q})).cwiseAbs().maxCoeff(), 1e-13);
    }
}

TEST(Kernels, FusedRealTwoQubitMatchesGenericMatrix) {
    Rng rng(16);
    const int n = 5;
    const Statevector s = random_state(n, rng);
    std::uniform_real_distribution<double> u(-1, 1);
    std::array<double, 16> m{};
    CMatrix mm(4, 4);
    for (int i = 0; i < 16; ++i) {
        m[static_cast<std::size_t>(i)] = u(rng);
        mm(i / 4, i % 4) = m[static_cast<std::size_t>(i)];
    }
    for (auto [a, b] : {std::pair{0, 1}, std::pair{3, 1}, std::pair{4, 0}}) {
        Statevector x = s;
        kernels::apply_2q_real(x.mutable_amplitudes(), n, a, b, m);
        Statevector ref = s;
        kernels::apply_matrix_reference(ref.mutable_amplitudes(), n, mm, std::vector<int>{a, b});
        EXPECT_LT((to_vector(x) - to_vector(ref)).cwiseAbs().maxCoeff(), 1e-13);
    }
}

TEST(Kernels, CzFlipsOnlyTheDoublySetAmplitudes) {
    Rng rng(17);
    const Statevector s = random_state(3, rng);
    Statevector x = s;
    kernels::apply_cz(x.mutable_amplitudes(), 3, 0, 2);
    for (std::size_t i = 0; i < 8; ++i) {
        const bool flip = (i & 4) && (i & 1);
        EXPECT_EQ(x[i], flip ? -s[i] : s[i]);
    }
    const CVector via_gate = kernel_apply(s, gates::cz().matrix(), {0, 2});
    EXPECT_LT((to_vector(x) - via_gate).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Kernels, NormSquaredAgreesWithReference) {
    Rng rng(18);
    const Statevector s = random_state(15, rng);
    EXPECT_NEAR(kernels::norm_squared(s.amplitudes()), kernels::norm_squared_reference(s.amplitudes()),
                1e-12);
    EXPECT_NEAR(kernels::norm_squared(s.amplitudes()), 1.0, 1e-12);
}

TEST(Kernels, InsertZeroBits) {
    const std::array<int, 2> pos{1, 3};
    // 0b11 -> bits at 0 and 2 set (positions 1, 3 forced to zero)
    EXPECT_EQ(kernels::insert_zero_bits(0b11, pos), 0b0101u);
    EXPECT_EQ(kernels::insert_zero_bits(0b111, pos), 0b10101u);
}
