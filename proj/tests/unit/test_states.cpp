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

#include <map>

#include "oracles.hpp"
#include "plateau/core/density_matrix.hpp"
#include "plateau/core/gate.hpp"
#include "plateau/core/haar.hpp"
#include "plateau/core/sampling.hpp"

using namespace plateau;
using plateau::testing::kron_all;
using plateau::testing::random_state;
using plateau::testing::to_vector;

TEST(Statevector, BasisAndBitOrder) {
    const std::vector<int> bits{1, 0, 1};
    const Statevector s = Statevector::from_bits(bits);
    EXPECT_EQ(s[0b101], Complex(1.0, 0.0));
    EXPECT_NEAR(s.zero_probability(0), 0.0, 1e-15);
    EXPECT_NEAR(s.zero_probability(1), 1.0, 1e-15);
    EXPECT_EQ(qubit_mask(3, 0), 4u);
}

TEST(Statevector, RejectsBadInput) {
    EXPECT_THROW(Statevector(0), ArgumentError);
    EXPECT_THROW(Statevector(Statevector::kMaxQubits + 1), ArgumentError);
    EXPECT_THROW(Statevector(1, {Complex(1.0), Complex(1.0)}), ArgumentError);
    EXPECT_THROW(Statevector(2, {Complex(1.0)}), ArgumentError);
}

TEST(ProductState, ExpansionMatchesKronecker) {
    Rng rng(3);
    std::normal_distribution<double> g;
    std::vector<ProductState::Qubit> f(4);
    for (auto &q : f) {
        q = {Complex(g(rng), g(rng)), Complex(g(rng), g(rng))};
    }
    const ProductState p(f);
    std::vector<CMatrix> cols;
    for (int q = 0; q < 4; ++q) {
        CMatrix c(2, 1);
        c(0, 0) = p.qubit(q)[0];
        c(1, 0) = p.qubit(q)[1];
        cols.push_back(c);
    }
    const CMatrix want = kron_all(cols);
    const CVector got = to_vector(p.to_statevector());
    EXPECT_LT((got - want.col(0)).cwiseAbs().maxCoeff(), 1e-14);

    const std::vector<int> sub{3, 1};
    const CMatrix want_sub = kron_all({cols[3], cols[1]});
    EXPECT_LT((to_vector(p.restrict_to(sub)) - want_sub.col(0)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(ProductState, FactorizationRoundTrip) {
    const std::vector<int> bits{0, 1, 1, 0};
    const auto p = try_factor_product(Statevector::from_bits(bits));
    ASSERT_TRUE(p.has_value());
    EXPECT_LT((to_vector(p->to_statevector()) - to_vector(Statevector::from_bits(bits)))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-12);
    // Bell state is entangled
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_FALSE(try_factor_product(Statevector(2, {r, 0.0, 0.0, r})).has_value());
}

TEST(Gates, RotationsMatchClosedForm) {
    for (double t : {-2.1, 0.0, 0.7, 3.0}) {
        for (PauliAxis a : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
            const CMatrix want = std::cos(t / 2) * CMatrix::Identity(2, 2) -
                                 Complex(0.0, std::sin(t / 2)) * gates::pauli(a).matrix();
            EXPECT_LT((gates::rotation(a, t).matrix() - want).cwiseAbs().maxCoeff(), 1e-15);
        }
    }
    const CMatrix h = gates::hadamard().matrix();
    EXPECT_LT((h * h - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-15);
    // S^dagger H maps Y eigenstates to Z eigenstates via H S^dagger
    const CMatrix hs = h * gates::s_dagger().matrix();
    const CMatrix rotated = hs * gates::pauli(PauliAxis::Y).matrix() * hs.adjoint();
    EXPECT_LT((rotated - gates::pauli(PauliAxis::Z).matrix()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Gates, ValidationErrors) {
    CMatrix bad(2, 2);
    bad << 1.0, 1.0, 0.0, 1.0;
    EXPECT_THROW(GateMatrix{bad}, ArgumentError);
    EXPECT_THROW(GateMatrix{CMatrix::Identity(3, 3)}, ArgumentError);
    Statevector s(2);
    const std::vector<int> dup{1, 1};
    EXPECT_THROW(apply_gate_inplace(s, gates::cz(), dup), ArgumentError);
    const std::vector<int> out_of_range{2};
    EXPECT_THROW(apply_gate_inplace(s, gates::hadamard(), out_of_range), ArgumentError);
}

namespace {

// Brute-force partial trace by explicit index bookkeeping.
CMatrix brute_partial_trace(const CMatrix &rho, int n, const std::vector<int> &keep) {
    const int k = static_cast<int>(keep.size());
    CMatrix out = CMatrix::Zero(1 << k, 1 << k);
    auto sub = [&](std::size_t i) {
        std::size_t r = 0;
        for (int q : keep) {
            r = (r << 1) | ((i >> (n - 1 - q)) & 1);
        }
        return r;
    };
    auto rest = [&](std::size_t i) {
        std::size_t r = 0;
        for (int q = 0; q < n; ++q) {
            if (std::find(keep.begin(), keep.end(), q) == keep.end()) {
                r = (r << 1) | ((i >> (n - 1 - q)) & 1);
            }
        }
        return r;
    };
    const std::size_t d = std::size_t{1} << n;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (rest(i) == rest(j)) {
                out(static_cast<Eigen::Index>(sub(i)), static_cast<Eigen::Index>(sub(j))) +=
                    rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            }
        }
    }
    return out;
}

} // namespace

TEST(DensityMatrix, PartialTraceMatchesBruteForce) {
    Rng rng(5);
    const int n = 4;
    const Statevector s = random_state(n, rng);
    const DensityMatrix rho = DensityMatrix::from_pure(s);
    for (const std::vector<int> &keep : {std::vector<int>{0}, {1, 3}, {0, 2, 3}, {2}}) {
        const CMatrix want = brute_partial_trace(rho.matrix(), n, keep);
        EXPECT_LT((partial_trace(rho, keep).matrix() - want).cwiseAbs().maxCoeff(), 1e-13);
        EXPECT_LT((reduced_density_matrix(s, keep).matrix() - want).cwiseAbs().maxCoeff(), 1e-13);
    }
}

TEST(DensityMatrix, Validation) {
    EXPECT_THROW(DensityMatrix(1, CMatrix::Identity(2, 2)), ArgumentError); // trace 2
    CMatrix neg(2, 2);
    neg << 1.5, 0.0, 0.0, -0.5;
    EXPECT_THROW(DensityMatrix(1, neg), ArgumentError);
    const DensityMatrix mm = DensityMatrix::maximally_mixed(2);
    EXPECT_NEAR(mm.matrix()(0, 0).real(), 0.25, 1e-15);
    EXPECT_THROW(DensityMatrix::maximally_mixed(DensityMatrix::kMaxQubits + 1), ArgumentError);
}

TEST(Haar, UnitaryAndSeeded) {
    Rng rng(7);
    for (int d : {2, 4, 8}) {
        const CMatrix u = sample_haar(d, rng);
        EXPECT_LT((u * u.adjoint() - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff(), 1e-12);
    }
    EXPECT_EQ(haar_random_unitary(4, 99).matrix(), haar_random_unitary(4, 99).matrix());
    EXPECT_NE(haar_random_unitary(4, 99).matrix(), haar_random_unitary(4, 100).matrix());
    EXPECT_THROW(haar_random_unitary(3, 1), ArgumentError);
}

TEST(Haar, PhaseFixMakesDiagonalPhasesUniform) {
    // plain QR output has a biased (real positive) R diagonal; after the
    // fix, E[u_00] = 0 for Haar
    Rng rng(8);
    Complex mean{0.0, 0.0};
    const int samples = 20000;
    for (int i = 0; i < samples; ++i) {
        mean += sample_haar(2, rng)(0, 0);
    }
    mean /= samples;
    EXPECT_LT(std::abs(mean), 0.02);
}

TEST(Haar, IsometryColumnsOrthonormal) {
    Rng rng(9);
    const RMatrix a = random_isometry(51, 10, rng);
    EXPECT_LT((a.transpose() * a - RMatrix::Identity(10, 10)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_THROW(random_isometry(3, 5, rng), ArgumentError);
}

TEST(Sampling, PointMassAlwaysReturnsItsString) {
    const std::vector<int> zero(5, 0);
    for (std::uint64_t s : sample_bitstrings(Statevector::from_bits(zero), 200, 4)) {
        EXPECT_EQ(s, 0u);
    }
}

TEST(Sampling, PlusStateFrequencyWithinBinomialBand) {
    const double r = 1.0 / std::sqrt(2.0);
    const auto shots = sample_bitstrings(Statevector(1, {r, r}), 100000, 21);
    double zeros = 0;
    for (auto s : shots) {
        zeros += s == 0;
    }
    // 0.01 is about 6 standard deviations at 1e5 shots
    EXPECT_NEAR(zeros / shots.size(), 0.5, 0.01);
}

TEST(Sampling, ZeroShotsRejectedAndSeedsReproduce) {
    Rng rng(1);
    const Statevector s = random_state(3, rng);
    EXPECT_THROW(sample_bitstrings(s, 0, 1), ArgumentError);
    EXPECT_EQ(sample_bitstrings(s, 50, 7), sample_bitstrings(s, 50, 7));
}

TEST(Sampling, BornSamplerMatchesDistribution) {
    const BornSampler b(std::vector<double>{0.1, 0.0, 0.6, 0.3});
    Rng rng(2);
    std::map<std::uint64_t, int> counts;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        ++counts[b.draw(rng)];
    }
    EXPECT_EQ(counts.count(1), 0u);
    EXPECT_NEAR(counts[2] / double(n), 0.6, 0.01);
    EXPECT_NEAR(counts[3] / double(n), 0.3, 0.01);
}
