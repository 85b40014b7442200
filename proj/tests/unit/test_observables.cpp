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

#include <numeric>

#include "oracles.hpp"
#include "plateau/autoencoder/autoencoder.hpp"
#include "plateau/observables/cost.hpp"

using namespace plateau;
using plateau::testing::random_state;
using plateau::testing::to_vector;

namespace {

// Dense 2^n matrix of an observable, built one term at a time.
CMatrix dense_observable(const Observable &o) {
    const int n = o.n_qubits();
    const auto d = Eigen::Index{1} << n;
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    CMatrix m = o.c0() * CMatrix::Identity(d, d);
    for (const Term &t : o.terms()) {
        m += t.coeff * term_matrix(t, all);
    }
    return m;
}

double dense_expectation(const Observable &o, const Statevector &s) {
    const CVector v = to_vector(s);
    return (v.adjoint() * dense_observable(o) * v)(0, 0).real();
}

Observable mixed_observable(int n) {
    return Observable(n, 0.3,
                      {{0.5, {Factor::pauli_x(0), Factor::pauli_z(2)}},
                       {-1.25, {Factor::pauli_y(1)}},
                       {0.75, {Factor::proj0(3), Factor::pauli_x(1)}}});
}

} // namespace

TEST(Observable, ExpectationMatchesDenseMatrix) {
    Rng rng(21);
    const int n = 4;
    const Statevector s = random_state(n, rng);
    for (const Observable &o : {make_global_projector_cost(n), make_local_cost(n),
                                make_local_sum_cost(n), mixed_observable(n)}) {
        EXPECT_NEAR(o.expectation(s), dense_expectation(o, s), 1e-12);
    }
}

TEST(Observable, FamilyClosedFormsOnBasisStates) {
    const std::vector<int> bits{0, 1, 0, 1};
    const Statevector s = Statevector::from_bits(bits);
    EXPECT_NEAR(make_global_projector_cost(4).expectation(s), 1.0, 1e-15);
    EXPECT_NEAR(make_local_cost(4).expectation(s), 0.5, 1e-15);
    EXPECT_NEAR(make_local_sum_cost(4).expectation(s), 2.0, 1e-15);
    EXPECT_NEAR(make_global_projector_cost(4).expectation(Statevector(4)), 0.0, 1e-15);
}

TEST(Observable, Epsilon) {
    CMatrix p = CMatrix::Zero(4, 4);
    p(0, 0) = 1.0;
    EXPECT_NEAR(epsilon(p), 0.75, 1e-15);
    CMatrix z = CMatrix::Zero(2, 2);
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    EXPECT_NEAR(epsilon(z), 2.0, 1e-15);
    EXPECT_NEAR(epsilon(CMatrix::Identity(4, 4)), 0.0, 1e-15);
}

TEST(Observable, AlignedWindow) {
    const Term a{1.0, {Factor::pauli_z(0), Factor::pauli_z(1)}};
    const Term b{1.0, {Factor::pauli_z(1), Factor::pauli_z(2)}};
    const Term c{1.0, {Factor::pauli_z(0), Factor::pauli_z(2)}};
    EXPECT_EQ(aligned_window(a, 2, 6), 0);
    EXPECT_EQ(aligned_window(b, 2, 6), 1);
    EXPECT_FALSE(aligned_window(c, 2, 6).has_value());
    EXPECT_EQ(aligned_window(c, 4, 8), 0);
    EXPECT_TRUE(make_local_cost(6).is_m_local(2));
    EXPECT_FALSE(make_global_projector_cost(6).is_m_local(2));
}

TEST(Observable, ValidationAndNames) {
    EXPECT_THROW(Observable(2, 0.0, {{1.0, {Factor::pauli_z(2)}}}), ArgumentError);
    EXPECT_THROW(parse_cost_family("nonsense"), ArgumentError);
    EXPECT_EQ(parse_cost_family(to_string(CostFamily::LocalSum)), CostFamily::LocalSum);
}

TEST(Autoencoder, IdentityParametersGiveClosedFormCosts) {
    // all angles zero: Ry is the identity and CZ only adds phases, so the
    // output stays the input ensemble
    for (int n_b : {2, 4, 6}) {
        const AutoencoderInstance inst = build_instance(1, n_b, 1);
        const ParameterVector zero = ParameterVector::zeros(inst.layout);
        EXPECT_NEAR(exact_cost(inst.global_spec(), zero), 1.0 / 3.0, 1e-14);
        EXPECT_NEAR(exact_cost(inst.local_spec(), zero), (1.0 / 3.0) * (2.0 / n_b), 1e-14);
    }
}

TEST(Cost, LightConeMatchesDense) {
    const AutoencoderInstance inst = build_instance(1, 7, 2);
    Rng rng(22);
    for (int rep = 0; rep < 5; ++rep) {
        const ParameterVector p = ParameterVector::uniform(inst.layout, rng);
        const CostEvaluator eval(inst.local_spec());
        EXPECT_NEAR(eval.lightcone(p), eval.exact(p), 1e-12);
    }
}

TEST(Cost, ShotEstimatesAreUnbiased) {
    const AutoencoderInstance inst = build_instance(1, 4, 1);
    Rng rng(23);
    const ParameterVector p = ParameterVector::uniform(inst.layout, rng);
    const CostSpec mixed(inst.layout, mixed_observable(5), inst.ensemble);
    for (const CostSpec &spec : {inst.local_spec(), inst.global_spec(), mixed}) {
        const CostEvaluator eval(spec);
        const double exact = eval.exact(p);
        std::vector<double> est;
        for (std::uint64_t s = 0; s < 200; ++s) {
            est.push_back(eval.shots(p, 100, s));
        }
        const double mean = std::accumulate(est.begin(), est.end(), 0.0) / est.size();
        double var = 0;
        for (double e : est) {
            var += (e - mean) * (e - mean);
        }
        const double se = std::sqrt(var / (est.size() - 1) / est.size());
        EXPECT_LE(std::abs(mean - exact), 3 * se + 1e-12);
    }
}

TEST(Cost, LightConeShotsAreUnbiased) {
    const AutoencoderInstance inst = build_instance(1, 6, 2);
    Rng rng(24);
    const ParameterVector p = ParameterVector::uniform(inst.layout, rng);
    const CostEvaluator eval(inst.local_spec());
    const double exact = eval.exact(p);
    double sum = 0, sum2 = 0;
    const int reps = 200;
    for (int s = 0; s < reps; ++s) {
        const double e = eval.lightcone_shots(p, 100, static_cast<std::uint64_t>(s));
        sum += e;
        sum2 += e * e;
    }
    const double mean = sum / reps;
    const double se = std::sqrt((sum2 / reps - mean * mean) / (reps - 1));
    EXPECT_LE(std::abs(mean - exact), 3 * se);
}

TEST(Cost, PointMassShotsAreExact) {
    // zero angles on a basis input: a single outcome, no shot noise
    const AutoencoderInstance inst = build_instance(1, 3, 1);
    const ParameterVector zero = ParameterVector::zeros(inst.layout);
    const AnsatzLayout layout = inst.layout;
    const std::vector<int> bits{0, 1, 1, 0};
    const CostSpec spec(layout, make_local_cost(4), {{1.0, ProductState::from_bits(bits)}});
    EXPECT_DOUBLE_EQ(shot_cost(spec, zero, 37, 5), 0.5);
}

TEST(Cost, ProjectorFactorsCannotBeSampled) {
    const AnsatzLayout layout(2, 2, 1, BlockKind::HardwareRyCz);
    CMatrix p = CMatrix::Zero(4, 4);
    p(0, 0) = 1.0;
    const Observable o(2, 1.0, {{-1.0, {Factor::projector({0, 1}, p)}}});
    const CostSpec spec(layout, o, {{1.0, Statevector(2)}});
    const ParameterVector zero = ParameterVector::zeros(layout);
    EXPECT_NEAR(exact_cost(spec, zero), 0.0, 1e-15);
    EXPECT_THROW(shot_cost(spec, zero, 10, 1), UnsupportedInput);
}

TEST(Cost, SpecValidation) {
    const AnsatzLayout layout(3, 2, 1, BlockKind::HardwareRyCz);
    EXPECT_THROW(CostSpec(layout, make_local_cost(4), {{1.0, Statevector(3)}}), ArgumentError);
    EXPECT_THROW(CostSpec(layout, make_local_cost(3), {{0.5, Statevector(3)}}), ArgumentError);
}
