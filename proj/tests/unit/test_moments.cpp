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

#include "plateau/core/haar.hpp"
#include "plateau/haar/moments.hpp"

using namespace plateau;

namespace {

// Second moment from the S_2 Weingarten function:
//   sum_{s,t} delta(i, i'_s) delta(j, j'_t) Wg(s t^-1)
double weingarten_second(int d, const std::array<int, 8> &x) {
    const double dd = d;
    const double wg_id = 1.0 / (dd * dd - 1.0);
    const double wg_swap = -1.0 / (dd * (dd * dd - 1.0));
    const int i1 = x[0], j1 = x[1], i2 = x[2], j2 = x[3];
    const int a1 = x[4], b1 = x[5], a2 = x[6], b2 = x[7];
    double total = 0.0;
    for (int s = 0; s < 2; ++s) {
        const bool rows = s == 0 ? (i1 == a1 && i2 == a2) : (i1 == a2 && i2 == a1);
        for (int t = 0; t < 2; ++t) {
            const bool cols = t == 0 ? (j1 == b1 && j2 == b2) : (j1 == b2 && j2 == b1);
            if (rows && cols) {
                total += s == t ? wg_id : wg_swap;
            }
        }
    }
    return total;
}

} // namespace

TEST(Moments, FirstMoment) {
    EXPECT_DOUBLE_EQ(first_moment_value(4, 1, 2, 1, 2), 0.25);
    EXPECT_DOUBLE_EQ(first_moment_value(4, 1, 2, 2, 2), 0.0);
}

TEST(Moments, SecondMomentMatchesWeingartenSum) {
    for (int d : {2, 3}) {
        std::array<int, 8> x{};
        const int total = static_cast<int>(std::pow(d, 8));
        for (int code = 0; code < total; ++code) {
            int c = code;
            for (int &v : x) {
                v = c % d;
                c /= d;
            }
            ASSERT_NEAR(second_moment_value(d, x), weingarten_second(d, x), 1e-15);
        }
    }
    // E|u_00|^4 = 2 / (d (d + 1))
    EXPECT_NEAR(second_moment_value(4, {0, 0, 0, 0, 0, 0, 0, 0}), 2.0 / 20.0, 1e-15);
}

TEST(Moments, TwoDesignClosedFormsOnSimpleInputs) {
    const CMatrix id = CMatrix::Identity(4, 4);
    CMatrix p = CMatrix::Zero(4, 4);
    p(0, 0) = 1.0;
    EXPECT_NEAR(std::abs(twirl_value(p, p, 4) - 0.25), 0.0, 1e-15);
    // U U^+ = 1 makes the four-fold trace Tr[A B C D] independent of U
    const CMatrix a = random_complex_matrix(4, 1), b = random_complex_matrix(4, 2);
    EXPECT_LT(std::abs(single_trace_value(id, a, id, b, 4) - (a * b).trace()), 1e-12);
    EXPECT_LT(std::abs(double_trace_value(id, a, id, b, 4) - a.trace() * b.trace()), 1e-12);
    const CMatrix reduced = partial_twirl(CMatrix::Identity(8, 8), 2);
    EXPECT_LT((reduced - CMatrix::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Moments, MonteCarloChecksPass) {
    const CMatrix a = random_complex_matrix(2, 3), b = random_complex_matrix(2, 4);
    const auto r1 = check_twirl(a, b, 20000, 5);
    EXPECT_TRUE(r1.pass) << r1.monte_carlo_mean << " vs " << r1.closed_form;
    const auto r2 = check_second_moment(2, {0, 0, 0, 0, 0, 0, 0, 0}, 20000, 6);
    EXPECT_TRUE(r2.pass);
    EXPECT_NEAR(r2.closed_form.real(), 1.0 / 3.0, 1e-15);
    EXPECT_THROW(check_twirl(a, b, kMinMomentSamples - 1, 5), ArgumentError);
}

TEST(Moments, McCatchesAWrongClosedForm) {
    const auto r = moment_check(
        "wrong", 2, Complex(0.6, 0.0), [](const CMatrix &u) { return Complex(std::norm(u(0, 0))); },
        20000, 7);
    EXPECT_FALSE(r.pass);
}
