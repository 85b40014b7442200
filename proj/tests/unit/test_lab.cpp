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

#include "plateau/lab/lab.hpp"

using namespace plateau;

namespace {

// E[f(t)] for t uniform on [-pi, pi] by the periodic trapezoid rule.
template <class F> double uniform_average(F f) {
    const int n = 4096;
    double s = 0;
    for (int i = 0; i < n; ++i) {
        s += f(-M_PI + 2 * M_PI * i / n);
    }
    return s / n;
}

} // namespace

TEST(Warmup, ClosedFormsAgainstQuadrature) {
    // dC_G/dt_0 = sin(t_0)/2 prod cos^2(t_j/2); dC_L/dt_0 = sin(t_0) / (2n)
    const double s2 = uniform_average([](double t) { return std::pow(std::sin(t) / 2, 2); });
    const double c4 = uniform_average([](double t) { return std::pow(std::cos(t / 2), 4); });
    for (int n : {1, 2, 5, 10}) {
        EXPECT_NEAR(warmup_global_variance(n), s2 * std::pow(c4, n - 1), 1e-14);
        EXPECT_NEAR(warmup_local_variance(n), s2 / (n * n), 1e-14);
    }
}

TEST(Warmup, SampledVarianceNearClosedForm) {
    ScanConfig cfg;
    cfg.n = 4;
    cfg.L = 1;
    cfg.kind = BlockKind::TensorRx;
    cfg.family = CostFamily::Global;
    cfg.samples = 20000;
    const GradStatsReport r = estimate_grad_stats(cfg);
    EXPECT_LE(std::abs(r.variance - warmup_global_variance(4)), 4 * r.variance_se);
    EXPECT_LE(std::abs(r.mean), 4 * r.mean_se);
}

TEST(SampleMoments, KnownData) {
    const SampleMoments m = sample_moments({1.0, 2.0, 3.0, 4.0});
    EXPECT_DOUBLE_EQ(m.mean, 2.5);
    EXPECT_NEAR(m.variance, 5.0 / 3.0, 1e-15);
    EXPECT_NEAR(m.mean_se, std::sqrt(5.0 / 12.0), 1e-15);
    EXPECT_THROW(sample_moments({1.0}), ArgumentError);
}

TEST(ScalingFit, RecoversExponentialSlope) {
    std::vector<std::pair<double, double>> s;
    for (int n : {4, 6, 8, 10, 12}) {
        s.emplace_back(n, 3.0 * std::pow(2.0, -1.415 * n));
    }
    const ScalingFit f = scaling_fit(s, ScalingModel::Exponential);
    EXPECT_NEAR(f.slope, -1.415, 1e-12);
    EXPECT_NEAR(f.intercept, std::log2(3.0), 1e-12);
    EXPECT_NEAR(f.residual, 0.0, 1e-20);
    EXPECT_EQ(f.points, 5);
}

TEST(ScalingFit, PolynomialAndConstantSeries) {
    std::vector<std::pair<double, double>> poly, flat;
    for (int n : {2, 4, 8, 16}) {
        poly.emplace_back(n, 1.0 / (n * n));
        flat.emplace_back(n, 0.125);
    }
    EXPECT_NEAR(scaling_fit(poly, ScalingModel::Polynomial).slope, -2.0, 1e-12);
    EXPECT_NEAR(scaling_fit(flat, ScalingModel::Exponential).slope, 0.0, 1e-12);
    EXPECT_THROW(scaling_fit({{1, 1}, {2, 1}, {3, 1}}, ScalingModel::Exponential), ArgumentError);
    EXPECT_THROW(scaling_fit({{1, 1}, {2, 1}, {3, 1}, {4, 0}}, ScalingModel::Exponential),
                 ArgumentError);
}

TEST(ScalingFit, ConfidenceIntervalFromStudentT) {
    // noisy line: CI half width = t_{0.975, 2} * slope standard error
    const std::vector<std::pair<double, double>> s{
        {1, std::pow(2.0, -1.0)}, {2, std::pow(2.0, -2.2)}, {3, std::pow(2.0, -2.8)}, {4, std::pow(2.0, -4.0)}};
    const ScalingFit f = scaling_fit(s, ScalingModel::Exponential);
    // y = -1, -2.2, -2.8, -4: slope -0.96, residuals 0.06 -0.18 0.18 -0.06
    EXPECT_NEAR(f.slope, -0.96, 1e-12);
    const double se = std::sqrt(0.072 / 2.0 / 5.0);
    EXPECT_NEAR(f.slope_ci, 4.302652729911275 * se, 1e-9);
}

TEST(Gorge, BoundValues) {
    EXPECT_NEAR(gorge_global_bound(10, 0.5), 2.0 / 1024.0, 1e-15);
    // (2 delta - 1)^2 / (1/(2n) + (2 delta - 1)^2) at delta 0.75, n 10
    EXPECT_NEAR(gorge_local_bound(10, 0.75), 0.25 / (0.05 + 0.25), 1e-15);
    EXPECT_THROW(gorge_global_bound(10, 1.0), ArgumentError);
}

TEST(Gorge, EmpiricalProbabilityRespectsBounds) {
    const GorgeReport g = gorge_probability(CostFamily::Global, 6, 0.5, 4000, 3);
    EXPECT_TRUE(g.pass);
    EXPECT_EQ(g.side, GorgeSide::UpperForGlobal);
    const GorgeReport l = gorge_probability(CostFamily::Local, 6, 0.75, 4000, 3);
    EXPECT_TRUE(l.pass);
    EXPECT_GE(l.empirical_prob, l.bound);
}

TEST(Scan, ResultsDoNotDependOnWorkerCount) {
    ScanConfig cfg;
    cfg.n = 6;
    cfg.L = 2;
    cfg.family = CostFamily::Local;
    cfg.target = {1, 1, 0};
    cfg.samples = 300;
    cfg.workers = 1;
    const auto one = sample_gradients(cfg);
    cfg.workers = 3;
    EXPECT_EQ(one, sample_gradients(cfg));
    cfg.samples = kMinScanSamples - 1;
    EXPECT_THROW(sample_gradients(cfg), ArgumentError);
}

TEST(Scan, ReportCarriesBounds) {
    ScanConfig cfg;
    cfg.n = 4;
    cfg.L = 1;
    cfg.family = CostFamily::Global;
    cfg.samples = 500;
    const GradStatsReport g = estimate_grad_stats(cfg);
    ASSERT_TRUE(g.f_upper.has_value());
    EXPECT_NEAR(*g.f_upper, 16.0 / 540.0, 1e-15);
    EXPECT_FALSE(g.g_lower.has_value());
    cfg.family = CostFamily::Local;
    const GradStatsReport l = estimate_grad_stats(cfg);
    ASSERT_TRUE(l.g_lower.has_value());
    EXPECT_NEAR(*l.g_lower, 8.0 / 5625.0 * 3.0 / 32.0, 1e-16);
}
