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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plateau/gradient/gradient.hpp"
#include "plateau/lab/bounds.hpp"

namespace plateau {

/// One gradient-statistics scan: a layout, a cost family and the probed
/// parameter.
struct ScanConfig {
    int n = 4;
    int m = 2;
    int L = 1;
    BlockKind kind = BlockKind::HaarBlock;
    CostFamily family = CostFamily::Global;
    /// HaarBlock: block holding the probe rotation.
    BlockAddress target{0, 1, 0};
    /// Parametrized kinds: index of the differentiated angle.
    std::size_t param_index = 0;
    /// BlockProjector ranks (one per subsystem).
    std::vector<int> ranks;
    int samples = 1000;
    std::uint64_t seed = 1;
    GradientMethod method = GradientMethod::ParameterShift;
    /// 0 keeps the OpenMP default; results do not depend on it.
    int workers = 0;
};

inline constexpr int kMinScanSamples = 100;

struct GradStatsReport {
    ScanConfig config;
    double mean = 0.0;
    double mean_se = 0.0;
    double variance = 0.0;
    double variance_se = 0.0;
    std::optional<double> f_upper;
    std::optional<double> g_lower;
    bool zero_mean_pass = false;
    bool sandwich_pass = false;
};

/// Layout (with probe for HaarBlock), observable and |0...0> input of a scan.
CostSpec make_scan_spec(const ScanConfig &cfg);
Observable make_family_observable(CostFamily family, int n, int m,
                                  const std::vector<int> &ranks = {});

/// Per-sample exact derivatives (sample s uses seeds derived from
/// (cfg.seed, s) only).
std::vector<double> sample_gradients(const ScanConfig &cfg);

struct SampleMoments {
    double mean, mean_se, variance, variance_se;
};
/// Variance standard error from the fourth central moment.
SampleMoments sample_moments(const std::vector<double> &x);

GradStatsReport estimate_grad_stats(const ScanConfig &cfg);

enum class GorgeSide { UpperForGlobal, LowerForLocal };
std::string to_string(GorgeSide side);

struct GorgeReport {
    CostFamily family;
    int n;
    double delta;
    int samples;
    double empirical_prob;
    double prob_se;
    double bound;
    GorgeSide side;
    bool pass;
};

/// Upper bound (1 - delta)^{-1} 2^{-n} on Pr{C_G <= delta}.
double gorge_global_bound(int n, double delta);
/// Lower bound (2 delta - 1)^2 / (1/(2n) + (2 delta - 1)^2) on Pr{C_L <= delta}.
double gorge_local_bound(int n, double delta);

/// Fraction of uniform angle draws of the one-layer TensorRx ansatz with
/// C <= delta, checked against the bound with 3 sqrt(b (1-b) / N) slack.
GorgeReport gorge_probability(CostFamily family, int n, double delta, int samples,
                              std::uint64_t seed, int workers = 0);

enum class ScalingModel { Exponential, Polynomial };

struct ScalingFit {
    double slope = 0.0;
    double intercept = 0.0;
    /// Residual sum of squares.
    double residual = 0.0;
    /// Half width of the 95% Student-t interval on the slope.
    double slope_ci = 0.0;
    int points = 0;
};

/// Least squares of log2 Var against n (Exponential) or log2 n
/// (Polynomial). Needs >= 4 points with positive variance.
ScalingFit scaling_fit(const std::vector<std::pair<double, double>> &series, ScalingModel model);

/// Closed-form warm-up variances.
double warmup_global_variance(int n);
double warmup_local_variance(int n);

} // namespace plateau
