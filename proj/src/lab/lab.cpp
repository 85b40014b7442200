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

#include "plateau/lab/lab.hpp"

#include <cmath>
#include <exception>

#include <boost/math/distributions/students_t.hpp>
#include <omp.h>

namespace plateau {

namespace {

Ensemble zero_input(int n) { return {{1.0, ProductState(n)}}; }

// Runs body(s) for s in [0, count) across workers and rethrows the first
// error on the calling thread.
template <class Body>
void parallel_for(std::int64_t count, int workers, Body body) {
    const int threads = workers > 0 ? workers : omp_get_max_threads();
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
    for (std::int64_t s = 0; s < count; ++s) {
        try {
            body(s);
        } catch (...) {
#pragma omp critical
            if (!error) {
                error = std::current_exception();
            }
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

} // namespace

Observable make_family_observable(CostFamily family, int n, int m, const std::vector<int> &ranks) {
    switch (family) {
    case CostFamily::Global:
        return make_global_projector_cost(n);
    case CostFamily::Local:
        return make_local_cost(n);
    case CostFamily::LocalSum:
        return make_local_sum_cost(n);
    case CostFamily::BlockProjector:
        return make_block_projector_cost(
            n, m, ranks.empty() ? std::vector<int>(static_cast<std::size_t>(n / m), 1) : ranks);
    default:
        throw ArgumentError("scans support global, local, local-sum and block-projector costs");
    }
}

CostSpec make_scan_spec(const ScanConfig &cfg) {
    std::optional<BlockAddress> probe;
    if (cfg.kind == BlockKind::HaarBlock) {
        probe = cfg.target;
    }
    AnsatzLayout layout(cfg.n, cfg.m, cfg.L, cfg.kind, probe);
    return CostSpec(std::move(layout), make_family_observable(cfg.family, cfg.n, cfg.m, cfg.ranks),
                    zero_input(cfg.n));
}

std::vector<double> sample_gradients(const ScanConfig &cfg) {
    require(cfg.samples >= kMinScanSamples,
            "gradient scans need at least " + std::to_string(kMinScanSamples) + " samples");
    const CostSpec spec = make_scan_spec(cfg);
    const bool haar = cfg.kind == BlockKind::HaarBlock;
    const std::size_t nu = haar ? 0 : cfg.param_index;
    require(nu < static_cast<std::size_t>(spec.layout.parameter_count()),
            "parameter index out of range");
    GradientRequest req{cfg.method, kDefaultFiniteDifferenceStep};

    // Parametrized kinds share one evaluator; Haar kinds draw fresh blocks.
    std::optional<CostEvaluator> shared;
    if (!haar) {
        shared.emplace(spec);
    }
    std::vector<double> g(static_cast<std::size_t>(cfg.samples));
    parallel_for(cfg.samples, cfg.workers, [&](std::int64_t s) {
        const auto us = static_cast<std::uint64_t>(s);
        Rng rng = make_rng(cfg.seed, streams::kParameters, us);
        const ParameterVector theta = ParameterVector::uniform(spec.layout, rng);
        if (haar) {
            const CostEvaluator eval(
                spec, draw_block_seeds(spec.layout, derive_seed(cfg.seed, streams::kGradSamples, us)));
            g[static_cast<std::size_t>(s)] = partial_derivative(eval, theta, nu, req);
        } else {
            g[static_cast<std::size_t>(s)] = partial_derivative(*shared, theta, nu, req);
        }
    });
    return g;
}

SampleMoments sample_moments(const std::vector<double> &x) {
    require(x.size() >= 2, "need at least two samples");
    const double n = static_cast<double>(x.size());
    double sum = 0.0;
    for (double v : x) {
        sum += v;
    }
    const double mean = sum / n;
    double m2 = 0.0, m4 = 0.0;
    for (double v : x) {
        const double d = v - mean;
        m2 += d * d;
        m4 += d * d * d * d;
    }
    const double var = m2 / (n - 1.0);
    m4 /= n;
    const double var_var = (m4 - var * var * (n - 3.0) / (n - 1.0)) / n;
    return {mean, std::sqrt(var / n), var, std::sqrt(std::max(0.0, var_var))};
}

GradStatsReport estimate_grad_stats(const ScanConfig &cfg) {
    const auto g = sample_gradients(cfg);
    const SampleMoments mom = sample_moments(g);
    GradStatsReport r;
    r.config = cfg;
    r.mean = mom.mean;
    r.mean_se = mom.mean_se;
    r.variance = mom.variance;
    r.variance_se = mom.variance_se;

    if (cfg.kind == BlockKind::HaarBlock) {
        if (cfg.family == CostFamily::Global) {
            r.f_upper = f_upper(cfg.n, cfg.m, cfg.L, cfg.target.l, ProjectorCase{1.0, {}});
        } else if (cfg.family == CostFamily::BlockProjector) {
            r.f_upper = f_upper(cfg.n, cfg.m, cfg.L, cfg.target.l, ProjectorCase{1.0, cfg.ranks});
        } else if (cfg.family == CostFamily::Local || cfg.family == CostFamily::LocalSum) {
            const CostSpec spec = make_scan_spec(cfg);
            r.g_lower = g_lower(spec.layout, spec.observable, spec.ensemble, cfg.target);
        }
    }
    r.zero_mean_pass = std::abs(r.mean) <= 3.0 * r.mean_se;
    r.sandwich_pass = true;
    if (r.f_upper) {
        r.sandwich_pass = r.sandwich_pass && r.variance <= *r.f_upper + 3.0 * r.variance_se;
    }
    if (r.g_lower) {
        r.sandwich_pass = r.sandwich_pass && r.variance >= *r.g_lower - 3.0 * r.variance_se;
    }
    return r;
}

std::string to_string(GorgeSide side) {
    return side == GorgeSide::UpperForGlobal ? "upper" : "lower";
}

double gorge_global_bound(int n, double delta) {
    require(n >= 1, "n must be >= 1");
    require(delta > 0.0 && delta < 1.0, "global gorge needs 0 < delta < 1");
    return std::exp2(-n) / (1.0 - delta);
}

double gorge_local_bound(int n, double delta) {
    require(n >= 1, "n must be >= 1");
    require(delta >= 0.5 && delta <= 1.0, "local gorge needs 1/2 <= delta <= 1");
    const double a = (2.0 * delta - 1.0) * (2.0 * delta - 1.0);
    return a / (1.0 / (2.0 * n) + a);
}

GorgeReport gorge_probability(CostFamily family, int n, double delta, int samples,
                              std::uint64_t seed, int workers) {
    require(samples >= kMinScanSamples, "gorge estimates need at least 100 samples");
    GorgeSide side;
    double bound;
    if (family == CostFamily::Global) {
        side = GorgeSide::UpperForGlobal;
        bound = gorge_global_bound(n, delta);
    } else if (family == CostFamily::Local) {
        side = GorgeSide::LowerForLocal;
        bound = gorge_local_bound(n, delta);
    } else {
        throw ArgumentError("gorge probabilities are defined for the global and local costs");
    }
    const CostSpec spec(AnsatzLayout(n, 2, 1, BlockKind::TensorRx),
                        make_family_observable(family, n, 2), zero_input(n));
    const CostEvaluator eval(spec);
    std::vector<char> hit(static_cast<std::size_t>(samples), 0);
    parallel_for(samples, workers, [&](std::int64_t s) {
        Rng rng = make_rng(seed, streams::kGorge, static_cast<std::uint64_t>(s));
        const ParameterVector theta = ParameterVector::uniform(spec.layout, rng);
        hit[static_cast<std::size_t>(s)] = eval.exact(theta) <= delta ? 1 : 0;
    });
    double count = 0.0;
    for (char h : hit) {
        count += h;
    }
    const double p = count / samples;
    const double slack = 3.0 * std::sqrt(std::max(bound * (1.0 - bound), 0.0) / samples);
    const bool pass = side == GorgeSide::UpperForGlobal ? p <= bound + slack : p >= bound - slack;
    return {family, n, delta, samples, p, std::sqrt(p * (1.0 - p) / samples), bound, side, pass};
}

ScalingFit scaling_fit(const std::vector<std::pair<double, double>> &series, ScalingModel model) {
    require(series.size() >= 4, "scaling fits need at least 4 points");
    const auto k = static_cast<Eigen::Index>(series.size());
    RVector x(k), y(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        const auto [n, var] = series[static_cast<std::size_t>(i)];
        require(var > 0.0, "scaling fits need positive variances");
        require(n > 0.0, "scaling fits need positive n");
        x(i) = model == ScalingModel::Exponential ? n : std::log2(n);
        y(i) = std::log2(var);
    }
    const double xm = x.mean(), ym = y.mean();
    const double sxx = (x.array() - xm).square().sum();
    require(sxx > 0.0, "scaling fits need distinct n values");
    const double sxy = ((x.array() - xm) * (y.array() - ym)).sum();
    ScalingFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = ym - fit.slope * xm;
    fit.residual = (y.array() - fit.intercept - fit.slope * x.array()).square().sum();
    fit.points = static_cast<int>(k);
    const double dof = static_cast<double>(k - 2);
    const double se = std::sqrt(fit.residual / dof / sxx);
    const boost::math::students_t t(dof);
    fit.slope_ci = boost::math::quantile(boost::math::complement(t, 0.025)) * se;
    return fit;
}

double warmup_global_variance(int n) {
    require(n >= 1, "n must be >= 1");
    return 0.125 * std::pow(0.375, n - 1);
}

double warmup_local_variance(int n) {
    require(n >= 1, "n must be >= 1");
    return 1.0 / (8.0 * n * n);
}

} // namespace plateau
