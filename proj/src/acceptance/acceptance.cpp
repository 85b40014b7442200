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

#include "plateau/acceptance/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include <omp.h>

#include "plateau/autoencoder/autoencoder.hpp"
#include "plateau/haar/moments.hpp"
#include "plateau/lab/lab.hpp"

namespace plateau::acceptance {

namespace {

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

bool rel_equal(double a, double b, double rel) { return std::abs(a - b) <= rel * std::abs(b); }

// ---- warm-up ---------------------------------------------------------------

Result warmup(CostFamily family, const Options &o) {
    const std::vector<int> ns{2, 4, 6, 8, 10};
    Result r;
    r.pass = true;
    std::ostringstream d;
    for (int n : ns) {
        ScanConfig cfg;
        cfg.n = n;
        cfg.m = 2;
        cfg.L = 1;
        cfg.kind = BlockKind::TensorRx;
        cfg.family = family;
        cfg.param_index = 0;
        cfg.samples = o.quick ? 10000 : 100000;
        cfg.seed = derive_seed(o.seed, 0x57a, static_cast<std::uint64_t>(n));
        cfg.workers = o.workers;
        const GradStatsReport rep = estimate_grad_stats(cfg);
        const double closed =
            family == CostFamily::Global ? warmup_global_variance(n) : warmup_local_variance(n);
        const bool ok = std::abs(rep.variance - closed) <= 3.0 * rep.variance_se;
        r.pass = r.pass && ok;
        d << "n=" << n << (ok ? " ok " : " BAD ") << fmt("%.3e", rep.variance) << "/"
          << fmt("%.3e", closed) << " z=" << fmt("%.2f", (rep.variance - closed) / rep.variance_se)
          << "; ";
    }
    r.detail = d.str();
    return r;
}

// ---- Haar-block scan suite ------------------------------------------------

struct SuiteRow {
    ScanConfig cfg;
    GradStatsReport rep;
};

ScanConfig suite_config(int n, int L, int l, CostFamily family, const Options &o) {
    ScanConfig cfg;
    cfg.n = n;
    cfg.m = 2;
    cfg.L = L;
    cfg.kind = BlockKind::HaarBlock;
    cfg.family = family;
    const AnsatzLayout probe_free(n, 2, L, BlockKind::HaarBlock);
    cfg.target = {probe_free.blocks_in_layer(l) / 2, l, 0};
    cfg.samples = o.quick ? 1000 : 5000;
    cfg.seed = derive_seed(o.seed, static_cast<std::uint64_t>(family) * 1000 + n * 100 + L * 10 + l);
    cfg.workers = o.workers;
    return cfg;
}

const std::vector<SuiteRow> &suite(CostFamily family, const Options &o) {
    static std::map<std::pair<int, bool>, std::vector<SuiteRow>> cache;
    auto &rows = cache[{static_cast<int>(family), o.quick}];
    if (!rows.empty()) {
        return rows;
    }
    for (int n : {4, 6, 8}) {
        for (int L = 1; L <= 3; ++L) {
            for (int l = 1; l <= L; ++l) {
                const ScanConfig cfg = suite_config(n, L, l, family, o);
                rows.push_back({cfg, estimate_grad_stats(cfg)});
            }
        }
    }
    return rows;
}

std::string row_tag(const ScanConfig &c) {
    return "n" + std::to_string(c.n) + "L" + std::to_string(c.L) + "l" + std::to_string(c.target.l);
}

Result zero_mean(const Options &o) {
    Result r;
    r.pass = true;
    int checked = 0;
    double worst = 0.0;
    std::ostringstream bad;
    for (CostFamily f : {CostFamily::Global, CostFamily::Local}) {
        for (const SuiteRow &row : suite(f, o)) {
            ++checked;
            const double z = std::abs(row.rep.mean) / row.rep.mean_se;
            worst = std::max(worst, z);
            if (!row.rep.zero_mean_pass) {
                r.pass = false;
                bad << to_string(f) << ":" << row_tag(row.cfg) << " ";
            }
        }
    }
    r.detail = std::to_string(checked) + " scans, max |mean|/se " + fmt("%.2f", worst);
    if (!r.pass) {
        r.detail += ", failing " + bad.str();
    }
    return r;
}

Result upper_bound(const Options &o) {
    Result r;
    const double spot = f_upper(4, 2, 1, 1, ProjectorCase{1.0, {}});
    const bool spot_ok = rel_equal(spot, 16.0 / 540.0, 1e-14);
    r.pass = spot_ok;
    double worst = -1e300;
    std::ostringstream bad;
    for (const SuiteRow &row : suite(CostFamily::Global, o)) {
        const double z = (row.rep.variance - *row.rep.f_upper) / row.rep.variance_se;
        worst = std::max(worst, z);
        if (!row.rep.sandwich_pass) {
            r.pass = false;
            bad << row_tag(row.cfg) << " ";
        }
    }
    r.detail = "f_upper(4,2,1,1)=" + fmt("%.6f", spot) + (spot_ok ? " exact" : " WRONG") +
               ", max (var-F)/se " + fmt("%.2f", worst);
    if (!bad.str().empty()) {
        r.detail += ", failing " + bad.str();
    }
    return r;
}

Result lower_bound(const Options &o) {
    Result r;
    const AnsatzLayout spot_layout(4, 2, 1, BlockKind::HaarBlock);
    const Ensemble zero{{1.0, ProductState(4)}};
    const double spot = g_lower(spot_layout, make_local_cost(4), zero, {0, 1, 0});
    const double expect = 8.0 / 5625.0 * 3.0 / 32.0;
    const bool spot_ok = rel_equal(spot, expect, 1e-14);
    r.pass = spot_ok;
    double worst = 1e300;
    std::ostringstream bad;
    for (const SuiteRow &row : suite(CostFamily::Local, o)) {
        const double z = (row.rep.variance - *row.rep.g_lower) / row.rep.variance_se;
        worst = std::min(worst, z);
        if (!row.rep.sandwich_pass) {
            r.pass = false;
            bad << row_tag(row.cfg) << " ";
        }
    }
    r.detail = "g_lower spot=" + fmt("%.6e", spot) + (spot_ok ? " exact" : " WRONG") +
               ", min (var-G)/se " + fmt("%.2f", worst);
    if (!bad.str().empty()) {
        r.detail += ", failing " + bad.str();
    }
    return r;
}

// ---- scaling ---------------------------------------------------------------

Result scaling(const Options &o) {
    Result r;
    std::ostringstream d;
    auto series = [&](CostFamily family) {
        std::vector<std::pair<double, double>> pts;
        for (int n : {4, 6, 8, 10}) {
            ScanConfig cfg = suite_config(n, 2, 1, family, o);
            cfg.seed = derive_seed(o.seed, 0x5ca1e, static_cast<std::uint64_t>(n) * 16 +
                                                        static_cast<std::uint64_t>(family));
            pts.emplace_back(n, estimate_grad_stats(cfg).variance);
        }
        return scaling_fit(pts, ScalingModel::Exponential);
    };
    const ScalingFit g = series(CostFamily::Global);
    const ScalingFit l = series(CostFamily::LocalSum);
    r.pass = g.slope <= -0.5 && l.slope >= -0.2;
    d << "global slope " << fmt("%.3f", g.slope) << " +- " << fmt("%.3f", g.slope_ci)
      << " (<= -0.5), local-sum slope " << fmt("%.3f", l.slope) << " +- " << fmt("%.3f", l.slope_ci)
      << " (>= -0.2)";
    r.detail = d.str();
    return r;
}

// ---- gorge -----------------------------------------------------------------

Result gorge(const Options &o) {
    const int samples = o.quick ? 20000 : 100000;
    const GorgeReport g =
        gorge_probability(CostFamily::Global, 10, 0.5, samples, derive_seed(o.seed, 0x6019), o.workers);
    const GorgeReport l =
        gorge_probability(CostFamily::Local, 10, 0.75, samples, derive_seed(o.seed, 0x6011), o.workers);
    Result r;
    r.pass = g.pass && l.pass;
    r.detail = "Pr{C_G<=0.5}=" + fmt("%.5f", g.empirical_prob) + " (<= " + fmt("%.5f", g.bound) +
               "), Pr{C_L<=0.75}=" + fmt("%.4f", l.empirical_prob) + " (>= " +
               fmt("%.4f", l.bound) + ")";
    return r;
}

// ---- Haar moments ----------------------------------------------------------

Result haar(const Options &o) {
    const auto reps = standard_moment_suite({2, 4}, o.quick ? kMinMomentSamples : 100000,
                                            derive_seed(o.seed, 0x4aa7));
    Result r;
    int failed = 0;
    double worst = 0.0;
    std::ostringstream bad;
    for (const auto &rep : reps) {
        if (rep.std_error > 0.0) {
            worst = std::max(worst, std::abs(rep.monte_carlo_mean - rep.closed_form) / rep.std_error);
        }
        if (!rep.pass) {
            ++failed;
            bad << rep.check << "(d=" << rep.d << ") ";
        }
    }
    r.pass = failed == 0;
    r.detail = std::to_string(reps.size()) + " checks, " + std::to_string(failed) +
               " failed, max z " + fmt("%.2f", worst);
    if (failed) {
        r.detail += ": " + bad.str();
    }
    return r;
}

// ---- light cone -------------------------------------------------------------

ProductState random_product(int n, Rng &rng) {
    std::normal_distribution<double> g;
    std::vector<ProductState::Qubit> f(static_cast<std::size_t>(n));
    for (auto &q : f) {
        q = {Complex(g(rng), g(rng)), Complex(g(rng), g(rng))};
    }
    return ProductState(std::move(f));
}

Observable random_local_observable(int n, Rng &rng) {
    std::uniform_int_distribution<int> pick(0, 2);
    switch (pick(rng)) {
    case 0:
        return make_local_cost(n);
    case 1:
        return make_local_sum_cost(n);
    default: {
        // nearest-neighbour Pauli products plus single-qubit fields
        std::uniform_real_distribution<double> c(-1.0, 1.0);
        std::vector<Term> terms;
        for (int q = 0; q + 1 < n; q += 2) {
            terms.push_back({c(rng), {Factor::pauli_z(q), Factor::pauli_x(q + 1)}});
            terms.push_back({c(rng), {Factor::pauli_y(q + 1)}});
        }
        return Observable(n, c(rng), std::move(terms), CostFamily::Custom);
    }
    }
}

Result lightcone(const Options &o) {
    const int instances = o.quick ? 20 : 100;
    Rng rng = make_rng(o.seed, 0x11c, 0);
    std::uniform_int_distribution<int> pick_n(2, 8);
    std::uniform_int_distribution<int> pick_l(1, 3);
    std::uniform_int_distribution<int> pick_kind(0, 2);
    double worst = 0.0;
    for (int t = 0; t < instances; ++t) {
        const int n = 2 * pick_n(rng);
        const BlockKind kind =
            std::array{BlockKind::HaarBlock, BlockKind::HardwareRyCz, BlockKind::TensorRx}
                [static_cast<std::size_t>(pick_kind(rng))];
        const AnsatzLayout layout(n, 2, pick_l(rng), kind);
        Ensemble ens{{0.6, random_product(n, rng)}, {0.4, random_product(n, rng)}};
        const CostSpec spec(layout, random_local_observable(n, rng), std::move(ens));
        const CostEvaluator eval(spec, draw_block_seeds(layout, rng()));
        const ParameterVector theta = ParameterVector::uniform(layout, rng);
        worst = std::max(worst, std::abs(eval.lightcone(theta) - eval.exact(theta)));
    }
    const auto t0 = std::chrono::steady_clock::now();
    const AutoencoderInstance big = build_instance(1, 100, 2);
    Rng prng = make_rng(o.seed, 0x11c, 1);
    const double c = lightcone_local_cost(big.local_spec(), ParameterVector::uniform(big.layout, prng));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Result r;
    r.pass = worst <= 1e-9 && secs < 1.0 && std::isfinite(c);
    r.detail = std::to_string(instances) + " instances, max |lc - dense| " + fmt("%.2e", worst) +
               "; n=101 local autoencoder cost " + fmt("%.4f", c) + " in " + fmt("%.3f", secs) + " s";
    return r;
}

// ---- gradient oracle --------------------------------------------------------

Result gradient_oracle(const Options &o) {
    const int instances = o.quick ? 100 : 500;
    Rng rng = make_rng(o.seed, 0x96ad, 0);
    std::uniform_int_distribution<int> pick_n(1, 4);
    std::uniform_int_distribution<int> pick_l(1, 3);
    std::uniform_int_distribution<int> pick_kind(0, 2);
    std::uniform_int_distribution<int> pick_family(0, 2);
    double worst = 0.0;
    for (int t = 0; t < instances; ++t) {
        const int n = 2 * pick_n(rng);
        const int L = pick_l(rng);
        const BlockKind kind =
            std::array{BlockKind::HaarBlock, BlockKind::HardwareRyCz, BlockKind::TensorRx}
                [static_cast<std::size_t>(pick_kind(rng))];
        std::optional<BlockAddress> probe;
        if (kind == BlockKind::HaarBlock) {
            const AnsatzLayout plain(n, 2, L, kind);
            int l = std::uniform_int_distribution<int>(1, L)(rng);
            if (plain.blocks_in_layer(l) == 0) {
                l = 1; // n = 2 has no shifted layer
            }
            const int k = std::uniform_int_distribution<int>(0, plain.blocks_in_layer(l) - 1)(rng);
            probe = BlockAddress{k, l, 0};
        }
        const AnsatzLayout layout(n, 2, L, kind, probe);
        Observable obs = std::array{make_global_projector_cost(n), make_local_cost(n),
                                    random_local_observable(n, rng)}
            [static_cast<std::size_t>(pick_family(rng))];
        const CostSpec spec(layout, std::move(obs), Ensemble{{1.0, random_product(n, rng)}});
        const CostEvaluator eval(spec, draw_block_seeds(layout, rng()));
        const ParameterVector theta = ParameterVector::uniform(layout, rng);
        const auto nu = std::uniform_int_distribution<std::size_t>(0, theta.size() - 1)(rng);
        const double ps = partial_derivative(eval, theta, nu, {GradientMethod::ParameterShift});
        const double fd = partial_derivative(eval, theta, nu, {GradientMethod::FiniteDifference, 1e-5});
        worst = std::max(worst, std::abs(ps - fd));
    }
    Result r;
    r.pass = worst <= 1e-6;
    r.detail = std::to_string(instances) + " instances, max |ps - fd| " + fmt("%.2e", worst);
    return r;
}

// ---- autoencoder --------------------------------------------------------------

Result faithfulness(const Options &o) {
    const AutoencoderInstance inst = build_instance(1, 10, 2);
    const int params = inst.layout.parameter_count();
    const int gates = inst.layout.gate_count();
    const CostEvaluator g(inst.global_spec());
    const CostEvaluator l(inst.local_spec());
    long visited = 0, violations = 0;
    double worst = -1e300;
    const VisitCallback check = [&](const ParameterVector &theta) {
        const double cg = g.exact(theta);
        const double cl = l.exact(theta);
        ++visited;
        worst = std::max({worst, cl - cg, cg - inst.n_b * cl});
        if (!faithful(cl, cg, inst.n_b)) {
            ++violations;
        }
    };
    for (AutoencoderCost kind : {AutoencoderCost::Local, AutoencoderCost::Global}) {
        TrainConfig cfg;
        cfg.cost_kind = kind;
        cfg.max_iterations = o.quick ? 10 : 60;
        cfg.seed = derive_seed(o.seed, 0xfa17, static_cast<std::uint64_t>(kind));
        train(inst, cfg, check);
    }
    Result r;
    r.pass = params == 51 && gates == 71 && violations == 0 && visited > 0;
    r.detail = std::to_string(params) + " parameters, " + std::to_string(gates) + " gates; " +
               std::to_string(visited) + " visited points, " + std::to_string(violations) +
               " violations, max excess " + fmt("%.2e", worst);
    return r;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t h = v.size() / 2;
    return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

Result separation(const Options &o) {
    const int seeds = 9;
    const AutoencoderInstance inst = build_instance(1, 14, 2);
    TrainConfig base;
    base.max_iterations = o.quick ? 20 : 200;
    base.evals_per_iteration = 40;
    base.mode = EvalMode::Dense;
    std::vector<double> local(seeds), global(seeds);
#pragma omp parallel for schedule(dynamic, 1) num_threads(o.workers > 0 ? o.workers : omp_get_max_threads())
    for (int i = 0; i < 2 * seeds; ++i) {
        TrainConfig cfg = base;
        const int s = i / 2;
        cfg.cost_kind = i % 2 ? AutoencoderCost::Global : AutoencoderCost::Local;
        cfg.seed = derive_seed(o.seed, 0x5e9, static_cast<std::uint64_t>(s));
        const double final_cost = train(inst, cfg).final_exact();
        (i % 2 ? global : local)[static_cast<std::size_t>(s)] = final_cost;
    }
    int wins = 0;
    for (int s = 0; s < seeds; ++s) {
        wins += local[static_cast<std::size_t>(s)] * 5.0 <= global[static_cast<std::size_t>(s)];
    }
    const double ml = median(local), mg = median(global);

    const AutoencoderInstance big = build_instance(1, 100, 2);
    TrainConfig cfg;
    cfg.cost_kind = AutoencoderCost::Local;
    cfg.mode = EvalMode::LightCone;
    cfg.max_iterations = o.quick ? 50 : 1000;
    cfg.target_cost = 0.05;
    cfg.seed = derive_seed(o.seed, 0xb16);
    const TrainTrace big_trace = train(big, cfg);

    Result r;
    r.pass = ml * 5.0 <= mg && big_trace.final_exact() < 0.1;
    r.detail = "n_B=14 median local " + fmt("%.4f", ml) + " vs global " + fmt("%.4f", mg) +
               " (ratio " + fmt("%.1f", mg / std::max(ml, 1e-300)) + ", " + std::to_string(wins) +
               "/9 seeds >= 5x); n_B=100 local " + fmt("%.4f", big_trace.final_exact()) + " after " +
               std::to_string(big_trace.rows.back().iteration) + " iterations";
    return r;
}

using Runner = std::function<Result(const Options &)>;

const std::vector<std::pair<std::string, Runner>> &registry() {
    static const std::vector<std::pair<std::string, Runner>> r{
        {"warmup-global", [](const Options &o) { return warmup(CostFamily::Global, o); }},
        {"warmup-local", [](const Options &o) { return warmup(CostFamily::Local, o); }},
        {"zero-mean", zero_mean},
        {"global-upper-bound", upper_bound},
        {"local-lower-bound", lower_bound},
        {"scaling", scaling},
        {"gorge", gorge},
        {"haar-moments", haar},
        {"lightcone", lightcone},
        {"gradient-oracle", gradient_oracle},
        {"autoencoder-faithfulness", faithfulness},
        {"autoencoder-separation", separation},
    };
    return r;
}

} // namespace

const std::vector<std::string> &criterion_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto &[id, _] : registry()) {
            v.push_back(id);
        }
        return v;
    }();
    return ids;
}

Result run(const std::string &id, const Options &opts) {
    for (const auto &[name, runner] : registry()) {
        if (name == id) {
            const auto t0 = std::chrono::steady_clock::now();
            Result r = runner(opts);
            r.id = id;
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return r;
        }
    }
    throw ArgumentError("unknown criterion '" + id + "'");
}

std::string format(const Result &r) {
    return std::string(r.pass ? "PASS " : "FAIL ") + r.id + ": " + r.detail + " [" +
           fmt("%.1f", r.seconds) + " s]";
}

} // namespace plateau::acceptance
