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

#include "plateau/cli/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include "plateau/acceptance/acceptance.hpp"
#include "plateau/autoencoder/autoencoder.hpp"
#include "plateau/cli/config_io.hpp"
#include "plateau/cli/output.hpp"
#include "plateau/haar/moments.hpp"
#include "plateau/lab/lab.hpp"

namespace plateau::cli {

namespace {

using config_io::format_double;
using Rows = std::vector<std::vector<std::string>>;

std::string opt_field(const std::optional<double> &v) { return v ? format_double(*v) : ""; }

std::string print_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, v != 0.0 && std::abs(v) < 1e-3 ? "%.6e" : "%.6f", v);
    return buf;
}

GradientMethod parse_method(const std::string &s) {
    if (s == "parameter-shift") {
        return GradientMethod::ParameterShift;
    }
    if (s == "finite-difference") {
        return GradientMethod::FiniteDifference;
    }
    if (s == "warmup-analytic") {
        return GradientMethod::WarmupAnalytic;
    }
    throw ArgumentError("unknown gradient method '" + s +
                        "' (expected parameter-shift, finite-difference or warmup-analytic)");
}

EvalMode parse_mode(const std::string &s) {
    if (s == "auto") {
        return EvalMode::Auto;
    }
    if (s == "dense") {
        return EvalMode::Dense;
    }
    if (s == "lightcone") {
        return EvalMode::LightCone;
    }
    throw ArgumentError("unknown evaluation mode '" + s + "' (expected auto, dense or lightcone)");
}

struct Emit {
    std::ostream &out;
    void csv(const std::string &path, const std::vector<std::string> &header, const Rows &rows,
             const std::string &summary) const {
        const std::string doc = output::csv_document(header, rows);
        if (path.empty()) {
            out << doc;
        } else {
            output::write_atomic(path, doc);
            out << summary << " -> " << path << "\n";
        }
    }
};

// ---- warmup ---------------------------------------------------------------------

struct WarmupArgs {
    std::vector<int> n{2, 4, 6, 8, 10};
    int samples = 100000;
    std::size_t param = 0;
    std::uint64_t seed = 1;
    std::string out;
    std::string landscape_out;
    int landscape_n = 4;
    int landscape_points = 200;
};

void run_warmup(const WarmupArgs &a, int workers, const Emit &emit) {
    Rows rows;
    for (int n : a.n) {
        std::optional<GradStatsReport> rep[2];
        for (int f = 0; f < 2; ++f) {
            ScanConfig cfg;
            cfg.n = n;
            cfg.m = 2;
            cfg.L = 1;
            cfg.kind = BlockKind::TensorRx;
            cfg.family = f == 0 ? CostFamily::Global : CostFamily::Local;
            cfg.param_index = a.param;
            cfg.samples = a.samples;
            cfg.seed = derive_seed(a.seed, static_cast<std::uint64_t>(f), static_cast<std::uint64_t>(n));
            cfg.workers = workers;
            rep[f] = estimate_grad_stats(cfg);
        }
        rows.push_back({std::to_string(n), std::to_string(a.samples), format_double(rep[0]->variance),
                        format_double(rep[0]->variance_se), format_double(warmup_global_variance(n)),
                        format_double(rep[1]->variance), format_double(rep[1]->variance_se),
                        format_double(warmup_local_variance(n))});
    }
    emit.csv(a.out,
             {"n", "samples", "var_global", "var_global_se", "closed_global", "var_local",
              "var_local_se", "closed_local"},
             rows, "warmup: " + std::to_string(rows.size()) + " rows");

    if (!a.landscape_out.empty()) {
        require(a.landscape_n >= 2, "landscape needs n >= 2");
        require(a.landscape_points >= 1, "landscape needs at least one point");
        const AnsatzLayout layout(a.landscape_n, 2, 1, BlockKind::TensorRx);
        const Ensemble zero{{1.0, ProductState(a.landscape_n)}};
        const CostEvaluator g(CostSpec(layout, make_global_projector_cost(a.landscape_n), zero));
        const CostEvaluator l(CostSpec(layout, make_local_cost(a.landscape_n), zero));
        Rows pts;
        for (int i = 0; i < a.landscape_points; ++i) {
            Rng rng = make_rng(a.seed, streams::kParameters, static_cast<std::uint64_t>(i));
            const ParameterVector theta = ParameterVector::uniform(layout, rng);
            pts.push_back({std::to_string(i), std::to_string(a.landscape_n), format_double(theta[0]),
                           format_double(theta[1]), format_double(g.exact(theta)),
                           format_double(l.exact(theta))});
        }
        emit.csv(a.landscape_out, {"point", "n", "theta_0", "theta_1", "cost_global", "cost_local"},
                 pts, "landscape: " + std::to_string(pts.size()) + " points");
    }
}

// ---- variance-scan ----------------------------------------------------------------

struct ScanArgs {
    std::vector<int> n{4, 6, 8};
    int m = 2;
    int L = 1;
    std::vector<int> l;
    std::optional<int> k;
    std::string kind = "haar-block";
    std::string cost = "global";
    std::vector<int> ranks;
    std::size_t param = 0;
    int samples = 1000;
    std::uint64_t seed = 1;
    std::string method = "parameter-shift";
    std::string out;
};

void run_scan(const ScanArgs &a, int workers, const Emit &emit) {
    const BlockKind kind = parse_block_kind(a.kind);
    const CostFamily family = parse_cost_family(a.cost);
    Rows rows;
    for (int n : a.n) {
        std::vector<int> ls = a.l;
        if (kind != BlockKind::HaarBlock) {
            ls = {0}; // address comes from the parameter index
        } else if (ls.empty()) {
            for (int l = 1; l <= a.L; ++l) {
                ls.push_back(l);
            }
        }
        for (int l : ls) {
            ScanConfig cfg;
            cfg.n = n;
            cfg.m = a.m;
            cfg.L = a.L;
            cfg.kind = kind;
            cfg.family = family;
            cfg.ranks = a.ranks;
            cfg.param_index = a.param;
            cfg.samples = a.samples;
            cfg.method = parse_method(a.method);
            cfg.workers = workers;
            cfg.seed = derive_seed(a.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(l));
            int l_col = l;
            if (kind == BlockKind::HaarBlock) {
                const AnsatzLayout plain(n, a.m, a.L, kind);
                cfg.target = {a.k ? *a.k : plain.blocks_in_layer(l) / 2, l, 0};
            } else {
                const AnsatzLayout plain(n, a.m, a.L, kind);
                require(a.param < static_cast<std::size_t>(plain.parameter_count()),
                        "--param is out of range");
                l_col = ParameterVector::zeros(plain).address(a.param).l;
            }
            const GradStatsReport r = estimate_grad_stats(cfg);
            rows.push_back({std::to_string(n), std::to_string(a.m), std::to_string(a.L),
                            std::to_string(l_col), to_string(family), std::to_string(a.samples),
                            format_double(r.mean), format_double(r.mean_se), format_double(r.variance),
                            format_double(r.variance_se), opt_field(r.f_upper), opt_field(r.g_lower)});
        }
    }
    emit.csv(a.out,
             {"n", "m", "L", "l", "cost_family", "samples", "mean", "mean_se", "var", "var_se",
              "F_upper", "G_lower"},
             rows, "variance-scan: " + std::to_string(rows.size()) + " rows");
}

// ---- gorge ----------------------------------------------------------------------------

struct GorgeArgs {
    std::string cost = "global";
    std::vector<int> n{10};
    std::vector<double> delta;
    int samples = 100000;
    std::uint64_t seed = 1;
    std::string out;
};

void run_gorge(const GorgeArgs &a, int workers, const Emit &emit) {
    const CostFamily family = parse_cost_family(a.cost);
    std::vector<double> deltas = a.delta;
    if (deltas.empty()) {
        deltas = {family == CostFamily::Local ? 0.75 : 0.5};
    }
    Rows rows;
    for (int n : a.n) {
        for (std::size_t i = 0; i < deltas.size(); ++i) {
            const GorgeReport r = gorge_probability(
                family, n, deltas[i], a.samples,
                derive_seed(a.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(i)), workers);
            rows.push_back({to_string(family), std::to_string(n), format_double(r.delta),
                            std::to_string(r.samples), format_double(r.empirical_prob),
                            format_double(r.prob_se), format_double(r.bound), to_string(r.side),
                            r.pass ? "1" : "0"});
        }
    }
    emit.csv(a.out,
             {"cost_family", "n", "delta", "samples", "empirical_prob", "prob_se", "bound", "side",
              "pass"},
             rows, "gorge: " + std::to_string(rows.size()) + " rows");
}

// ---- bounds -----------------------------------------------------------------------------

struct BoundsArgs {
    int m = 2;
    int n = 4;
    int L = 1;
    int l = 1;
    std::string which = "projector";
    double c1 = 1.0;
    std::vector<int> ranks;
    std::vector<double> coeffs{1.0};
    std::optional<int> k;
    std::string cost = "local";
};

void run_bounds(const BoundsArgs &a, std::ostream &out) {
    double v = 0.0;
    if (a.which == "projector") {
        v = f_upper(a.n, a.m, a.L, a.l, ProjectorCase{a.c1, a.ranks});
    } else if (a.which == "traceless") {
        v = f_upper(a.n, a.m, a.L, a.l, TracelessCase{a.coeffs});
    } else if (a.which == "local") {
        const AnsatzLayout layout(a.n, a.m, a.L, BlockKind::HaarBlock);
        const int k = a.k ? *a.k : layout.blocks_in_layer(a.l) / 2;
        v = g_lower(layout, make_family_observable(parse_cost_family(a.cost), a.n, a.m),
                    Ensemble{{1.0, ProductState(a.n)}}, {k, a.l, 0});
    } else {
        throw ArgumentError("unknown --case '" + a.which + "' (expected projector, traceless or local)");
    }
    out << print_value(v) << "\n";
}

// ---- haar-check ----------------------------------------------------------------------------

struct HaarArgs {
    std::vector<int> d{2, 4};
    int samples = 100000;
    std::uint64_t seed = 1;
    std::string out;
};

bool run_haar(const HaarArgs &a, const Emit &emit) {
    const auto reps = standard_moment_suite(a.d, a.samples, a.seed);
    Rows rows;
    bool all = true;
    for (const auto &r : reps) {
        all = all && r.pass;
        rows.push_back({r.check, std::to_string(r.d), format_double(r.closed_form.real()),
                        format_double(r.closed_form.imag()), format_double(r.monte_carlo_mean.real()),
                        format_double(r.monte_carlo_mean.imag()), format_double(r.std_error),
                        std::to_string(r.n_samples), r.pass ? "1" : "0"});
    }
    emit.csv(a.out,
             {"check", "d", "closed_re", "closed_im", "mc_re", "mc_im", "std_error", "n_samples",
              "pass"},
             rows, "haar-check: " + std::to_string(rows.size()) + " checks");
    return all;
}

// ---- autoencoder-train -------------------------------------------------------------------

struct TrainArgs {
    int n_a = 1;
    int n_b = 10;
    int L = 2;
    std::string cost = "local";
    std::string mode = "auto";
    TrainConfig cfg;
    std::string out;
    std::string summary;
};

void run_train(const TrainArgs &a, const Emit &emit) {
    const AutoencoderInstance inst = build_instance(a.n_a, a.n_b, a.L);
    TrainConfig cfg = a.cfg;
    cfg.cost_kind = parse_autoencoder_cost(a.cost);
    cfg.mode = parse_mode(a.mode);
    const TrainTrace trace = train(inst, cfg);
    Rows rows;
    for (const TraceRow &r : trace.rows) {
        rows.push_back({std::to_string(r.iteration), std::to_string(r.shots),
                        format_double(r.est_cost), format_double(r.exact_cost)});
    }
    emit.csv(a.out, {"iteration", "shots", "est_cost", "exact_cost"}, rows,
             "autoencoder-train: " + to_string(trace.outcome) + ", final exact cost " +
                 print_value(trace.final_exact()));
    if (!a.summary.empty()) {
        char hash[32];
        std::snprintf(hash, sizeof hash, "%016llx",
                      static_cast<unsigned long long>(trace.rows.back().param_hash));
        const nlohmann::ordered_json j = {
            {"tool", "plateau-lab"},
            {"version", output::tool_version()},
            {"n_a", a.n_a},
            {"n_b", a.n_b},
            {"layers", a.L},
            {"parameters", inst.layout.parameter_count()},
            {"gates", inst.layout.gate_count()},
            {"cost", a.cost},
            {"seed", cfg.seed},
            {"outcome", to_string(trace.outcome)},
            {"iterations", trace.rows.back().iteration},
            {"evaluations", trace.evaluations},
            {"final_shots", trace.rows.back().shots},
            {"final_exact_cost", trace.final_exact()},
            {"final_param_hash", hash},
        };
        output::write_atomic(a.summary, j.dump(2) + "\n");
    }
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"plateau-lab: gradient statistics of layered random circuits"};
    app.set_version_flag("--version", "plateau-lab " + output::tool_version());
    app.set_config("--config", "", "TOML file with one [subcommand] table");
    app.require_subcommand(1);
    app.allow_config_extras(CLI::config_extras_mode::error);
    int workers = 0;
    app.add_option("--workers", workers, "OpenMP threads (0 = runtime default)")
        ->envname("PLATEAU_WORKERS")
        ->check(CLI::NonNegativeNumber);
    const Emit emit{out};

    WarmupArgs wa;
    auto *warm = app.add_subcommand("warmup", "warm-up variances against their closed forms");
    warm->add_option("--n", wa.n, "qubit counts");
    warm->add_option("--samples", wa.samples);
    warm->add_option("--param", wa.param, "differentiated angle");
    warm->add_option("--seed", wa.seed);
    warm->add_option("--out", wa.out, "CSV path (stdout when omitted)");
    warm->add_option("--landscape-out", wa.landscape_out, "CSV of random cost samples");
    warm->add_option("--landscape-n", wa.landscape_n);
    warm->add_option("--landscape-points", wa.landscape_points);

    ScanArgs sa;
    auto *scan = app.add_subcommand("variance-scan", "gradient mean and variance with bounds");
    scan->add_option("--n", sa.n);
    scan->add_option("--m", sa.m);
    scan->add_option("--L", sa.L);
    scan->add_option("--l", sa.l, "layers of the probed block (default all)");
    scan->add_option("--k", sa.k, "block index within the layer (default middle)");
    scan->add_option("--kind", sa.kind, "haar-block, hardware-ry-cz or tensor-rx");
    scan->add_option("--cost", sa.cost, "global, local, local-sum or block-projector");
    scan->add_option("--ranks", sa.ranks, "block-projector ranks");
    scan->add_option("--param", sa.param, "differentiated angle (parametrized kinds)");
    scan->add_option("--samples", sa.samples);
    scan->add_option("--seed", sa.seed);
    scan->add_option("--method", sa.method);
    scan->add_option("--out", sa.out);

    GorgeArgs ga;
    auto *gorge = app.add_subcommand("gorge", "probability of landing in the cost valley");
    gorge->add_option("--cost", ga.cost, "global or local");
    gorge->add_option("--n", ga.n);
    gorge->add_option("--delta", ga.delta);
    gorge->add_option("--samples", ga.samples);
    gorge->add_option("--seed", ga.seed);
    gorge->add_option("--out", ga.out);

    BoundsArgs ba;
    auto *bounds = app.add_subcommand("bounds", "evaluate the variance bounds");
    bounds->add_option("--m", ba.m);
    bounds->add_option("--n", ba.n);
    bounds->add_option("--L", ba.L);
    bounds->add_option("--l", ba.l);
    bounds->add_option("--case", ba.which, "projector, traceless or local");
    bounds->add_option("--c1", ba.c1);
    bounds->add_option("--ranks", ba.ranks);
    bounds->add_option("--coeffs", ba.coeffs);
    bounds->add_option("--k", ba.k);
    bounds->add_option("--cost", ba.cost, "local cost family for --case local");

    HaarArgs ha;
    auto *haar = app.add_subcommand("haar-check", "Monte-Carlo check of Haar integrals");
    haar->add_option("--d", ha.d);
    haar->add_option("--samples", ha.samples);
    haar->add_option("--seed", ha.seed);
    haar->add_option("--out", ha.out);

    TrainArgs ta;
    auto *tr = app.add_subcommand("autoencoder-train", "train the two-state autoencoder");
    tr->add_option("--n-a", ta.n_a);
    tr->add_option("--n-b", ta.n_b);
    tr->add_option("--L", ta.L);
    tr->add_option("--cost", ta.cost, "global or local");
    tr->add_option("--mode", ta.mode, "auto, dense or lightcone");
    tr->add_option("--seed", ta.cfg.seed);
    tr->add_option("--subspace-dim", ta.cfg.subspace_dim);
    tr->add_option("--initial-shots", ta.cfg.initial_shots);
    tr->add_option("--shot-growth", ta.cfg.shot_growth);
    tr->add_option("--max-shots", ta.cfg.max_shots);
    tr->add_option("--plateau-window", ta.cfg.plateau_window);
    tr->add_option("--plateau-tol", ta.cfg.plateau_tolerance);
    tr->add_option("--target", ta.cfg.target_cost);
    tr->add_option("--max-iterations", ta.cfg.max_iterations);
    tr->add_option("--evals-per-iteration", ta.cfg.evals_per_iteration);
    tr->add_option("--initial-step", ta.cfg.initial_step);
    tr->add_option("--out", ta.out);
    tr->add_option("--summary", ta.summary, "JSON run summary path");

    std::vector<std::string> only;
    acceptance::Options ao;
    auto *self = app.add_subcommand("selftest", "acceptance checks");
    self->add_flag("--quick", ao.quick, "reduced samples (smoke run)");
    self->add_option("--only", only, "criterion ids");
    self->add_option("--seed", ao.seed);

    std::vector<std::string> argv_store{"plateau-lab"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &s : argv_store) {
        argv.push_back(s.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitInvalid;
    }

    try {
        if (workers > 0) {
            omp_set_num_threads(workers);
        }
        if (warm->parsed()) {
            run_warmup(wa, workers, emit);
        } else if (scan->parsed()) {
            run_scan(sa, workers, emit);
        } else if (gorge->parsed()) {
            run_gorge(ga, workers, emit);
        } else if (bounds->parsed()) {
            run_bounds(ba, out);
        } else if (haar->parsed()) {
            if (!run_haar(ha, emit)) {
                return kExitSelftestFailed;
            }
        } else if (tr->parsed()) {
            run_train(ta, emit);
        } else if (self->parsed()) {
            ao.workers = workers;
            if (only.empty()) {
                only = acceptance::criterion_ids();
            }
            int failed = 0;
            for (const std::string &id : only) {
                const acceptance::Result r = acceptance::run(id, ao);
                out << acceptance::format(r) << std::endl;
                failed += r.pass ? 0 : 1;
            }
            out << (only.size() - static_cast<std::size_t>(failed)) << "/" << only.size()
                << " criteria passed" << (ao.quick ? " (quick)" : "") << "\n";
            return failed ? kExitSelftestFailed : kExitOk;
        }
    } catch (const ArgumentError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const UnsupportedInput &e) {
        err << "unsupported: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}

} // namespace plateau::cli
