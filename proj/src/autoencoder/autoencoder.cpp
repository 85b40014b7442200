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

#include "plateau/autoencoder/autoencoder.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "plateau/core/haar.hpp"

namespace plateau {

AutoencoderInstance build_instance(int n_a, int n_b, int layers) {
    require(n_a >= 1, "n_A must be >= 1");
    require(n_b >= 2, "n_B must be >= 2 (psi_2 flips two trash qubits)");
    require(layers >= 1, "L must be >= 1");
    const int n = n_a + n_b;
    std::vector<int> bits1(static_cast<std::size_t>(n), 0);
    std::vector<int> bits2(static_cast<std::size_t>(n), 0);
    bits2[0] = 1;
    bits2[static_cast<std::size_t>(n_a)] = 1;
    bits2[static_cast<std::size_t>(n_a + 1)] = 1;
    Ensemble ens{{2.0 / 3.0, ProductState::from_bits(bits1)},
                 {1.0 / 3.0, ProductState::from_bits(bits2)}};
    return {n_a, n_b, AnsatzLayout(n, 2, layers, BlockKind::HardwareRyCz), std::move(ens),
            make_autoencoder_costs(n_a, n_b)};
}

std::string to_string(AutoencoderCost c) { return c == AutoencoderCost::Global ? "global" : "local"; }

AutoencoderCost parse_autoencoder_cost(const std::string &name) {
    if (name == "global") {
        return AutoencoderCost::Global;
    }
    if (name == "local") {
        return AutoencoderCost::Local;
    }
    throw ArgumentError("unknown autoencoder cost '" + name + "' (expected global or local)");
}

std::string to_string(TrainOutcome o) {
    switch (o) {
    case TrainOutcome::Converged:
        return "converged";
    case TrainOutcome::ShotBudgetExhausted:
        return "shot-budget-exhausted";
    case TrainOutcome::MaxIters:
        return "max-iterations";
    }
    return "unknown";
}

int shot_schedule(const TrainConfig &cfg, int level) {
    require(level >= 0, "shot level must be >= 0");
    const double s = std::round(cfg.initial_shots * std::pow(cfg.shot_growth, level));
    return s >= cfg.max_shots ? cfg.max_shots : static_cast<int>(s);
}

std::uint64_t parameter_hash(const std::vector<double> &values) {
    std::uint64_t h = 14695981039346656037ULL;
    for (double v : values) {
        unsigned char bytes[sizeof(double)];
        std::memcpy(bytes, &v, sizeof(double));
        for (unsigned char b : bytes) {
            h ^= b;
            h *= 1099511628211ULL;
        }
    }
    return h;
}

namespace {

void validate(const TrainConfig &cfg) {
    require(cfg.subspace_dim >= 1, "subspace dimension must be >= 1");
    require(cfg.initial_shots >= 1, "initial shots must be >= 1");
    require(cfg.shot_growth > 1.0, "shot growth must be > 1");
    require(cfg.max_shots >= cfg.initial_shots, "max shots must be >= initial shots");
    require(cfg.plateau_window >= 1, "plateau window must be >= 1");
    require(cfg.plateau_tolerance >= 0.0, "plateau tolerance must be >= 0");
    require(cfg.max_iterations >= 0, "max iterations must be >= 0");
    require(cfg.evals_per_iteration >= cfg.subspace_dim + 1,
            "evaluations per iteration must cover the initial simplex (d + 1)");
    require(cfg.initial_step > 0.0, "initial step must be > 0");
    // rounding can stall growth at tiny shot counts
    require(shot_schedule(cfg, 1) > cfg.initial_shots || cfg.initial_shots == cfg.max_shots,
            "shot schedule must be strictly increasing");
}

bool use_dense(const AutoencoderInstance &inst, const TrainConfig &cfg) {
    const int n = inst.layout.n_qubits();
    switch (cfg.mode) {
    case EvalMode::Dense:
        return true;
    case EvalMode::LightCone:
        return false;
    case EvalMode::Auto:
        break;
    }
    return n <= kDenseTrainingQubits;
}

} // namespace

TrainTrace train(const AutoencoderInstance &instance, const TrainConfig &cfg,
                 const VisitCallback &visit) {
    validate(cfg);
    require(cfg.subspace_dim <= instance.layout.parameter_count(),
            "subspace dimension exceeds the parameter count");
    const bool dense = use_dense(instance, cfg);
    const bool global = cfg.cost_kind == AutoencoderCost::Global;
    if (!dense) {
        require(!global, "the global autoencoder cost spans the whole trash register; "
                         "light-cone mode only supports the local cost");
    }
    const CostEvaluator eval(global ? instance.global_spec() : instance.local_spec());
    const AnsatzLayout &layout = instance.layout;
    const auto p = static_cast<Eigen::Index>(layout.parameter_count());

    TrainTrace trace;
    std::uint64_t eval_counter = 0;
    int level = 0;
    int shots = shot_schedule(cfg, level);

    auto estimate = [&](const ParameterVector &theta) {
        if (visit) {
            visit(theta);
        }
        const std::uint64_t s = derive_seed(cfg.seed, streams::kShots, eval_counter++);
        ++trace.evaluations;
        return dense ? eval.shots(theta, shots, s) : eval.lightcone_shots(theta, shots, s);
    };
    auto exact = [&](const ParameterVector &theta) {
        return dense ? eval.exact(theta) : eval.lightcone(theta);
    };
    auto record = [&](int it, double est, const ParameterVector &theta) {
        trace.rows.push_back(
            {it, shots, est, exact(theta), parameter_hash(theta.values()), theta.values()});
    };

    Rng init = make_rng(cfg.seed, streams::kParameters, 0);
    ParameterVector theta = ParameterVector::uniform(layout, init);
    record(0, estimate(theta), theta);
    if (trace.rows.back().exact_cost <= cfg.target_cost) {
        trace.outcome = TrainOutcome::Converged;
        return trace;
    }

    // running best estimate since the current shot level started
    std::vector<double> level_best;
    const NelderMeadOptions nm{cfg.initial_step, cfg.evals_per_iteration, 0.0};
    for (int it = 1; it <= cfg.max_iterations; ++it) {
        Rng rng = make_rng(cfg.seed, streams::kIsometry, static_cast<std::uint64_t>(it));
        const RMatrix a = random_isometry(p, cfg.subspace_dim, rng);
        const RVector base = Eigen::Map<const RVector>(theta.values().data(), p);
        auto point = [&](const RVector &s) {
            const RVector x = base + a * s;
            return ParameterVector(layout, std::vector<double>(x.data(), x.data() + p));
        };
        const NelderMeadResult best = nelder_mead(
            [&](const RVector &s) { return estimate(point(s)); },
            RVector::Zero(cfg.subspace_dim), nm);
        theta = point(best.x);
        record(it, best.f, theta);
        if (trace.rows.back().exact_cost <= cfg.target_cost) {
            trace.outcome = TrainOutcome::Converged;
            return trace;
        }

        level_best.push_back(level_best.empty() ? best.f : std::min(level_best.back(), best.f));
        const auto t = static_cast<int>(level_best.size());
        if (t > cfg.plateau_window) {
            const double gain = level_best[static_cast<std::size_t>(t - 1 - cfg.plateau_window)] -
                                level_best.back();
            if (gain < cfg.plateau_tolerance) {
                if (shots >= cfg.max_shots) {
                    trace.outcome = TrainOutcome::ShotBudgetExhausted;
                    return trace;
                }
                shots = shot_schedule(cfg, ++level);
                level_best.clear();
            }
        }
    }
    trace.outcome = TrainOutcome::MaxIters;
    return trace;
}

bool faithful(double c_local, double c_global, int n_b, double slack) {
    return c_local <= c_global + slack && c_global <= n_b * c_local + slack;
}

FaithfulnessReport compare_costs_trace(const AutoencoderInstance &instance, const TrainTrace &trace,
                                       double slack) {
    require(instance.layout.n_qubits() <= kDenseTrainingQubits + 4,
            "cost comparison needs dense evaluation of the global cost");
    const CostEvaluator g(instance.global_spec());
    const CostEvaluator l(instance.local_spec());
    FaithfulnessReport r;
    for (const TraceRow &row : trace.rows) {
        const ParameterVector theta(instance.layout, row.params);
        const double cg = g.exact(theta);
        const double cl = l.exact(theta);
        ++r.points_checked;
        if (!faithful(cl, cg, instance.n_b, slack)) {
            ++r.violations;
        }
        r.worst_excess = std::max({r.worst_excess, cl - cg, cg - instance.n_b * cl});
    }
    r.pass = r.violations == 0;
    return r;
}

} // namespace plateau
