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
#include <functional>
#include <string>
#include <vector>

#include "plateau/autoencoder/nelder_mead.hpp"
#include "plateau/observables/cost.hpp"

namespace plateau {

/// Two-state compression instance on registers A (qubits 0..n_A-1) and
/// trash B: |0>_A |0...0>_B with p = 2/3 and |1>_A |1,1,0,...,0>_B with
/// p = 1/3, trained with the HardwareRyCz ansatz.
struct AutoencoderInstance {
    int n_a;
    int n_b;
    AnsatzLayout layout;
    Ensemble ensemble;
    AutoencoderCosts costs;

    CostSpec global_spec() const { return CostSpec(layout, costs.global, ensemble); }
    CostSpec local_spec() const { return CostSpec(layout, costs.local, ensemble); }
};

AutoencoderInstance build_instance(int n_a, int n_b, int layers);

enum class AutoencoderCost { Global, Local };
std::string to_string(AutoencoderCost c);
AutoencoderCost parse_autoencoder_cost(const std::string &name);

/// Dense simulation or per-term light cones; Auto picks dense up to
/// kDenseTrainingQubits qubits.
enum class EvalMode { Auto, Dense, LightCone };
inline constexpr int kDenseTrainingQubits = 16;

struct TrainConfig {
    AutoencoderCost cost_kind = AutoencoderCost::Local;
    int subspace_dim = 10;
    int initial_shots = 10;
    double shot_growth = 1.5;
    int max_shots = 100000;
    int plateau_window = 10;
    double plateau_tolerance = 1e-3;
    /// Stop once the exact cost is at or below this value.
    double target_cost = 0.0;
    int max_iterations = 300;
    /// Nelder-Mead evaluations per isometry draw.
    int evals_per_iteration = 40;
    double initial_step = 1.0;
    std::uint64_t seed = 1;
    EvalMode mode = EvalMode::Auto;
};

enum class TrainOutcome { Converged, ShotBudgetExhausted, MaxIters };
std::string to_string(TrainOutcome o);

struct TraceRow {
    int iteration;
    int shots;
    double est_cost;
    double exact_cost;
    std::uint64_t param_hash;
    std::vector<double> params;
};

struct TrainTrace {
    std::vector<TraceRow> rows;
    TrainOutcome outcome = TrainOutcome::MaxIters;
    int evaluations = 0;
    double final_exact() const { return rows.empty() ? 0.0 : rows.back().exact_cost; }
};

/// Shots per evaluation at shot level k: round(initial * growth^k), capped.
int shot_schedule(const TrainConfig &cfg, int level);

/// FNV-1a over the raw bytes of the angles.
std::uint64_t parameter_hash(const std::vector<double> &values);

/// Called with every parameter point the optimizer evaluates.
using VisitCallback = std::function<void(const ParameterVector &)>;

/// Subspace search: each iteration draws a random isometry A
/// (parameter_count x d), minimizes the shot-estimated C(theta + A s) from
/// s = 0 with Nelder-Mead and moves theta to the best point found. A
/// plateau (best estimate at this shot level improved by less than the
/// tolerance over the last window iterations) grows the shots.
TrainTrace train(const AutoencoderInstance &instance, const TrainConfig &cfg,
                 const VisitCallback &visit = {});

struct FaithfulnessReport {
    int points_checked = 0;
    int violations = 0;
    double worst_excess = 0.0;
    bool pass = true;
};

/// C_L' <= C_G' <= n_B C_L' within `slack`.
bool faithful(double c_local, double c_global, int n_b, double slack = 1e-12);

/// Exact C_L' and C_G' at every recorded row (dense instances only).
FaithfulnessReport compare_costs_trace(const AutoencoderInstance &instance,
                                       const TrainTrace &trace, double slack = 1e-12);

} // namespace plateau
