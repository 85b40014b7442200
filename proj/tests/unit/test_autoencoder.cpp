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

#include "plateau/autoencoder/autoencoder.hpp"

using namespace plateau;

TEST(Schedule, GrowsGeometricallyAndCaps) {
    TrainConfig cfg;
    EXPECT_EQ(shot_schedule(cfg, 0), 10);
    EXPECT_EQ(shot_schedule(cfg, 1), 15);
    EXPECT_EQ(shot_schedule(cfg, 2), 23);
    EXPECT_EQ(shot_schedule(cfg, 3), 34);
    EXPECT_EQ(shot_schedule(cfg, 40), 100000);
    EXPECT_THROW(shot_schedule(cfg, -1), ArgumentError);
}

TEST(Instance, ElevenQubitCounts) {
    const AutoencoderInstance inst = build_instance(1, 10, 2);
    EXPECT_EQ(inst.layout.parameter_count(), 51);
    EXPECT_EQ(inst.layout.gate_count(), 71);
    ASSERT_EQ(inst.ensemble.size(), 2u);
    EXPECT_NEAR(inst.ensemble[0].p, 2.0 / 3.0, 1e-15);
    EXPECT_THROW(build_instance(1, 1, 2), ArgumentError);
}

TEST(NelderMead, MinimizesQuadraticWithinBudget) {
    int calls = 0;
    auto f = [&](const RVector &x) {
        ++calls;
        return (x(0) - 1.0) * (x(0) - 1.0) + 2.0 * (x(1) + 0.5) * (x(1) + 0.5);
    };
    NelderMeadOptions opts;
    opts.max_evaluations = 400;
    opts.initial_step = 0.5;
    const NelderMeadResult r = nelder_mead(f, RVector::Zero(2), opts);
    EXPECT_NEAR(r.x(0), 1.0, 1e-4);
    EXPECT_NEAR(r.x(1), -0.5, 1e-4);
    EXPECT_LE(r.evaluations, 400);
    EXPECT_EQ(r.evaluations, calls);

    calls = 0;
    opts.max_evaluations = 7;
    const NelderMeadResult small = nelder_mead(f, RVector::Zero(2), opts);
    EXPECT_LE(calls, 7);
    EXPECT_LE(small.f, f(RVector::Zero(2)));
}

TEST(Faithful, Inequalities) {
    EXPECT_TRUE(faithful(0.1, 0.3, 4));
    EXPECT_FALSE(faithful(0.3, 0.1, 4));
    EXPECT_FALSE(faithful(0.1, 0.5, 4));
    EXPECT_TRUE(faithful(0.0, 0.0, 4));
}

TEST(Faithful, HoldsAtRandomParameters) {
    const AutoencoderInstance inst = build_instance(1, 5, 2);
    const CostEvaluator g(inst.global_spec()), l(inst.local_spec());
    Rng rng(41);
    for (int i = 0; i < 1000; ++i) {
        const ParameterVector p = ParameterVector::uniform(inst.layout, rng);
        const double cg = g.exact(p), cl = l.exact(p);
        ASSERT_TRUE(faithful(cl, cg, inst.n_b)) << cl << " " << cg;
    }
}

TEST(Train, StopsAtOnceWhenAlreadyBelowTarget) {
    const AutoencoderInstance inst = build_instance(1, 3, 1);
    TrainConfig cfg;
    cfg.target_cost = 2.0;
    const TrainTrace t = train(inst, cfg);
    EXPECT_EQ(t.outcome, TrainOutcome::Converged);
    ASSERT_EQ(t.rows.size(), 1u);
    EXPECT_EQ(t.rows[0].iteration, 0);
    // only the shot estimate of the starting point
    EXPECT_EQ(t.evaluations, 1);
}

TEST(Train, DeterministicForASeed) {
    const AutoencoderInstance inst = build_instance(1, 4, 1);
    TrainConfig cfg;
    cfg.max_iterations = 15;
    const TrainTrace a = train(inst, cfg), b = train(inst, cfg);
    ASSERT_EQ(a.rows.size(), b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        EXPECT_EQ(a.rows[i].param_hash, b.rows[i].param_hash);
        EXPECT_EQ(a.rows[i].est_cost, b.rows[i].est_cost);
    }
    cfg.seed = 2;
    EXPECT_NE(train(inst, cfg).rows.back().param_hash, a.rows.back().param_hash);
    EXPECT_EQ(a.evaluations, 1 + 15 * cfg.evals_per_iteration);
    EXPECT_EQ(a.outcome, TrainOutcome::MaxIters);
}

TEST(Train, LocalCostImprovesAndVisitorSeesEveryEvaluation) {
    const AutoencoderInstance inst = build_instance(1, 4, 1);
    TrainConfig cfg;
    cfg.max_iterations = 40;
    int visits = 0;
    const TrainTrace t = train(inst, cfg, [&](const ParameterVector &) { ++visits; });
    EXPECT_EQ(visits, t.evaluations);
    EXPECT_LT(t.final_exact(), t.rows.front().exact_cost);
    const FaithfulnessReport f = compare_costs_trace(inst, t);
    EXPECT_TRUE(f.pass);
    EXPECT_EQ(f.points_checked, static_cast<int>(t.rows.size()));
}

TEST(Train, ShotLevelGrowsOnPlateau) {
    const AutoencoderInstance inst = build_instance(1, 3, 1);
    TrainConfig cfg;
    cfg.plateau_window = 2;
    cfg.plateau_tolerance = 10.0; // every window is a plateau
    cfg.max_shots = 40;
    cfg.max_iterations = 50;
    const TrainTrace t = train(inst, cfg);
    EXPECT_EQ(t.outcome, TrainOutcome::ShotBudgetExhausted);
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
        EXPECT_GE(t.rows[i].shots, t.rows[i - 1].shots);
    }
    EXPECT_EQ(t.rows.back().shots, 40);
}

TEST(Train, RejectsBadConfigurations) {
    const AutoencoderInstance inst = build_instance(1, 3, 1);
    TrainConfig cfg;
    cfg.cost_kind = AutoencoderCost::Global;
    cfg.mode = EvalMode::LightCone;
    EXPECT_THROW(train(inst, cfg), ArgumentError);
    cfg.mode = EvalMode::Auto;
    cfg.subspace_dim = 11; // 10 parameters at n = 4, L = 1
    cfg.evals_per_iteration = 40;
    EXPECT_THROW(train(inst, cfg), ArgumentError);
    EXPECT_EQ(parse_autoencoder_cost("global"), AutoencoderCost::Global);
    EXPECT_THROW(parse_autoencoder_cost("both"), ArgumentError);
}

TEST(Hash, SensitiveToEveryBit) {
    const std::vector<double> a{0.1, 0.2};
    std::vector<double> b = a;
    b[1] = std::nextafter(b[1], 1.0);
    EXPECT_NE(parameter_hash(a), parameter_hash(b));
    EXPECT_EQ(parameter_hash(a), parameter_hash({0.1, 0.2}));
}
