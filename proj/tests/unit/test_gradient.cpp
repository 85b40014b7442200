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
#include "plateau/gradient/gradient.hpp"

using namespace plateau;

TEST(Gradient, ParameterShiftMatchesFiniteDifference) {
    const AutoencoderInstance inst = build_instance(1, 4, 2);
    Rng rng(31);
    const ParameterVector p = ParameterVector::uniform(inst.layout, rng);
    const CostEvaluator eval(inst.local_spec());
    const GradientRequest fd{GradientMethod::FiniteDifference, 1e-5};
    for (std::size_t i = 0; i < p.size(); i += 3) {
        EXPECT_NEAR(partial_derivative(eval, p, i), partial_derivative(eval, p, i, fd), 1e-7) << i;
    }
}

TEST(Gradient, WarmupAnalyticMatchesParameterShift) {
    const int n = 5;
    const AnsatzLayout layout(n, 2, 1, BlockKind::TensorRx);
    Rng rng(32);
    for (const Observable &o : {make_global_projector_cost(n), make_local_cost(n)}) {
        const CostSpec spec(layout, o, {{1.0, Statevector(n)}});
        ASSERT_TRUE(warmup_analytic_applies(spec));
        const ParameterVector p = ParameterVector::uniform(layout, rng);
        const GradientRequest analytic{GradientMethod::WarmupAnalytic};
        for (std::size_t i = 0; i < p.size(); ++i) {
            EXPECT_NEAR(partial_derivative(spec, p, i, analytic), partial_derivative(spec, p, i),
                        1e-12);
        }
    }
    // two layers are outside the closed form
    const AnsatzLayout deep(n, 2, 2, BlockKind::TensorRx);
    const CostSpec spec(deep, make_local_cost(n), {{1.0, Statevector(n)}});
    EXPECT_FALSE(warmup_analytic_applies(spec));
    EXPECT_THROW(partial_derivative(spec, ParameterVector::zeros(deep), 0,
                                    GradientRequest{GradientMethod::WarmupAnalytic}),
                 ArgumentError);
}

TEST(Gradient, WarmupClosedFormAgainstHandDerivative) {
    // C_G = 1 - prod cos^2(t_j / 2), so dC/dt_0 = sin(t_0)/2 prod_{j>0} cos^2(t_j/2)
    const int n = 3;
    const AnsatzLayout layout(n, 2, 1, BlockKind::TensorRx);
    const ParameterVector p(layout, {0.3, -1.1, 2.0});
    const CostSpec spec(layout, make_global_projector_cost(n), {{1.0, Statevector(n)}});
    const double want = 0.5 * std::sin(0.3) * std::pow(std::cos(-0.55), 2) * std::pow(std::cos(1.0), 2);
    EXPECT_NEAR(partial_derivative(spec, p, 0), want, 1e-13);
}

TEST(Gradient, FullGradientMatchesComponents) {
    const AutoencoderInstance inst = build_instance(1, 3, 1);
    Rng rng(33);
    const ParameterVector p = ParameterVector::uniform(inst.layout, rng);
    const CostEvaluator eval(inst.global_spec());
    const std::vector<double> g = full_gradient(eval, p);
    ASSERT_EQ(g.size(), p.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        EXPECT_DOUBLE_EQ(g[i], partial_derivative(eval, p, i));
    }
}
