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

#include <vector>

#include "plateau/observables/cost.hpp"

namespace plateau {

enum class GradientMethod { ParameterShift, FiniteDifference, WarmupAnalytic };

inline constexpr double kDefaultFiniteDifferenceStep = 1e-5;

struct GradientRequest {
    GradientMethod method = GradientMethod::ParameterShift;
    /// Central-difference step, FiniteDifference only.
    double step = kDefaultFiniteDifferenceStep;
};

/// d C / d theta_nu for the evaluator's circuit draw.
///  ParameterShift   (C(theta + pi/2 e) - C(theta - pi/2 e)) / 2
///  FiniteDifference (C(theta + h e) - C(theta - h e)) / 2h
///  WarmupAnalytic   closed form; TensorRx with one layer on |0...0> and
///                   Proj0 / PauliZ product terms only.
double partial_derivative(const CostEvaluator &eval, const ParameterVector &params,
                          std::size_t param_index, const GradientRequest &req = {});

/// All components, computed in parallel.
std::vector<double> full_gradient(const CostEvaluator &eval, const ParameterVector &params,
                                  const GradientRequest &req = {});

/// Convenience wrappers building the evaluator from a spec.
double partial_derivative(const CostSpec &spec, const ParameterVector &params,
                          std::size_t param_index, const GradientRequest &req = {},
                          const BlockSeeds &block_seeds = {});
std::vector<double> full_gradient(const CostSpec &spec, const ParameterVector &params,
                                  const GradientRequest &req = {},
                                  const BlockSeeds &block_seeds = {});

/// True when the WarmupAnalytic closed form applies to `spec`.
bool warmup_analytic_applies(const CostSpec &spec);

} // namespace plateau
