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

#include <functional>

#include "plateau/core/types.hpp"

namespace plateau {

struct NelderMeadOptions {
    /// Edge length of the initial simplex around x0.
    double initial_step = 0.3;
    /// Hard cap on objective evaluations, the initial simplex included.
    int max_evaluations = 40;
    /// Stop early once max |f_i - f_best| over the simplex is below this.
    double f_tolerance = 0.0;
};

struct NelderMeadResult {
    RVector x;
    double f = 0.0;
    int evaluations = 0;
};

/// Derivative-free simplex minimization (reflection 1, expansion 2,
/// contraction 1/2, shrink 1/2). Each call of `f` counts as one evaluation
/// even when the objective is noisy; the best vertex seen is returned.
NelderMeadResult nelder_mead(const std::function<double(const RVector &)> &f, const RVector &x0,
                             const NelderMeadOptions &opts = {});

} // namespace plateau
