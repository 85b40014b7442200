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

#include "plateau/gradient/gradient.hpp"

#include <cmath>
#include <numbers>

namespace plateau {

namespace {

bool is_zero_input(const MemberState &s) {
    if (const auto *ps = std::get_if<ProductState>(&s)) {
        for (const auto &f : ps->factors()) {
            if (std::abs(std::abs(f[0]) - 1.0) > kAlgebraicTol) {
                return false;
            }
        }
        return true;
    }
    const auto &sv = std::get<Statevector>(s);
    return std::abs(std::abs(sv[0]) - 1.0) < kAlgebraicTol;
}

double warmup_analytic(const CostSpec &spec, const ParameterVector &params, std::size_t j) {
    // Rx(theta)|0>: <P0> = cos^2(theta/2), <Z> = cos(theta).
    const int q_j = static_cast<int>(j);
    double total = 0.0;
    for (const Term &t : spec.observable.terms()) {
        double prod = 1.0;
        bool touches = false;
        for (const Factor &f : t.factors) {
            const int q = f.qubits[0];
            const double th = params[static_cast<std::size_t>(q)];
            const bool proj = f.kind == FactorKind::Proj0;
            if (q == q_j) {
                touches = true;
                prod *= proj ? -0.5 * std::sin(th) : -std::sin(th);
            } else {
                const double c = std::cos(th / 2);
                prod *= proj ? c * c : std::cos(th);
            }
        }
        if (touches) {
            total += t.coeff * prod;
        }
    }
    return total;
}

} // namespace

bool warmup_analytic_applies(const CostSpec &spec) {
    if (spec.layout.kind() != BlockKind::TensorRx || spec.layout.layers() != 1) {
        return false;
    }
    for (const auto &m : spec.ensemble) {
        if (m.p > 0.0 && !is_zero_input(m.state)) {
            return false;
        }
    }
    for (const Term &t : spec.observable.terms()) {
        if (!t.is_diagonal()) {
            return false;
        }
    }
    return true;
}

double partial_derivative(const CostEvaluator &eval, const ParameterVector &params,
                          std::size_t param_index, const GradientRequest &req) {
    require(param_index < params.size(), "parameter index out of range");
    switch (req.method) {
    case GradientMethod::ParameterShift: {
        const auto [plus, minus] =
            parameter_shift_points(params, param_index, std::numbers::pi / 2);
        return 0.5 * (eval.exact(plus) - eval.exact(minus));
    }
    case GradientMethod::FiniteDifference: {
        require(req.step > 0.0, "finite-difference step must be > 0");
        const auto [plus, minus] = parameter_shift_points(params, param_index, req.step);
        return (eval.exact(plus) - eval.exact(minus)) / (2.0 * req.step);
    }
    case GradientMethod::WarmupAnalytic:
        require(warmup_analytic_applies(eval.spec()),
                "warm-up closed form needs one TensorRx layer on |0...0> and diagonal terms");
        return warmup_analytic(eval.spec(), params, param_index);
    }
    return 0.0;
}

std::vector<double> full_gradient(const CostEvaluator &eval, const ParameterVector &params,
                                  const GradientRequest &req) {
    const auto count = static_cast<std::int64_t>(params.size());
    std::vector<double> g(params.size(), 0.0);
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            g[static_cast<std::size_t>(i)] =
                partial_derivative(eval, params, static_cast<std::size_t>(i), req);
        } catch (...) {
#pragma omp critical
            error = std::current_exception();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return g;
}

double partial_derivative(const CostSpec &spec, const ParameterVector &params,
                          std::size_t param_index, const GradientRequest &req,
                          const BlockSeeds &block_seeds) {
    return partial_derivative(CostEvaluator(spec, block_seeds), params, param_index, req);
}

std::vector<double> full_gradient(const CostSpec &spec, const ParameterVector &params,
                                  const GradientRequest &req, const BlockSeeds &block_seeds) {
    return full_gradient(CostEvaluator(spec, block_seeds), params, req);
}

} // namespace plateau
