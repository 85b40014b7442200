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

#include "plateau/autoencoder/nelder_mead.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace plateau {

NelderMeadResult nelder_mead(const std::function<double(const RVector &)> &f, const RVector &x0,
                             const NelderMeadOptions &opts) {
    const Eigen::Index d = x0.size();
    require(d >= 1, "Nelder-Mead needs at least one dimension");
    require(opts.initial_step > 0.0, "initial step must be > 0");
    require(opts.max_evaluations >= 1, "evaluation budget must be >= 1");

    int evals = 0;
    NelderMeadResult best{x0, 0.0, 0};
    bool have_best = false;
    auto eval = [&](const RVector &x) {
        const double v = f(x);
        ++evals;
        if (!have_best || v < best.f) {
            best.x = x;
            best.f = v;
            have_best = true;
        }
        return v;
    };
    auto budget_left = [&] { return evals < opts.max_evaluations; };

    std::vector<RVector> pts;
    std::vector<double> vals;
    pts.push_back(x0);
    vals.push_back(eval(x0));
    for (Eigen::Index i = 0; i < d && budget_left(); ++i) {
        RVector x = x0;
        x(i) += opts.initial_step;
        pts.push_back(x);
        vals.push_back(eval(x));
    }
    if (static_cast<Eigen::Index>(pts.size()) < d + 1) {
        best.evaluations = evals;
        return best;
    }

    std::vector<std::size_t> order(pts.size());
    while (budget_left()) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        const std::size_t lo = order.front();
        const std::size_t hi = order.back();
        const std::size_t second = order[order.size() - 2];
        if (opts.f_tolerance > 0.0 && vals[hi] - vals[lo] < opts.f_tolerance) {
            break;
        }
        RVector centroid = RVector::Zero(d);
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j != hi) {
                centroid += pts[j];
            }
        }
        centroid /= static_cast<double>(d);

        const RVector xr = centroid + (centroid - pts[hi]);
        const double fr = eval(xr);
        if (fr < vals[lo]) {
            if (!budget_left()) {
                pts[hi] = xr;
                vals[hi] = fr;
                break;
            }
            const RVector xe = centroid + 2.0 * (centroid - pts[hi]);
            const double fe = eval(xe);
            if (fe < fr) {
                pts[hi] = xe;
                vals[hi] = fe;
            } else {
                pts[hi] = xr;
                vals[hi] = fr;
            }
            continue;
        }
        if (fr < vals[second]) {
            pts[hi] = xr;
            vals[hi] = fr;
            continue;
        }
        if (!budget_left()) {
            break;
        }
        const bool outside = fr < vals[hi];
        const RVector xc = outside ? RVector(centroid + 0.5 * (xr - centroid))
                                   : RVector(centroid + 0.5 * (pts[hi] - centroid));
        const double fc = eval(xc);
        if (fc < (outside ? fr : vals[hi])) {
            pts[hi] = xc;
            vals[hi] = fc;
            continue;
        }
        for (std::size_t j = 0; j < pts.size() && budget_left(); ++j) {
            if (j == lo) {
                continue;
            }
            pts[j] = pts[lo] + 0.5 * (pts[j] - pts[lo]);
            vals[j] = eval(pts[j]);
        }
    }
    best.evaluations = evals;
    return best;
}

} // namespace plateau
