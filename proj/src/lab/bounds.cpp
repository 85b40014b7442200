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

#include "plateau/lab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "plateau/core/density_matrix.hpp"

namespace plateau {

namespace {

void check_shape(int n, int m, int L, int l) {
    require(m >= 2 && m % 2 == 0, "m must be even and >= 2");
    require(n >= m && n % m == 0, "n must be a positive multiple of m");
    require(L >= 1 && l >= 1 && l <= L, "need 1 <= l <= L");
}

} // namespace

double f_upper(int n, int m, int L, int l, const ProjectorCase &c) {
    check_shape(n, m, L, l);
    const int xi = n / m;
    double r = 1.0;
    if (!c.ranks.empty()) {
        require(static_cast<int>(c.ranks.size()) == xi, "one rank per subsystem is required");
        for (int rk : c.ranks) {
            require(rk >= 1 && rk < (1 << m), "ranks must describe non-trivial projectors");
            r *= static_cast<double>(rk) * rk;
        }
    }
    const double log2_num = 2.0 * m + (2.0 * m - 1.0) * (L - l);
    const double log2_den = (2.0 - 3.0 / m) * n;
    const double denom = (std::pow(2.0, 2 * m) - 1.0) * std::pow(3.0, xi);
    return std::exp2(log2_num - log2_den) / denom * c.c1 * c.c1 * r;
}

double f_upper(int n, int m, int L, int l, const TracelessCase &c) {
    check_shape(n, m, L, l);
    require(!c.coeffs.empty(), "traceless case needs at least one coefficient");
    const double s = std::accumulate(c.coeffs.begin(), c.coeffs.end(), 0.0);
    const double log2_num = 2.0 * m * (L - l + 1) + 1.0;
    const double log2_den = (3.0 - 4.0 / m) * n;
    return std::exp2(log2_num - log2_den) / std::pow(3.0, 2.0 * n / m) * s * s;
}

double g_prefactor(int m, int L, int l) {
    require(m >= 2 && L >= 1 && l >= 1 && l <= L, "need m >= 2 and 1 <= l <= L");
    const double a = std::pow(2.0, 2 * m) - 1.0;
    return std::exp2(m * (l + 1) - 1) / (a * a * std::pow(std::exp2(m) + 1.0, L + l));
}

CMatrix ensemble_reduced_state(const Ensemble &ensemble, std::span<const int> qubits) {
    require(!qubits.empty() && qubits.size() <= 14, "reduced state needs 1..14 qubits");
    const Eigen::Index d = Eigen::Index{1} << qubits.size();
    CMatrix rho = CMatrix::Zero(d, d);
    for (const auto &m : ensemble) {
        if (m.p == 0.0) {
            continue;
        }
        if (const auto *ps = std::get_if<ProductState>(&m.state)) {
            const Statevector local = ps->restrict_to(qubits);
            const auto a = local.amplitudes();
            const Eigen::Map<const CVector> v(a.data(), static_cast<Eigen::Index>(a.size()));
            rho += m.p * (v * v.adjoint());
        } else {
            rho += m.p * reduced_density_matrix(std::get<Statevector>(m.state), qubits).matrix();
        }
    }
    return rho;
}

GLowerTerms g_lower_terms(const AnsatzLayout &layout, const Observable &observable,
                          const Ensemble &ensemble, const BlockAddress &addr) {
    const int m = layout.block_width();
    const int n = layout.n_qubits();
    require(n % m == 0, "n must be a multiple of m for the lower bound");
    require(observable.n_qubits() == n, "observable and layout sizes differ");
    require(observable.is_m_local(m), "lower bound needs an m-local observable");
    require(addr.l >= 1 && addr.l <= layout.layers(), "block layer out of range");

    GLowerTerms g;
    g.cone = forward_light_cone(layout, addr, observable);
    g.prefactor = g_prefactor(m, layout.layers(), addr.l);

    for (int i : g.cone.i_L) {
        const Term &t = observable.terms()[static_cast<std::size_t>(i)];
        const int start = *aligned_window(t, m, n);
        std::vector<int> window(static_cast<std::size_t>(m));
        std::iota(window.begin(), window.end(), start);
        g.operator_sum += t.coeff * t.coeff * epsilon(term_matrix(t, window));
    }

    const auto &ks = g.cone.k_LB;
    for (std::size_t a = 0; a < ks.size(); ++a) {
        for (std::size_t b = a; b < ks.size(); ++b) {
            // Only runs of consecutive subsystems inside the cone.
            if (ks[b] - ks[a] != static_cast<int>(b - a)) {
                break;
            }
            std::vector<int> qubits(static_cast<std::size_t>((ks[b] - ks[a] + 1) * m));
            std::iota(qubits.begin(), qubits.end(), ks[a] * m);
            g.state_sum += epsilon(ensemble_reduced_state(ensemble, qubits));
        }
    }
    return g;
}

double g_lower(const AnsatzLayout &layout, const Observable &observable,
               const Ensemble &ensemble, const BlockAddress &addr) {
    return g_lower_terms(layout, observable, ensemble, addr).value();
}

} // namespace plateau
