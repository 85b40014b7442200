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

#include "plateau/observables/observable.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "plateau/core/kernels.hpp"

namespace plateau {

namespace {

const Complex kI{0.0, 1.0};

CMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    CMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

std::vector<int> identity_map(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

} // namespace

Factor Factor::proj0(int q) { return {FactorKind::Proj0, {q}, {}}; }
Factor Factor::pauli_x(int q) { return {FactorKind::PauliX, {q}, {}}; }
Factor Factor::pauli_y(int q) { return {FactorKind::PauliY, {q}, {}}; }
Factor Factor::pauli_z(int q) { return {FactorKind::PauliZ, {q}, {}}; }

Factor Factor::projector(std::vector<int> qubits, CMatrix p) {
    require(!qubits.empty(), "projector needs qubits");
    const Eigen::Index d = Eigen::Index{1} << qubits.size();
    require(p.rows() == d && p.cols() == d, "projector size does not match its qubits");
    require((p * p - p).cwiseAbs().maxCoeff() < kAlgebraicTol, "projector factor must satisfy P^2 = P");
    require((p - p.adjoint()).cwiseAbs().maxCoeff() < kAlgebraicTol, "projector must be Hermitian");
    return {FactorKind::Projector, std::move(qubits), std::move(p)};
}

CMatrix Factor::dense() const {
    switch (kind) {
    case FactorKind::Proj0:
        return mat2(1.0, 0.0, 0.0, 0.0);
    case FactorKind::PauliX:
        return mat2(0.0, 1.0, 1.0, 0.0);
    case FactorKind::PauliY:
        return mat2(0.0, -kI, kI, 0.0);
    case FactorKind::PauliZ:
        return mat2(1.0, 0.0, 0.0, -1.0);
    case FactorKind::Projector:
        return matrix;
    }
    return {};
}

bool Factor::is_pauli() const {
    return kind == FactorKind::PauliX || kind == FactorKind::PauliY || kind == FactorKind::PauliZ;
}

std::vector<int> Term::support() const {
    std::vector<int> s;
    for (const auto &f : factors) {
        s.insert(s.end(), f.qubits.begin(), f.qubits.end());
    }
    std::sort(s.begin(), s.end());
    return s;
}

bool Term::is_diagonal() const {
    return std::all_of(factors.begin(), factors.end(), [](const Factor &f) {
        return f.kind == FactorKind::Proj0 || f.kind == FactorKind::PauliZ;
    });
}

std::string to_string(CostFamily family) {
    switch (family) {
    case CostFamily::Custom:
        return "custom";
    case CostFamily::Global:
        return "global";
    case CostFamily::Local:
        return "local";
    case CostFamily::LocalSum:
        return "local-sum";
    case CostFamily::BlockProjector:
        return "block-projector";
    case CostFamily::AutoencoderGlobal:
        return "autoencoder-global";
    case CostFamily::AutoencoderLocal:
        return "autoencoder-local";
    }
    return "?";
}

CostFamily parse_cost_family(const std::string &name) {
    for (CostFamily f : {CostFamily::Custom, CostFamily::Global, CostFamily::Local,
                         CostFamily::LocalSum, CostFamily::BlockProjector,
                         CostFamily::AutoencoderGlobal, CostFamily::AutoencoderLocal}) {
        if (to_string(f) == name) {
            return f;
        }
    }
    throw ArgumentError("unknown cost family '" + name + "'");
}

Observable::Observable(int n_qubits, double c0, std::vector<Term> terms, CostFamily family)
    : n_qubits_(n_qubits), c0_(c0), terms_(std::move(terms)), family_(family) {
    require(n_qubits >= 1, "observable needs at least one qubit");
    for (const Term &t : terms_) {
        require(!t.factors.empty(), "observable term without factors");
        for (const Factor &f : t.factors) {
            require(!f.qubits.empty(), "factor without qubits");
            if (f.kind != FactorKind::Projector) {
                require(f.qubits.size() == 1, "single-qubit factor with several qubits");
            }
        }
        const auto s = t.support();
        require(s.front() >= 0 && s.back() < n_qubits, "term support out of range");
        require(std::adjacent_find(s.begin(), s.end()) == s.end(),
                "factors of one term overlap");
    }
}

bool Observable::is_m_local(int m) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const Term &t) {
        return aligned_window(t, m, n_qubits_).has_value();
    });
}

double Observable::expectation(const Statevector &state) const {
    require(state.n_qubits() == n_qubits_, "state and observable sizes differ");
    double total = c0_;
    for (const Term &t : terms_) {
        total += t.coeff * term_expectation(t, state);
    }
    return total;
}

double term_expectation(const Term &term, const Statevector &state,
                        std::span<const int> local_of) {
    const int n = state.n_qubits();
    const std::vector<int> ident = local_of.empty() ? identity_map(n) : std::vector<int>{};
    const std::span<const int> map = local_of.empty() ? std::span<const int>(ident) : local_of;

    if (term.is_diagonal()) {
        std::uint64_t proj_mask = 0;
        std::uint64_t z_mask = 0;
        for (const Factor &f : term.factors) {
            const std::uint64_t bit = qubit_mask(n, map[static_cast<std::size_t>(f.qubits[0])]);
            (f.kind == FactorKind::Proj0 ? proj_mask : z_mask) |= bit;
        }
        double acc = 0.0;
        const auto amps = state.amplitudes();
        for (std::size_t i = 0; i < amps.size(); ++i) {
            if (i & proj_mask) {
                continue;
            }
            const double p = std::norm(amps[i]);
            acc += (std::popcount(static_cast<std::uint64_t>(i) & z_mask) & 1) ? -p : p;
        }
        return acc;
    }

    std::vector<Complex> work(state.amplitudes().begin(), state.amplitudes().end());
    std::vector<int> targets;
    for (const Factor &f : term.factors) {
        targets.clear();
        for (int q : f.qubits) {
            targets.push_back(map[static_cast<std::size_t>(q)]);
        }
        kernels::apply_matrix(work, n, f.dense(), targets);
    }
    Complex acc{0.0, 0.0};
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < work.size(); ++i) {
        acc += std::conj(amps[i]) * work[i];
    }
    return acc.real();
}

std::optional<int> aligned_window(const Term &term, int m, int n_qubits) {
    const auto s = term.support();
    const int half = m / 2;
    std::optional<int> shifted;
    for (int start = 0; start + m <= n_qubits; start += half) {
        if (s.front() >= start && s.back() < start + m) {
            if (start % m == 0) {
                return start;
            }
            if (!shifted) {
                shifted = start;
            }
        }
    }
    return shifted;
}

CMatrix term_matrix(const Term &term, std::span<const int> window) {
    const int k = static_cast<int>(window.size());
    require(k >= 1 && k <= 14, "term window must have 1..14 qubits");
    // Global qubit -> window position.
    int max_q = *std::max_element(window.begin(), window.end());
    for (int q : term.support()) {
        max_q = std::max(max_q, q);
    }
    std::vector<int> local_of(static_cast<std::size_t>(max_q + 1), -1);
    for (int j = 0; j < k; ++j) {
        local_of[static_cast<std::size_t>(window[static_cast<std::size_t>(j)])] = j;
    }
    const Eigen::Index d = Eigen::Index{1} << k;
    CMatrix out(d, d);
    std::vector<Complex> col(static_cast<std::size_t>(d));
    std::vector<int> targets;
    for (Eigen::Index c = 0; c < d; ++c) {
        std::fill(col.begin(), col.end(), Complex{0.0, 0.0});
        col[static_cast<std::size_t>(c)] = 1.0;
        for (const Factor &f : term.factors) {
            targets.clear();
            for (int q : f.qubits) {
                const int lq = local_of[static_cast<std::size_t>(q)];
                require(lq >= 0, "term support is not inside the window");
                targets.push_back(lq);
            }
            kernels::apply_matrix(col, k, f.dense(), targets);
        }
        for (Eigen::Index r = 0; r < d; ++r) {
            out(r, c) = col[static_cast<std::size_t>(r)];
        }
    }
    return out;
}

double epsilon(const CMatrix &m) {
    require(m.rows() == m.cols() && m.rows() >= 1, "epsilon needs a square matrix");
    const double d = static_cast<double>(m.rows());
    const Complex tr = m.trace();
    const Complex tr2 = (m * m).trace();
    return std::max(0.0, tr2.real() - std::norm(tr) / d);
}

Observable make_global_projector_cost(int n) {
    require(n >= 1, "n must be >= 1");
    Term t{-1.0, {}};
    for (int q = 0; q < n; ++q) {
        t.factors.push_back(Factor::proj0(q));
    }
    return Observable(n, 1.0, {t}, CostFamily::Global);
}

Observable make_local_cost(int n) {
    require(n >= 1, "n must be >= 1");
    std::vector<Term> terms;
    for (int q = 0; q < n; ++q) {
        terms.push_back({-1.0 / n, {Factor::proj0(q)}});
    }
    return Observable(n, 1.0, std::move(terms), CostFamily::Local);
}

Observable make_local_sum_cost(int n) {
    require(n >= 1, "n must be >= 1");
    std::vector<Term> terms;
    for (int q = 0; q < n; ++q) {
        terms.push_back({-1.0, {Factor::proj0(q)}});
    }
    return Observable(n, static_cast<double>(n), std::move(terms), CostFamily::LocalSum);
}

Observable make_block_projector_cost(int n, int m, std::vector<int> ranks) {
    require(m >= 1 && n % m == 0, "n must be a multiple of m");
    require(static_cast<int>(ranks.size()) == n / m, "one rank per subsystem is required");
    const Eigen::Index d = Eigen::Index{1} << m;
    Term t{-1.0, {}};
    for (int k = 0; k < n / m; ++k) {
        const int r = ranks[static_cast<std::size_t>(k)];
        require(r >= 1 && r <= d, "projector rank out of range");
        CMatrix p = CMatrix::Zero(d, d);
        for (int i = 0; i < r; ++i) {
            p(i, i) = 1.0;
        }
        std::vector<int> qs(static_cast<std::size_t>(m));
        std::iota(qs.begin(), qs.end(), k * m);
        t.factors.push_back(Factor::projector(std::move(qs), std::move(p)));
    }
    Observable o(n, 1.0, {t}, CostFamily::BlockProjector);
    o.set_block_ranks(std::move(ranks));
    return o;
}

AutoencoderCosts make_autoencoder_costs(int n_a, int n_b) {
    require(n_a >= 1 && n_b >= 1, "n_A and n_B must be >= 1");
    const int n = n_a + n_b;
    Term g{-1.0, {}};
    std::vector<Term> local;
    for (int j = 0; j < n_b; ++j) {
        g.factors.push_back(Factor::proj0(n_a + j));
        local.push_back({-1.0 / n_b, {Factor::proj0(n_a + j)}});
    }
    return {Observable(n, 1.0, {g}, CostFamily::AutoencoderGlobal),
            Observable(n, 1.0, std::move(local), CostFamily::AutoencoderLocal)};
}

} // namespace plateau
