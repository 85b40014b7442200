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

#include "plateau/observables/cost.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "plateau/core/kernels.hpp"
#include "plateau/core/sampling.hpp"

namespace plateau {

namespace {

constexpr int kFree = -1;
constexpr int kBasisZ = 0;
constexpr int kBasisX = 1;
constexpr int kBasisY = 2;

int basis_of(FactorKind k) {
    switch (k) {
    case FactorKind::PauliX:
        return kBasisX;
    case FactorKind::PauliY:
        return kBasisY;
    default:
        return kBasisZ;
    }
}

// Value of a Proj0 / Pauli product on a measured (rotated-basis) bitstring.
double term_value(const Term &t, std::uint64_t bits, int n) {
    double v = 1.0;
    for (const Factor &f : t.factors) {
        const bool one = (bits & qubit_mask(n, f.qubits[0])) != 0;
        if (f.kind == FactorKind::Proj0) {
            if (one) {
                return 0.0;
            }
        } else if (one) {
            v = -v;
        }
    }
    return v;
}

bool proj0_only(const Term &t) {
    return std::all_of(t.factors.begin(), t.factors.end(),
                       [](const Factor &f) { return f.kind == FactorKind::Proj0; });
}

bool pauli_only(const Term &t) {
    return std::all_of(t.factors.begin(), t.factors.end(),
                       [](const Factor &f) { return f.is_pauli(); });
}

} // namespace

int member_qubits(const MemberState &s) {
    return std::visit([](const auto &v) { return v.n_qubits(); }, s);
}

Statevector to_dense(const MemberState &s) {
    if (const auto *sv = std::get_if<Statevector>(&s)) {
        return *sv;
    }
    return std::get<ProductState>(s).to_statevector();
}

std::optional<ProductState> as_product(const MemberState &s) {
    if (const auto *ps = std::get_if<ProductState>(&s)) {
        return *ps;
    }
    return try_factor_product(std::get<Statevector>(s));
}

CostSpec::CostSpec(AnsatzLayout layout_in, Observable observable_in, Ensemble ensemble_in)
    : layout(std::move(layout_in)), observable(std::move(observable_in)),
      ensemble(std::move(ensemble_in)) {
    require(observable.n_qubits() == layout.n_qubits(),
            "observable and layout qubit counts differ");
    require(!ensemble.empty(), "input ensemble is empty");
    double total = 0.0;
    for (const auto &m : ensemble) {
        require(m.p >= 0.0, "ensemble probabilities must be non-negative");
        require(member_qubits(m.state) == layout.n_qubits(),
                "ensemble member has the wrong qubit count");
        total += m.p;
    }
    require(std::abs(total - 1.0) < 1e-12, "ensemble probabilities must sum to 1");
}

LightCone forward_light_cone(const AnsatzLayout &layout, const BlockAddress &addr,
                             const Observable &observable) {
    LightCone cone = forward_light_cone(layout, addr);
    for (std::size_t i = 0; i < observable.terms().size(); ++i) {
        const auto s = observable.terms()[i].support();
        const bool inside = std::all_of(s.begin(), s.end(), [&](int q) {
            return std::binary_search(cone.forward_qubits.begin(), cone.forward_qubits.end(), q);
        });
        if (inside) {
            cone.i_L.push_back(static_cast<int>(i));
        }
    }
    return cone;
}

CostEvaluator::CostEvaluator(CostSpec spec, const BlockSeeds &seeds)
    : spec_(std::move(spec)), circuit_(spec_.layout, seeds) {
    const int n = spec_.layout.n_qubits();
    const auto &terms = spec_.observable.terms();

    // Greedy grouping of terms that share a measurement basis per qubit.
    bool shot_ok = true;
    for (std::size_t i = 0; i < terms.size() && shot_ok; ++i) {
        for (const Factor &f : terms[i].factors) {
            shot_ok = shot_ok && f.kind != FactorKind::Projector;
        }
        if (!shot_ok) {
            break;
        }
        bool placed = false;
        for (auto &g : groups_) {
            bool fits = true;
            for (const Factor &f : terms[i].factors) {
                const int b = g.basis[static_cast<std::size_t>(f.qubits[0])];
                fits = fits && (b == kFree || b == basis_of(f.kind));
            }
            if (fits) {
                for (const Factor &f : terms[i].factors) {
                    g.basis[static_cast<std::size_t>(f.qubits[0])] = basis_of(f.kind);
                }
                g.terms.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) {
            ShotGroup g{{i}, std::vector<int>(static_cast<std::size_t>(n), kFree)};
            for (const Factor &f : terms[i].factors) {
                g.basis[static_cast<std::size_t>(f.qubits[0])] = basis_of(f.kind);
            }
            groups_.push_back(std::move(g));
        }
    }
    if (!shot_ok) {
        groups_.clear();
    }

    for (const Term &t : terms) {
        const auto support = t.support();
        CausalPast past = causal_past(spec_.layout, support);
        TermCone c{std::move(past.slot_mask), std::move(past.qubits),
                   std::vector<int>(static_cast<std::size_t>(n), -1)};
        for (std::size_t j = 0; j < c.qubits.size(); ++j) {
            c.local_of[static_cast<std::size_t>(c.qubits[j])] = static_cast<int>(j);
        }
        cones_.push_back(std::move(c));
    }
    for (const auto &m : spec_.ensemble) {
        products_.push_back(as_product(m.state));
    }
}

namespace {
Statevector run_member(const Circuit &c, const MemberState &s, const ParameterVector &params) {
    return std::visit([&](const auto &st) { return c.run(st, params); }, s);
}
} // namespace

std::vector<Statevector> CostEvaluator::output_states(const ParameterVector &params) const {
    std::vector<Statevector> out;
    out.reserve(spec_.ensemble.size());
    for (const auto &m : spec_.ensemble) {
        out.push_back(run_member(circuit_, m.state, params));
    }
    return out;
}

double CostEvaluator::exact(const ParameterVector &params) const {
    double total = 0.0;
    for (const auto &m : spec_.ensemble) {
        if (m.p == 0.0) {
            continue;
        }
        total += m.p * spec_.observable.expectation(run_member(circuit_, m.state, params));
    }
    return total;
}

std::vector<int> CostEvaluator::member_counts(int shots, Rng &rng) const {
    std::vector<int> counts(spec_.ensemble.size(), 0);
    int remaining = shots;
    double mass = 1.0;
    for (std::size_t mu = 0; mu < counts.size() && remaining > 0; ++mu) {
        const double p = spec_.ensemble[mu].p;
        if (mu + 1 == counts.size() || p >= mass) {
            counts[mu] = remaining;
            break;
        }
        std::binomial_distribution<int> b(remaining, std::clamp(p / mass, 0.0, 1.0));
        counts[mu] = b(rng);
        remaining -= counts[mu];
        mass -= p;
    }
    return counts;
}

double CostEvaluator::shots(const ParameterVector &params, int shots, std::uint64_t seed) const {
    require(shots >= 1, "shots must be >= 1");
    const auto &terms = spec_.observable.terms();
    if (groups_.empty() && !terms.empty()) {
        throw UnsupportedInput("projector factors are evaluated exactly only, not with shots");
    }
    const int n = spec_.layout.n_qubits();
    Rng rng(seed);
    const auto counts = member_counts(shots, rng);
    double sum = 0.0;
    for (std::size_t mu = 0; mu < counts.size(); ++mu) {
        if (counts[mu] == 0) {
            continue;
        }
        const Statevector out = run_member(circuit_, spec_.ensemble[mu].state, params);
        for (const ShotGroup &g : groups_) {
            Statevector rotated = out;
            auto amps = rotated.mutable_amplitudes();
            const double s = 1.0 / std::sqrt(2.0);
            for (int q = 0; q < n; ++q) {
                const int b = g.basis[static_cast<std::size_t>(q)];
                if (b == kBasisX) {
                    kernels::apply_1q(amps, n, q, s, s, s, -s);
                } else if (b == kBasisY) {
                    // H S^dagger.
                    kernels::apply_1q(amps, n, q, s, Complex(0.0, -s), s, Complex(0.0, s));
                }
            }
            const BornSampler sampler(rotated);
            for (int shot = 0; shot < counts[mu]; ++shot) {
                const std::uint64_t bits = sampler.draw(rng);
                for (std::size_t i : g.terms) {
                    sum += terms[i].coeff * term_value(terms[i], bits, n);
                }
            }
        }
    }
    return spec_.observable.c0() + sum / shots;
}

const ProductState &CostEvaluator::product_member(std::size_t member) const {
    if (!products_[member]) {
        throw UnsupportedInput("light-cone evaluation needs product-state ensemble members");
    }
    return *products_[member];
}

std::vector<double> CostEvaluator::lightcone_term_values(const ParameterVector &params,
                                                         std::size_t member) const {
    require(member < spec_.ensemble.size(), "member index out of range");
    const ProductState &input = product_member(member);
    const auto &terms = spec_.observable.terms();
    std::vector<double> values(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const TermCone &c = cones_[i];
        Statevector local = input.restrict_to(c.qubits);
        circuit_.apply_restricted(local, c.local_of, c.slot_mask, params);
        values[i] = term_expectation(terms[i], local, c.local_of);
    }
    return values;
}

double CostEvaluator::lightcone(const ParameterVector &params) const {
    const auto &terms = spec_.observable.terms();
    double total = spec_.observable.c0();
    for (std::size_t mu = 0; mu < spec_.ensemble.size(); ++mu) {
        const double p = spec_.ensemble[mu].p;
        if (p == 0.0) {
            product_member(mu);
            continue;
        }
        const auto values = lightcone_term_values(params, mu);
        for (std::size_t i = 0; i < terms.size(); ++i) {
            total += p * terms[i].coeff * values[i];
        }
    }
    return total;
}

double CostEvaluator::lightcone_shots(const ParameterVector &params, int shots,
                                      std::uint64_t seed) const {
    require(shots >= 1, "shots must be >= 1");
    const auto &terms = spec_.observable.terms();
    for (const Term &t : terms) {
        if (!proj0_only(t) && !pauli_only(t)) {
            throw UnsupportedInput(
                "light-cone shots need Proj0-only or Pauli-only terms");
        }
    }
    Rng rng(seed);
    const auto counts = member_counts(shots, rng);
    double sum = 0.0;
    for (std::size_t mu = 0; mu < counts.size(); ++mu) {
        if (counts[mu] == 0) {
            continue;
        }
        const auto values = lightcone_term_values(params, mu);
        for (std::size_t i = 0; i < terms.size(); ++i) {
            const bool proj = proj0_only(terms[i]);
            const double p_one = proj ? values[i] : 0.5 * (1.0 + values[i]);
            std::binomial_distribution<int> b(counts[mu], std::clamp(p_one, 0.0, 1.0));
            const int k = b(rng);
            const double value_sum = proj ? k : 2.0 * k - counts[mu];
            sum += terms[i].coeff * value_sum;
        }
    }
    return spec_.observable.c0() + sum / shots;
}

double exact_cost(const CostSpec &spec, const ParameterVector &params,
                  const BlockSeeds &block_seeds) {
    return CostEvaluator(spec, block_seeds).exact(params);
}

double shot_cost(const CostSpec &spec, const ParameterVector &params, int shots,
                 std::uint64_t seed, const BlockSeeds &block_seeds) {
    return CostEvaluator(spec, block_seeds).shots(params, shots, seed);
}

double lightcone_local_cost(const CostSpec &spec, const ParameterVector &params,
                            const BlockSeeds &block_seeds) {
    return CostEvaluator(spec, block_seeds).lightcone(params);
}

} // namespace plateau
