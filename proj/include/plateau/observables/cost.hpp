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
#include <variant>
#include <vector>

#include "plateau/ansatz/ansatz.hpp"
#include "plateau/observables/observable.hpp"

namespace plateau {

using MemberState = std::variant<Statevector, ProductState>;

struct EnsembleMember {
    double p;
    MemberState state;
};

using Ensemble = std::vector<EnsembleMember>;

int member_qubits(const MemberState &s);
Statevector to_dense(const MemberState &s);
/// Product factorization of a member (nullopt when entangled).
std::optional<ProductState> as_product(const MemberState &s);

/// rho_in = sum_mu p_mu |psi_mu><psi_mu| together with layout and operator.
struct CostSpec {
    CostSpec(AnsatzLayout layout, Observable observable, Ensemble ensemble);

    AnsatzLayout layout;
    Observable observable;
    Ensemble ensemble;
};

/// LightCone of a block with i_L filled from the observable's terms.
LightCone forward_light_cone(const AnsatzLayout &layout, const BlockAddress &addr,
                             const Observable &observable);

/// Cost evaluation for one fixed circuit draw (Haar block seeds are baked
/// in at construction).
class CostEvaluator {
  public:
    explicit CostEvaluator(CostSpec spec, const BlockSeeds &seeds = {});

    const CostSpec &spec() const { return spec_; }
    const Circuit &circuit() const { return circuit_; }

    /// Tr[O V rho V^dagger] on dense states.
    double exact(const ParameterVector &params) const;

    /// Finite-shot estimate. Shots are split over members with a
    /// multinomial draw, then bitstrings are sampled from each output
    /// state. X/Y factors get basis rotations; projector factors throw
    /// UnsupportedInput.
    double shots(const ParameterVector &params, int shots, std::uint64_t seed) const;

    /// Exact cost where each term only simulates its causal past on the
    /// product input. Throws UnsupportedInput for entangled members.
    double lightcone(const ParameterVector &params) const;

    /// Per term and member, a binomial count from the term's exact
    /// light-cone probability. Terms must be Proj0-only or Pauli-only.
    double lightcone_shots(const ParameterVector &params, int shots, std::uint64_t seed) const;

    /// Output states V|psi_mu>, one per member.
    std::vector<Statevector> output_states(const ParameterVector &params) const;

    /// <T_i> for every term under member mu, via light cones.
    std::vector<double> lightcone_term_values(const ParameterVector &params,
                                              std::size_t member) const;

  private:
    struct TermCone {
        std::vector<char> slot_mask;
        std::vector<int> qubits;
        std::vector<int> local_of;
    };
    struct ShotGroup {
        std::vector<std::size_t> terms;
        std::vector<int> basis; // per qubit: -1 free, 0 Z, 1 X, 2 Y
    };

    std::vector<int> member_counts(int shots, Rng &rng) const;
    const ProductState &product_member(std::size_t member) const;

    CostSpec spec_;
    Circuit circuit_;
    std::vector<ShotGroup> groups_;
    std::vector<TermCone> cones_;
    std::vector<std::optional<ProductState>> products_;
};

double exact_cost(const CostSpec &spec, const ParameterVector &params,
                  const BlockSeeds &block_seeds = {});
double shot_cost(const CostSpec &spec, const ParameterVector &params, int shots,
                 std::uint64_t seed, const BlockSeeds &block_seeds = {});
double lightcone_local_cost(const CostSpec &spec, const ParameterVector &params,
                            const BlockSeeds &block_seeds = {});

} // namespace plateau
