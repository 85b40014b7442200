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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plateau/core/statevector.hpp"
#include "plateau/core/types.hpp"

namespace plateau {

enum class FactorKind { Proj0, PauliX, PauliY, PauliZ, Projector };

struct Factor {
    FactorKind kind;
    std::vector<int> qubits;
    /// Projector only: 2^k x 2^k with P^2 = P, qubits[0] most significant.
    CMatrix matrix;

    static Factor proj0(int q);
    static Factor pauli_x(int q);
    static Factor pauli_y(int q);
    static Factor pauli_z(int q);
    static Factor projector(std::vector<int> qubits, CMatrix p);

    /// Dense matrix of the factor on its own qubits.
    CMatrix dense() const;
    bool is_pauli() const;
};

struct Term {
    double coeff = 0.0;
    std::vector<Factor> factors;

    /// Sorted union of factor supports.
    std::vector<int> support() const;
    /// Only Proj0 / PauliZ factors.
    bool is_diagonal() const;
};

/// Tag used to attach bounds and closed forms to known cost families.
enum class CostFamily {
    Custom,
    Global,            // 1 - |0><0|
    Local,             // 1 - (1/n) sum_j |0><0|_j
    LocalSum,          // n - sum_j |0><0|_j
    BlockProjector,    // 1 - tensor_k P_k with rank-r_k projectors on S_k
    AutoencoderGlobal, // 1 - 1_A (x) |0><0|_B
    AutoencoderLocal,  // 1 - (1/n_B) sum_j 1_A (x) |0><0|_j
};

std::string to_string(CostFamily family);
CostFamily parse_cost_family(const std::string &name);

/// O = c0 1 + sum_i c_i O_i.
class Observable {
  public:
    Observable(int n_qubits, double c0, std::vector<Term> terms,
               CostFamily family = CostFamily::Custom);

    int n_qubits() const { return n_qubits_; }
    double c0() const { return c0_; }
    const std::vector<Term> &terms() const { return terms_; }
    CostFamily family() const { return family_; }

    /// Ranks r_k of the BlockProjector family (empty otherwise).
    const std::vector<int> &block_ranks() const { return block_ranks_; }
    void set_block_ranks(std::vector<int> ranks) { block_ranks_ = std::move(ranks); }

    /// Every term fits in an m-qubit window starting at a multiple of m/2.
    bool is_m_local(int m) const;

    double expectation(const Statevector &state) const;

  private:
    int n_qubits_;
    double c0_;
    std::vector<Term> terms_;
    CostFamily family_;
    std::vector<int> block_ranks_;
};

/// <psi| T |psi> for one term; local_of maps global qubits to the state's
/// qubits (identity when empty).
double term_expectation(const Term &term, const Statevector &state,
                        std::span<const int> local_of = {});

/// First qubit of the m-qubit window holding the term: the unshifted S_k
/// when possible, else the half-shifted window; nullopt when none fits.
std::optional<int> aligned_window(const Term &term, int m, int n_qubits);

/// Dense matrix of `term` (without its coefficient) on the listed qubits.
CMatrix term_matrix(const Term &term, std::span<const int> window);

/// Tr[M^2] - Tr[M]^2 / d, the squared HS distance to Tr(M) 1/d.
double epsilon(const CMatrix &m);

Observable make_global_projector_cost(int n);
Observable make_local_cost(int n);
Observable make_local_sum_cost(int n);
/// 1 - tensor_k P_k, P_k projecting S_k onto its first ranks[k] basis states.
Observable make_block_projector_cost(int n, int m, std::vector<int> ranks);

struct AutoencoderCosts {
    Observable global;
    Observable local;
};
/// Register A is qubits 0..n_A-1, the trash register B follows.
AutoencoderCosts make_autoencoder_costs(int n_a, int n_b);

} // namespace plateau
