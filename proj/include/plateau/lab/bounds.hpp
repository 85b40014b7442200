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

/// Global operator made of one product of non-trivial projectors of rank
/// r_k on the subsystems S_k, with coefficient c1.
struct ProjectorCase {
    double c1 = 1.0;
    std::vector<int> ranks; // empty: all ranks 1
};

/// Global operator made of N products of traceless factors.
struct TracelessCase {
    std::vector<double> coeffs;
};

/// Upper bound on Var[d_nu C] for global operators, projector case:
///   2^{2m + (2m-1)(L-l)} / ((2^{2m} - 1) 3^{n/m} 2^{(2 - 3/m) n}) c1^2 R,
///   R = prod_k r_k^2.
double f_upper(int n, int m, int L, int l, const ProjectorCase &c);
/// Traceless case: 2^{2m(L-l+1)+1} / (3^{2n/m} 2^{(3 - 4/m) n}) sum_{ij} c_i c_j.
double f_upper(int n, int m, int L, int l, const TracelessCase &c);

/// 2^{m(l+1)-1} / ((2^{2m} - 1)^2 (2^m + 1)^{L+l}).
double g_prefactor(int m, int L, int l);

/// Pieces of the local-cost lower bound, kept for reporting and tests.
struct GLowerTerms {
    double prefactor = 0.0;
    /// sum_{i in i_L} c_i^2 eps(O_i)
    double operator_sum = 0.0;
    /// sum_{k <= k' in k_LB} eps(rho_{k,k'})
    double state_sum = 0.0;
    LightCone cone;
    double value() const { return prefactor * operator_sum * state_sum; }
};

/// Lower bound on Var[d_nu C] for a parameter in block `addr` of an
/// alternating layout, with an m-local operator. rho_{k,k'} is the input
/// reduced to S_k ... S_k'; eps(O_i) is taken on the term's aligned
/// m-qubit window.
GLowerTerms g_lower_terms(const AnsatzLayout &layout, const Observable &observable,
                          const Ensemble &ensemble, const BlockAddress &addr);
double g_lower(const AnsatzLayout &layout, const Observable &observable,
               const Ensemble &ensemble, const BlockAddress &addr);

/// Ensemble-averaged reduced state on `qubits` (at most 14).
CMatrix ensemble_reduced_state(const Ensemble &ensemble, std::span<const int> qubits);

} // namespace plateau
