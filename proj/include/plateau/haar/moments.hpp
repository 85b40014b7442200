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

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "plateau/core/types.hpp"

namespace plateau {

/// Monte-Carlo estimate of a Haar average next to its closed form.
struct MomentCheckReport {
    std::string check;
    int d = 0;
    Complex closed_form;
    Complex monte_carlo_mean;
    double std_error = 0.0;
    int n_samples = 0;
    bool pass = false;
};

inline constexpr int kMinMomentSamples = 10000;

/// Int dmu(U) Tr[U A U^+ B] = Tr A Tr B / d.
Complex twirl_value(const CMatrix &a, const CMatrix &b, int d);
/// Int dmu(U) Tr[U A U^+ B U C U^+ D].
Complex single_trace_value(const CMatrix &a, const CMatrix &b, const CMatrix &c, const CMatrix &d_mat,
                     int d);
/// Int dmu(U) Tr[U A U^+ B] Tr[U C U^+ D].
Complex double_trace_value(const CMatrix &a, const CMatrix &b, const CMatrix &c, const CMatrix &d_mat,
                     int d);
/// Int dmu(W) (1 (x) W) A (1 (x) W^+) = Tr_w[A] (x) 1 / d_w, with W acting
/// on the second (least significant) factor of dimension d_w.
CMatrix partial_twirl(const CMatrix &a, int d_w);

/// Int u_{ij} conj(u_{i'j'}) = delta_{ii'} delta_{jj'} / d.
double first_moment_value(int d, int i, int j, int ip, int jp);
/// Int u_{i1 j1} u_{i2 j2} conj(u_{i1' j1'}) conj(u_{i2' j2'}); idx holds
/// (i1, j1, i2, j2, i1', j1', i2', j2').
double second_moment_value(int d, const std::array<int, 8> &idx);

/// Generic Monte-Carlo driver: mean of f(U) over n_samples Haar draws of
/// dimension d. Pass rule |mc - closed| <= 3 se (+1e-10 for zero-variance
/// integrands), se = sqrt(var_re + var_im) / sqrt(N).
MomentCheckReport moment_check(const std::string &check, int d, Complex closed_form,
                               const std::function<Complex(const CMatrix &)> &f,
                               int n_samples, std::uint64_t seed);

MomentCheckReport check_twirl(const CMatrix &a, const CMatrix &b, int n_samples,
                               std::uint64_t seed);
MomentCheckReport check_single_trace(const CMatrix &a, const CMatrix &b, const CMatrix &c,
                               const CMatrix &d_mat, int n_samples, std::uint64_t seed);
MomentCheckReport check_double_trace(const CMatrix &a, const CMatrix &b, const CMatrix &c,
                               const CMatrix &d_mat, int n_samples, std::uint64_t seed);
/// One report per matrix element of the reduction.
std::vector<MomentCheckReport> check_partial_twirl(const CMatrix &a, int d_w, int n_samples,
                                            std::uint64_t seed);
MomentCheckReport check_first_moment(int d, int i, int j, int ip, int jp, int n_samples,
                                     std::uint64_t seed);
MomentCheckReport check_second_moment(int d, const std::array<int, 8> &idx, int n_samples,
                                      std::uint64_t seed);

/// The fixed battery behind `haar-check`, for each d: every trace integral
/// above on seeded random inputs, plus the element-wise moment catalog.
std::vector<MomentCheckReport> standard_moment_suite(const std::vector<int> &dims,
                                                     int n_samples, std::uint64_t seed);

/// Random d x d complex Gaussian matrix (test inputs).
CMatrix random_complex_matrix(int d, std::uint64_t seed);

} // namespace plateau
