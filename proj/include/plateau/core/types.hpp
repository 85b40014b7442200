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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace plateau {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Tolerance for algebraic identities (unitarity, norm, trace).
inline constexpr double kAlgebraicTol = 1e-10;

/// Invalid argument: bad dimension, out-of-range index, inconsistent sizes.
class ArgumentError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// The operation is well-formed but not supported for this input (for
/// example a light-cone evaluation on an entangled input state).
class UnsupportedInput : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline void require(bool condition, const char *message) {
    if (!condition) {
        throw ArgumentError(message);
    }
}

inline void require(bool condition, const std::string &message) {
    if (!condition) {
        throw ArgumentError(message);
    }
}

/// Bit mask of qubit `q` in an `n`-qubit basis index. Qubit 0 is the most
/// significant bit, so basis ordering matches the Kronecker product order.
constexpr std::uint64_t qubit_mask(int n, int q) {
    return std::uint64_t{1} << (n - 1 - q);
}

} // namespace plateau
