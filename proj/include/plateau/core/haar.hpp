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

#include "plateau/core/gate.hpp"
#include "plateau/core/rng.hpp"
#include "plateau/core/types.hpp"

namespace plateau {

/// Haar-distributed dim x dim unitary: Ginibre matrix, QR, then each column
/// of Q multiplied by the phase of the matching diagonal entry of R. Plain
/// QR output is not Haar.
CMatrix sample_haar(Eigen::Index dim, Rng &rng);

/// Seeded gate form; dim must be a power of two >= 2.
GateMatrix haar_random_unitary(Eigen::Index dim, std::uint64_t seed);

/// Real `rows x cols` matrix with orthonormal columns (thin QR of a
/// Gaussian matrix, with the same sign fix).
RMatrix random_isometry(Eigen::Index rows, Eigen::Index cols, Rng &rng);

} // namespace plateau
