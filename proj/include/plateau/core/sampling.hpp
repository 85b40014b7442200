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
#include <vector>

#include "plateau/core/rng.hpp"
#include "plateau/core/statevector.hpp"

namespace plateau {

/// Born-rule sampler over a fixed distribution (cumulative table, binary
/// search per draw).
class BornSampler {
  public:
    explicit BornSampler(const Statevector &state);
    explicit BornSampler(std::vector<double> probabilities);

    std::uint64_t draw(Rng &rng) const;
    std::size_t size() const { return cdf_.size(); }

  private:
    std::vector<double> cdf_;
};

/// `shots` i.i.d. basis indices from |amplitude|^2. Bit q of a sample is
/// `sample & qubit_mask(n, q)`.
std::vector<std::uint64_t> sample_bitstrings(const Statevector &state, int shots,
                                             std::uint64_t seed);

} // namespace plateau
