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

#include "plateau/core/sampling.hpp"

#include <algorithm>
#include <random>

namespace plateau {

BornSampler::BornSampler(const Statevector &state) : BornSampler(state.probabilities()) {}

BornSampler::BornSampler(std::vector<double> probabilities) : cdf_(std::move(probabilities)) {
    require(!cdf_.empty(), "empty distribution");
    double acc = 0.0;
    for (double &p : cdf_) {
        require(p >= -1e-15, "negative probability");
        acc += std::max(p, 0.0);
        p = acc;
    }
    require(acc > 0.0, "distribution has zero mass");
    for (double &p : cdf_) {
        p /= acc;
    }
    cdf_.back() = 1.0;
}

std::uint64_t BornSampler::draw(Rng &rng) const {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double x = u(rng);
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), x);
    // Zero-probability entries share a cdf value with their predecessor and
    // are skipped by upper_bound.
    return static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(
        it - cdf_.begin(), static_cast<std::ptrdiff_t>(cdf_.size()) - 1));
}

std::vector<std::uint64_t> sample_bitstrings(const Statevector &state, int shots,
                                             std::uint64_t seed) {
    require(shots >= 1, "shots must be >= 1");
    const BornSampler sampler(state);
    Rng rng(seed);
    std::vector<std::uint64_t> out(static_cast<std::size_t>(shots));
    for (auto &s : out) {
        s = sampler.draw(rng);
    }
    return out;
}

} // namespace plateau
