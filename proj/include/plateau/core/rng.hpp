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
#include <random>

namespace plateau {

using Rng = std::mt19937_64;

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-based seed derivation: the seed of item `counter` in stream
/// `stream` under `root`. Results do not depend on how items are split
/// across workers.
constexpr std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream,
                                    std::uint64_t counter = 0) {
    return mix64(mix64(root ^ mix64(stream)) + counter);
}

inline Rng make_rng(std::uint64_t root, std::uint64_t stream = 0,
                    std::uint64_t counter = 0) {
    return Rng(derive_seed(root, stream, counter));
}

/// Named streams so independent consumers of one root seed never collide.
namespace streams {
inline constexpr std::uint64_t kParameters = 0x70617261;
inline constexpr std::uint64_t kBlocks = 0x626c6f63;
inline constexpr std::uint64_t kShots = 0x73686f74;
inline constexpr std::uint64_t kGradSamples = 0x67726164;
inline constexpr std::uint64_t kGorge = 0x676f7267;
inline constexpr std::uint64_t kHaarCheck = 0x68616172;
inline constexpr std::uint64_t kIsometry = 0x69736f6d;
inline constexpr std::uint64_t kTraining = 0x74726169;
} // namespace streams

} // namespace plateau
