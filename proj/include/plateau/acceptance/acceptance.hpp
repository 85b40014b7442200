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
#include <string>
#include <vector>

namespace plateau::acceptance {

struct Options {
    std::uint64_t seed = 20210301;
    /// Reduced sample counts and budgets; thresholds stay the same. A quick
    /// pass is a smoke run, not the acceptance gate.
    bool quick = false;
    int workers = 0;
};

struct Result {
    std::string id;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Criterion ids in report order.
const std::vector<std::string> &criterion_ids();

/// Throws ArgumentError for an unknown id.
Result run(const std::string &id, const Options &opts);

/// "PASS <id> ..." / "FAIL <id> ...".
std::string format(const Result &r);

} // namespace plateau::acceptance
