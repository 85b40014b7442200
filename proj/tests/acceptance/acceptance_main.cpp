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

// One line per criterion; exit status 1 if any fails.
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plateau/acceptance/acceptance.hpp"
#include "plateau/core/types.hpp"

int main(int argc, char **argv) {
    namespace acc = plateau::acceptance;
    CLI::App app{"acceptance checks"};
    std::vector<std::string> only;
    acc::Options opts;
    app.add_option("--only", only, "criterion ids to run (default: all)");
    app.add_flag("--quick", opts.quick, "reduced sample counts");
    app.add_option("--seed", opts.seed, "root seed");
    app.add_option("--workers", opts.workers, "OpenMP threads (0 = default)");
    CLI11_PARSE(app, argc, argv);
    if (only.empty()) {
        only = acc::criterion_ids();
    }
    int failed = 0;
    for (const std::string &id : only) {
        try {
            const acc::Result r = acc::run(id, opts);
            std::printf("%s\n", acc::format(r).c_str());
            failed += r.pass ? 0 : 1;
        } catch (const std::exception &e) {
            std::printf("FAIL %s: error: %s\n", id.c_str(), e.what());
            ++failed;
        }
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(only.size()) - failed, only.size());
    return failed == 0 ? 0 : 1;
}
