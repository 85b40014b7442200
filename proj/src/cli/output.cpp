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

#include "plateau/cli/output.hpp"

#include <fstream>
#include <random>

#include "plateau/core/types.hpp"

namespace plateau::output {

std::string tool_version() { return PLATEAU_VERSION; }

std::string csv_document(const std::vector<std::string> &header,
                         const std::vector<std::vector<std::string>> &rows) {
    auto join = [](const std::vector<std::string> &fields) {
        std::string line;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            // no quoting: fields must not need it
            require(fields[i].find_first_of(",\"\n") == std::string::npos,
                    "CSV field needs quoting: " + fields[i]);
            line += (i ? "," : "") + fields[i];
        }
        return line + "\n";
    };
    std::string doc = "# plateau-lab " + tool_version() + "\n" + join(header);
    for (const auto &r : rows) {
        require(r.size() == header.size(), "CSV row width does not match the header");
        doc += join(r);
    }
    return doc;
}

std::string csv_body(const std::string &document) {
    if (document.rfind("# plateau-lab", 0) != 0) {
        return document;
    }
    const auto nl = document.find('\n');
    return nl == std::string::npos ? std::string() : document.substr(nl + 1);
}

void write_atomic(const std::filesystem::path &path, const std::string &content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp" + std::to_string(std::random_device{}());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw ArgumentError("cannot write " + tmp.string());
        }
        out << content;
        out.flush();
        if (!out) {
            std::filesystem::remove(tmp);
            throw ArgumentError("write to " + tmp.string() + " failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw ArgumentError("cannot move output into place at " + path.string() + ": " + ec.message());
    }
}

} // namespace plateau::output
