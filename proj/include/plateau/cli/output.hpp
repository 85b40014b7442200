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

#include <filesystem>
#include <string>
#include <vector>

namespace plateau::output {

std::string tool_version();

/// "# plateau-lab <version>", the header line, then one line per row.
std::string csv_document(const std::vector<std::string> &header,
                         const std::vector<std::vector<std::string>> &rows);

/// Everything after the version comment line.
std::string csv_body(const std::string &document);

/// Writes to a sibling temp file, then renames it over `path`.
void write_atomic(const std::filesystem::path &path, const std::string &content);

} // namespace plateau::output
