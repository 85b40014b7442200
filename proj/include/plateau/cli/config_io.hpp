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

#include <string>

#include "plateau/ansatz/ansatz.hpp"
#include "plateau/observables/observable.hpp"

/// Layouts and observables in the CLI's key/value config format:
///
///   n = 4
///   m = 2
///   L = 1
///   kind = "haar-block"
///   probe = [0, 1]          # optional (k, l)
///
///   n = 4
///   c0 = 1
///   family = "local"
///   terms = ["-0.25*P0[0]", "-0.25*P0[1]", "0.5*Z[0]*X[1]"]
///
/// Factor names are P0, X, Y and Z; dense projector factors have no
/// text form.
namespace plateau::config_io {

std::string layout_to_config(const AnsatzLayout &layout);
AnsatzLayout layout_from_config(const std::string &text);

std::string term_to_string(const Term &term);
Term term_from_string(const std::string &text);

std::string observable_to_config(const Observable &obs);
Observable observable_from_config(const std::string &text);

/// Shortest round-trip decimal form, independent of the locale.
std::string format_double(double v);

} // namespace plateau::config_io
