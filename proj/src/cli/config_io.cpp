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

#include "plateau/cli/config_io.hpp"

#include <charconv>
#include <map>
#include <sstream>

#include <CLI11.hpp>

namespace plateau::config_io {

namespace {

using Items = std::map<std::string, std::vector<std::string>>;

Items parse(const std::string &text) {
    std::istringstream in(text);
    Items out;
    for (const CLI::ConfigItem &item : CLI::ConfigTOML().from_config(in)) {
        if (item.name == "++" || item.name == "--") {
            continue; // section markers
        }
        out[item.fullname()] = item.inputs;
    }
    return out;
}

const std::string &single(const Items &items, const std::string &key) {
    const auto it = items.find(key);
    require(it != items.end(), "config is missing '" + key + "'");
    require(it->second.size() == 1, "config key '" + key + "' must hold one value");
    return it->second.front();
}

double to_double(const std::string &s, const std::string &what) {
    double v = 0.0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    require(r.ec == std::errc() && r.ptr == s.data() + s.size(),
            "cannot read " + what + " from '" + s + "'");
    return v;
}

int to_int(const std::string &s, const std::string &what) {
    int v = 0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    require(r.ec == std::errc() && r.ptr == s.data() + s.size(),
            "cannot read " + what + " from '" + s + "'");
    return v;
}

std::string quoted(const std::string &s) { return "\"" + s + "\""; }

} // namespace

std::string format_double(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

std::string layout_to_config(const AnsatzLayout &layout) {
    std::ostringstream o;
    o << "n = " << layout.n_qubits() << "\n"
      << "m = " << layout.block_width() << "\n"
      << "L = " << layout.layers() << "\n"
      << "kind = " << quoted(to_string(layout.kind())) << "\n";
    if (layout.probe()) {
        o << "probe = [" << layout.probe()->k << ", " << layout.probe()->l << "]\n";
    }
    return o.str();
}

AnsatzLayout layout_from_config(const std::string &text) {
    const Items items = parse(text);
    std::optional<BlockAddress> probe;
    if (const auto it = items.find("probe"); it != items.end()) {
        require(it->second.size() == 2, "probe must be [k, l]");
        probe = BlockAddress{to_int(it->second[0], "probe k"), to_int(it->second[1], "probe l"), 0};
    }
    return AnsatzLayout(to_int(single(items, "n"), "n"), to_int(single(items, "m"), "m"),
                        to_int(single(items, "L"), "L"), parse_block_kind(single(items, "kind")),
                        probe);
}

std::string term_to_string(const Term &term) {
    std::string s = format_double(term.coeff);
    for (const Factor &f : term.factors) {
        switch (f.kind) {
        case FactorKind::Proj0:
            s += "*P0";
            break;
        case FactorKind::PauliX:
            s += "*X";
            break;
        case FactorKind::PauliY:
            s += "*Y";
            break;
        case FactorKind::PauliZ:
            s += "*Z";
            break;
        case FactorKind::Projector:
            throw UnsupportedInput("dense projector factors have no config form");
        }
        s += "[" + std::to_string(f.qubits[0]) + "]";
    }
    return s;
}

Term term_from_string(const std::string &text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == '*') {
            parts.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    parts.push_back(cur);
    Term t{to_double(parts[0], "term coefficient"), {}};
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const std::string &p = parts[i];
        const auto open = p.find('[');
        require(open != std::string::npos && p.back() == ']',
                "factor '" + p + "' must look like Z[3]");
        const std::string name = p.substr(0, open);
        const int q = to_int(p.substr(open + 1, p.size() - open - 2), "factor qubit");
        if (name == "P0") {
            t.factors.push_back(Factor::proj0(q));
        } else if (name == "X") {
            t.factors.push_back(Factor::pauli_x(q));
        } else if (name == "Y") {
            t.factors.push_back(Factor::pauli_y(q));
        } else if (name == "Z") {
            t.factors.push_back(Factor::pauli_z(q));
        } else {
            throw ArgumentError("unknown factor '" + name + "' (expected P0, X, Y or Z)");
        }
    }
    return t;
}

std::string observable_to_config(const Observable &obs) {
    std::ostringstream o;
    o << "n = " << obs.n_qubits() << "\n"
      << "c0 = " << format_double(obs.c0()) << "\n"
      << "family = " << quoted(to_string(obs.family())) << "\n"
      << "terms = [";
    for (std::size_t i = 0; i < obs.terms().size(); ++i) {
        o << (i ? ", " : "") << quoted(term_to_string(obs.terms()[i]));
    }
    o << "]\n";
    return o.str();
}

Observable observable_from_config(const std::string &text) {
    const Items items = parse(text);
    std::vector<Term> terms;
    if (const auto it = items.find("terms"); it != items.end()) {
        for (const std::string &s : it->second) {
            if (!s.empty()) {
                terms.push_back(term_from_string(s));
            }
        }
    }
    CostFamily family = CostFamily::Custom;
    if (items.count("family")) {
        family = parse_cost_family(single(items, "family"));
    }
    return Observable(to_int(single(items, "n"), "n"), to_double(single(items, "c0"), "c0"),
                      std::move(terms), family);
}

} // namespace plateau::config_io
