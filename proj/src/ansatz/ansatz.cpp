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

#include "plateau/ansatz/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "plateau/core/haar.hpp"
#include "plateau/core/kernels.hpp"

namespace plateau {

namespace {

// Seeds of the two Haar halves of a probed block.
constexpr std::uint64_t kProbeHalfA = 0xa;
constexpr std::uint64_t kProbeHalfB = 0xb;

std::vector<int> iota_vec(int first, int count) {
    std::vector<int> v(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        v[static_cast<std::size_t>(i)] = first + i;
    }
    return v;
}

bool intersects(const std::vector<char> &in_set, const std::vector<int> &qubits) {
    return std::any_of(qubits.begin(), qubits.end(),
                       [&](int q) { return in_set[static_cast<std::size_t>(q)] != 0; });
}

std::vector<int> members(const std::vector<char> &in_set) {
    std::vector<int> out;
    for (std::size_t q = 0; q < in_set.size(); ++q) {
        if (in_set[q]) {
            out.push_back(static_cast<int>(q));
        }
    }
    return out;
}

void apply_rotation(std::span<Complex> amps, int n, int q, PauliAxis axis, double angle) {
    const double c = std::cos(angle / 2);
    const double s = std::sin(angle / 2);
    const Complex i{0.0, 1.0};
    switch (axis) {
    case PauliAxis::X:
        kernels::apply_1q(amps, n, q, c, -i * s, -i * s, c);
        break;
    case PauliAxis::Y:
        kernels::apply_1q_real(amps, n, q, c, -s, s, c);
        break;
    case PauliAxis::Z:
        kernels::apply_1q_diagonal(amps, n, q, Complex(c, -s), Complex(c, s));
        break;
    }
}

bool fusable_ry(const Circuit::Op &r, const Circuit::Op &cz) {
    return r.kind == Circuit::OpKind::Rotation && r.axis == PauliAxis::Y && r.slot == cz.slot &&
           (r.targets[0] == cz.targets[0] || r.targets[0] == cz.targets[1]);
}

} // namespace

std::string to_string(BlockKind kind) {
    switch (kind) {
    case BlockKind::HardwareRyCz:
        return "hardware-ry-cz";
    case BlockKind::HaarBlock:
        return "haar-block";
    case BlockKind::TensorRx:
        return "tensor-rx";
    }
    return "?";
}

BlockKind parse_block_kind(const std::string &name) {
    if (name == "hardware-ry-cz") {
        return BlockKind::HardwareRyCz;
    }
    if (name == "haar-block") {
        return BlockKind::HaarBlock;
    }
    if (name == "tensor-rx") {
        return BlockKind::TensorRx;
    }
    throw ArgumentError("unknown block kind '" + name + "'");
}

AnsatzLayout::AnsatzLayout(int n_qubits, int block_width, int layers, BlockKind kind,
                           std::optional<BlockAddress> probe)
    : n_qubits_(n_qubits), m_(block_width), layers_(layers), kind_(kind),
      probe_(probe) {
    require(n_qubits >= 1 && n_qubits <= 4096, "qubit count out of range");
    require(block_width >= 2 && block_width % 2 == 0, "block width m must be even and >= 2");
    require(layers >= 1, "layer count must be >= 1");
    require(!probe || kind == BlockKind::HaarBlock, "probe rotations need HaarBlock");

    switch (kind) {
    case BlockKind::TensorRx:
        for (int l = 1; l <= layers; ++l) {
            for (int q = 0; q < n_qubits; ++q) {
                slots_.push_back({{q, l, 0}, {q}, 1, 1});
            }
        }
        break;
    case BlockKind::HardwareRyCz:
        for (int q = 0; q < n_qubits; ++q) {
            slots_.push_back({{q, 0, 0}, {q}, 1, 1});
        }
        for (int l = 1; l <= layers; ++l) {
            for (int offset = 0; offset < 2; ++offset) {
                for (int k = offset; k + 1 < n_qubits; k += 2) {
                    slots_.push_back({{k, l, 0}, {k, k + 1}, 2, 3});
                }
            }
        }
        break;
    case BlockKind::HaarBlock: {
        require(n_qubits % block_width == 0, "n must be a multiple of the block width m");
        const int xi = n_qubits / block_width;
        for (int l = 1; l <= layers; ++l) {
            const bool shifted = (l % 2 == 0);
            const int count = shifted ? xi - 1 : xi;
            for (int k = 0; k < count; ++k) {
                const int first = k * block_width + (shifted ? block_width / 2 : 0);
                slots_.push_back({{k, l, 0}, iota_vec(first, block_width), 0, 1});
            }
        }
        if (probe_) {
            GateSlot &s = slots_[slot_index(*probe_)];
            s.n_params = 1;
            s.n_gates = 3;
        }
        break;
    }
    }
    for (const auto &s : slots_) {
        n_params_ += s.n_params;
        n_gates_ += s.n_gates;
    }
}

std::size_t AnsatzLayout::slot_index(const BlockAddress &addr) const {
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        if (slots_[i].block.k == addr.k && slots_[i].block.l == addr.l) {
            return i;
        }
    }
    throw ArgumentError("no block at k=" + std::to_string(addr.k) +
                        ", l=" + std::to_string(addr.l));
}

int AnsatzLayout::blocks_in_layer(int l) const {
    return static_cast<int>(std::count_if(slots_.begin(), slots_.end(),
                                          [l](const GateSlot &s) { return s.block.l == l; }));
}

std::vector<int> AnsatzLayout::subsystem(int k) const {
    require(k >= 0 && (k + 1) * m_ <= n_qubits_, "subsystem index out of range");
    return iota_vec(k * m_, m_);
}

BlockSeeds draw_block_seeds(const AnsatzLayout &layout, std::uint64_t seed) {
    BlockSeeds seeds(layout.blocks().size());
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        seeds[i] = derive_seed(seed, streams::kBlocks, i);
    }
    return seeds;
}

ParameterVector::ParameterVector(std::shared_ptr<const std::vector<BlockAddress>> map,
                                 std::vector<double> values)
    : map_(std::move(map)), values_(std::move(values)) {}

ParameterVector::ParameterVector(const AnsatzLayout &layout, std::vector<double> values)
    : values_(std::move(values)) {
    require(values_.size() == static_cast<std::size_t>(layout.parameter_count()),
            "parameter count mismatch: got " + std::to_string(values_.size()) +
                ", layout needs " + std::to_string(layout.parameter_count()));
    auto map = std::make_shared<std::vector<BlockAddress>>();
    map->reserve(values_.size());
    for (const auto &s : layout.blocks()) {
        for (int nu = 0; nu < s.n_params; ++nu) {
            map->push_back({s.block.k, s.block.l, nu});
        }
    }
    map_ = std::move(map);
}

ParameterVector ParameterVector::zeros(const AnsatzLayout &layout) {
    return ParameterVector(layout,
                           std::vector<double>(static_cast<std::size_t>(layout.parameter_count()), 0.0));
}

ParameterVector ParameterVector::uniform(const AnsatzLayout &layout, Rng &rng) {
    std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
    std::vector<double> v(static_cast<std::size_t>(layout.parameter_count()));
    for (double &x : v) {
        x = u(rng);
    }
    return ParameterVector(layout, std::move(v));
}

void ParameterVector::set(std::size_t i, double value) {
    require(i < values_.size(), "parameter index out of range");
    values_[i] = value;
}

const BlockAddress &ParameterVector::address(std::size_t i) const {
    require(i < values_.size(), "parameter index out of range");
    return (*map_)[i];
}

std::pair<ParameterVector, ParameterVector>
parameter_shift_points(const ParameterVector &params, std::size_t param_index, double shift) {
    require(param_index < params.size(), "parameter index " + std::to_string(param_index) +
                                             " out of range");
    ParameterVector plus = params;
    ParameterVector minus = params;
    plus.set(param_index, params[param_index] + shift);
    minus.set(param_index, params[param_index] - shift);
    return {std::move(plus), std::move(minus)};
}

Circuit::Circuit(const AnsatzLayout &layout, const BlockSeeds &seeds) : layout_(layout) {
    const auto &slots = layout.blocks();
    if (layout.kind() == BlockKind::HaarBlock) {
        require(seeds.size() == slots.size(),
                "HaarBlock layout needs one seed per block (" + std::to_string(slots.size()) +
                    "), got " + std::to_string(seeds.size()));
    }
    std::size_t param = 0;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const GateSlot &s = slots[i];
        switch (layout.kind()) {
        case BlockKind::TensorRx:
            ops_.push_back({OpKind::Rotation, s.qubits, i, {}, PauliAxis::X, param++});
            break;
        case BlockKind::HardwareRyCz:
            if (s.block.l == 0) {
                ops_.push_back({OpKind::Rotation, s.qubits, i, {}, PauliAxis::Y, param++});
            } else {
                ops_.push_back({OpKind::CZ, s.qubits, i, {}, PauliAxis::Z, 0});
                ops_.push_back({OpKind::Rotation, {s.qubits[0]}, i, {}, PauliAxis::Y, param++});
                ops_.push_back({OpKind::Rotation, {s.qubits[1]}, i, {}, PauliAxis::Y, param++});
            }
            break;
        case BlockKind::HaarBlock: {
            const Eigen::Index d = Eigen::Index{1} << s.qubits.size();
            if (s.n_params == 0) {
                ops_.push_back({OpKind::Fixed, s.qubits, i,
                                haar_random_unitary(d, seeds[i]).matrix(), PauliAxis::Z, 0});
            } else {
                // W = W_A Rz(theta) W_B; W_B acts first.
                ops_.push_back({OpKind::Fixed, s.qubits, i,
                                haar_random_unitary(d, derive_seed(seeds[i], kProbeHalfB)).matrix(),
                                PauliAxis::Z, 0});
                ops_.push_back({OpKind::Rotation, {s.qubits[0]}, i, {}, PauliAxis::Z, param++});
                ops_.push_back({OpKind::Fixed, s.qubits, i,
                                haar_random_unitary(d, derive_seed(seeds[i], kProbeHalfA)).matrix(),
                                PauliAxis::Z, 0});
            }
            break;
        }
        }
    }
}

void Circuit::apply(Statevector &state, const ParameterVector &params) const {
    require(state.n_qubits() == layout_.n_qubits(), "input state has the wrong qubit count");
    require(params.size() == static_cast<std::size_t>(layout_.parameter_count()),
            "parameter count mismatch");
    apply_from(state.mutable_amplitudes(), state.n_qubits(), params, 0);
}

void Circuit::apply_from(std::span<Complex> amps, int n, const ParameterVector &params,
                         std::size_t first) const {
    for (std::size_t i = first; i < ops_.size(); ++i) {
        const Op &op = ops_[i];
        switch (op.kind) {
        case OpKind::Fixed:
            kernels::apply_matrix(amps, n, op.matrix, op.targets);
            break;
        case OpKind::Rotation:
            apply_rotation(amps, n, op.targets[0], op.axis, params[op.param]);
            break;
        case OpKind::CZ: {
            // CZ followed by Ry on both of its qubits: one real 4x4 pass
            if (i + 2 < ops_.size() && fusable_ry(ops_[i + 1], op) && fusable_ry(ops_[i + 2], op) &&
                ops_[i + 1].targets[0] != ops_[i + 2].targets[0]) {
                const Op &ra = ops_[i + 1].targets[0] == op.targets[0] ? ops_[i + 1] : ops_[i + 2];
                const Op &rb = &ra == &ops_[i + 1] ? ops_[i + 2] : ops_[i + 1];
                const double ca = std::cos(params[ra.param] / 2), sa = std::sin(params[ra.param] / 2);
                const double cb = std::cos(params[rb.param] / 2), sb = std::sin(params[rb.param] / 2);
                const double ya[2][2] = {{ca, -sa}, {sa, ca}};
                const double yb[2][2] = {{cb, -sb}, {sb, cb}};
                std::array<double, 16> m{};
                for (int r = 0; r < 4; ++r) {
                    for (int c = 0; c < 4; ++c) {
                        const double sign = c == 3 ? -1.0 : 1.0;
                        m[static_cast<std::size_t>(4 * r + c)] =
                            ya[r >> 1][c >> 1] * yb[r & 1][c & 1] * sign;
                    }
                }
                kernels::apply_2q_real(amps, n, op.targets[0], op.targets[1], m);
                i += 2;
            } else {
                kernels::apply_cz(amps, n, op.targets[0], op.targets[1]);
            }
            break;
        }
        }
    }
}

Statevector Circuit::run(const Statevector &input, const ParameterVector &params) const {
    Statevector out = input;
    apply(out, params);
    return out;
}

Statevector Circuit::run(const ProductState &input, const ParameterVector &params) const {
    require(input.n_qubits() == layout_.n_qubits(), "input state has the wrong qubit count");
    require(params.size() == static_cast<std::size_t>(layout_.parameter_count()),
            "parameter count mismatch");
    std::vector<ProductState::Qubit> f = input.factors();
    std::size_t first = 0;
    for (; first < ops_.size() && ops_[first].targets.size() == 1 &&
           ops_[first].kind != OpKind::CZ;
         ++first) {
        const Op &op = ops_[first];
        Statevector one = Statevector::basis(1, 0);
        auto a = one.mutable_amplitudes();
        a[0] = f[static_cast<std::size_t>(op.targets[0])][0];
        a[1] = f[static_cast<std::size_t>(op.targets[0])][1];
        const std::array<int, 1> t{0};
        if (op.kind == OpKind::Rotation) {
            apply_rotation(a, 1, 0, op.axis, params[op.param]);
        } else {
            kernels::apply_matrix(a, 1, op.matrix, t);
        }
        f[static_cast<std::size_t>(op.targets[0])] = {a[0], a[1]};
    }
    Statevector out = ProductState(std::move(f)).to_statevector();
    apply_from(out.mutable_amplitudes(), out.n_qubits(), params, first);
    return out;
}

void Circuit::apply_restricted(Statevector &local, std::span<const int> local_of,
                               const std::vector<char> &slot_mask,
                               const ParameterVector &params) const {
    const int n = local.n_qubits();
    auto amps = local.mutable_amplitudes();
    std::vector<int> t;
    for (const Op &op : ops_) {
        if (!slot_mask[op.slot]) {
            continue;
        }
        t.clear();
        for (int q : op.targets) {
            const int lq = local_of[static_cast<std::size_t>(q)];
            require(lq >= 0, "restricted circuit touches a qubit outside the subset");
            t.push_back(lq);
        }
        switch (op.kind) {
        case OpKind::Fixed:
            kernels::apply_matrix(amps, n, op.matrix, t);
            break;
        case OpKind::Rotation:
            apply_rotation(amps, n, t[0], op.axis, params[op.param]);
            break;
        case OpKind::CZ:
            kernels::apply_cz(amps, n, t[0], t[1]);
            break;
        }
    }
}

Statevector build_state(const AnsatzLayout &layout, const ParameterVector &params,
                        const Statevector &input, const BlockSeeds &block_seeds) {
    return Circuit(layout, block_seeds).run(input, params);
}

LightCone forward_light_cone(const AnsatzLayout &layout, const BlockAddress &addr) {
    const auto &slots = layout.blocks();
    const std::size_t self = layout.slot_index(addr);
    const auto n = static_cast<std::size_t>(layout.n_qubits());
    LightCone cone;

    std::vector<char> fwd(n, 0);
    for (int q : slots[self].qubits) {
        fwd[static_cast<std::size_t>(q)] = 1;
    }
    for (std::size_t i = self + 1; i < slots.size(); ++i) {
        if (intersects(fwd, slots[i].qubits)) {
            for (int q : slots[i].qubits) {
                fwd[static_cast<std::size_t>(q)] = 1;
            }
        }
    }
    cone.forward_qubits = members(fwd);

    std::vector<char> bwd(n, 0);
    for (int q : slots[self].qubits) {
        bwd[static_cast<std::size_t>(q)] = 1;
    }
    cone.backward_blocks.push_back(slots[self].block);
    for (std::size_t i = self; i-- > 0;) {
        if (intersects(bwd, slots[i].qubits)) {
            for (int q : slots[i].qubits) {
                bwd[static_cast<std::size_t>(q)] = 1;
            }
            cone.backward_blocks.push_back(slots[i].block);
        }
    }
    cone.backward_qubits = members(bwd);

    const int m = layout.block_width();
    for (int k = 0; (k + 1) * m <= layout.n_qubits(); ++k) {
        bool inside = true;
        for (int q = k * m; q < (k + 1) * m; ++q) {
            inside = inside && bwd[static_cast<std::size_t>(q)];
        }
        if (inside) {
            cone.k_LB.push_back(k);
        }
    }
    return cone;
}

CausalPast causal_past(const AnsatzLayout &layout, std::span<const int> support) {
    const auto &slots = layout.blocks();
    const auto n = static_cast<std::size_t>(layout.n_qubits());
    std::vector<char> in_set(n, 0);
    for (int q : support) {
        require(q >= 0 && static_cast<std::size_t>(q) < n, "support qubit out of range");
        in_set[static_cast<std::size_t>(q)] = 1;
    }
    CausalPast past;
    past.slot_mask.assign(slots.size(), 0);
    for (std::size_t i = slots.size(); i-- > 0;) {
        if (intersects(in_set, slots[i].qubits)) {
            past.slot_mask[i] = 1;
            for (int q : slots[i].qubits) {
                in_set[static_cast<std::size_t>(q)] = 1;
            }
        }
    }
    past.qubits = members(in_set);
    return past;
}

} // namespace plateau
