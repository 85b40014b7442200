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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "plateau/core/gate.hpp"
#include "plateau/core/rng.hpp"
#include "plateau/core/statevector.hpp"

namespace plateau {

enum class BlockKind { HardwareRyCz, HaarBlock, TensorRx };

std::string to_string(BlockKind kind);
BlockKind parse_block_kind(const std::string &name);

/// Block column k (0-based), layer l (1-based) and intra-block parameter
/// index nu. HardwareRyCz uses l = 0 for its leading row of Ry gates.
struct BlockAddress {
    int k = 0;
    int l = 1;
    int nu = 0;

    friend bool operator==(const BlockAddress &, const BlockAddress &) = default;
};

/// One causal unit of the circuit: a block and the qubits it touches.
struct GateSlot {
    BlockAddress block;
    std::vector<int> qubits;
    int n_params = 0;
    int n_gates = 0;
};

/// Per-slot seeds for HaarBlock layouts, in blocks() order.
using BlockSeeds = std::vector<std::uint64_t>;

class AnsatzLayout {
  public:
    /// `probe` (HaarBlock only) inserts a trainable Rz between two Haar
    /// halves of the addressed block.
    AnsatzLayout(int n_qubits, int block_width, int layers, BlockKind kind,
                 std::optional<BlockAddress> probe = std::nullopt);

    int n_qubits() const { return n_qubits_; }
    int block_width() const { return m_; }
    int layers() const { return layers_; }
    BlockKind kind() const { return kind_; }
    /// n / m (rounded down for kinds that do not require divisibility).
    int xi() const { return n_qubits_ / m_; }
    const std::optional<BlockAddress> &probe() const { return probe_; }

    /// Slots in application order.
    const std::vector<GateSlot> &blocks() const { return slots_; }
    /// Index into blocks(); throws ArgumentError for an unknown address.
    std::size_t slot_index(const BlockAddress &addr) const;
    /// Number of blocks of layer l.
    int blocks_in_layer(int l) const;

    int parameter_count() const { return n_params_; }
    int gate_count() const { return n_gates_; }

    /// Unshifted partition subsystem S_k = {mk, ..., mk + m - 1}.
    std::vector<int> subsystem(int k) const;

  private:
    int n_qubits_;
    int m_;
    int layers_;
    BlockKind kind_;
    std::optional<BlockAddress> probe_;
    std::vector<GateSlot> slots_;
    int n_params_ = 0;
    int n_gates_ = 0;
};

BlockSeeds draw_block_seeds(const AnsatzLayout &layout, std::uint64_t seed);

class ParameterVector {
  public:
    static ParameterVector zeros(const AnsatzLayout &layout);
    /// Every angle uniform in [-pi, pi].
    static ParameterVector uniform(const AnsatzLayout &layout, Rng &rng);

    ParameterVector(const AnsatzLayout &layout, std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    const std::vector<double> &values() const { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    void set(std::size_t i, double value);
    const BlockAddress &address(std::size_t i) const;
    const std::vector<BlockAddress> &block_index_map() const { return *map_; }

  private:
    ParameterVector(std::shared_ptr<const std::vector<BlockAddress>> map,
                    std::vector<double> values);

    std::shared_ptr<const std::vector<BlockAddress>> map_;
    std::vector<double> values_;
};

/// theta + shift e_i and theta - shift e_i.
std::pair<ParameterVector, ParameterVector>
parameter_shift_points(const ParameterVector &params, std::size_t param_index, double shift);

/// Compiled circuit: fixed matrices and parametrized Pauli rotations, each
/// tagged with the slot it belongs to.
class Circuit {
  public:
    enum class OpKind { Fixed, Rotation, CZ };

    struct Op {
        OpKind kind;
        std::vector<int> targets;
        std::size_t slot;
        CMatrix matrix;             // Fixed
        PauliAxis axis = PauliAxis::Y; // Rotation
        std::size_t param = 0;      // Rotation
    };

    Circuit(const AnsatzLayout &layout, const BlockSeeds &seeds = {});

    const AnsatzLayout &layout() const { return layout_; }
    const std::vector<Op> &ops() const { return ops_; }

    void apply(Statevector &state, const ParameterVector &params) const;
    Statevector run(const Statevector &input, const ParameterVector &params) const;
    /// Same result; the leading single-qubit ops act on the factors before
    /// the dense expansion.
    Statevector run(const ProductState &input, const ParameterVector &params) const;

    /// Applies only ops of slots with slot_mask[slot] set, on a state over
    /// a qubit subset; local_of[q] is the local index of global qubit q.
    void apply_restricted(Statevector &local, std::span<const int> local_of,
                          const std::vector<char> &slot_mask,
                          const ParameterVector &params) const;

  private:
    void apply_from(std::span<Complex> amps, int n, const ParameterVector &params,
                    std::size_t first) const;

    AnsatzLayout layout_;
    std::vector<Op> ops_;
};

/// V(theta)|input>.
Statevector build_state(const AnsatzLayout &layout, const ParameterVector &params,
                        const Statevector &input, const BlockSeeds &block_seeds = {});

struct LightCone {
    std::vector<int> forward_qubits;
    std::vector<BlockAddress> backward_blocks;
    std::vector<int> backward_qubits;
    /// Observable terms inside the forward cone; filled by the observable
    /// overload in observables.hpp.
    std::vector<int> i_L;
    /// Subsystems S_k contained in the backward cone.
    std::vector<int> k_LB;
};

LightCone forward_light_cone(const AnsatzLayout &layout, const BlockAddress &addr);

/// Causal past of a qubit set measured at the end of the circuit: the slots
/// that can influence it (mask over blocks()) and the qubits they touch.
struct CausalPast {
    std::vector<char> slot_mask;
    std::vector<int> qubits;
};
CausalPast causal_past(const AnsatzLayout &layout, std::span<const int> support);

} // namespace plateau
