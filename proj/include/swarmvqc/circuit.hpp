// Copyright 2026 The SwarmVQC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Gates, circuits, and the particle-position decoder used by the
 * architecture search.
 */
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace swarmvqc {

enum class GateKind { RX, RY, RZ, CNOT };

[[nodiscard]] std::string_view gate_name(GateKind kind);

/**
 * One quantum operation. Rotations carry a target and an angle; CNOT
 * carries a control and a target. Use the factory functions, which
 * enforce the field rules (no angle on CNOT, control != target).
 */
class Gate {
  public:
    [[nodiscard]] static Gate rotation(GateKind kind, std::size_t target,
                                       double angle);
    [[nodiscard]] static Gate cnot(std::size_t control, std::size_t target);

    [[nodiscard]] GateKind kind() const { return kind_; }
    [[nodiscard]] bool is_rotation() const { return kind_ != GateKind::CNOT; }
    [[nodiscard]] std::size_t target() const { return target_; }
    /// Only meaningful for CNOT.
    [[nodiscard]] std::size_t control() const { return control_; }
    /// Only meaningful for rotations.
    [[nodiscard]] double angle() const { return angle_; }

    /// Largest qubit index the gate touches.
    [[nodiscard]] std::size_t max_qubit() const;
    [[nodiscard]] bool acts_on(std::size_t qubit) const;

    friend bool operator==(const Gate &, const Gate &) = default;

  private:
    Gate(GateKind kind, std::size_t target, std::size_t control, double angle)
        : kind_(kind), target_(target), control_(control), angle_(angle) {}

    GateKind kind_;
    std::size_t target_;
    std::size_t control_;
    double angle_;
};

/**
 * Ordered gate list over a fixed register. Gates are applied front to
 * back. Every gate is bounds-checked against the register on insertion.
 */
class Circuit {
  public:
    explicit Circuit(std::size_t n_qubits);
    Circuit(std::size_t n_qubits, std::vector<Gate> gates);

    void append(const Gate &gate);

    [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
    [[nodiscard]] const std::vector<Gate> &gates() const { return gates_; }
    [[nodiscard]] std::size_t size() const { return gates_.size(); }
    [[nodiscard]] bool empty() const { return gates_.empty(); }

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    std::size_t n_qubits_;
    std::vector<Gate> gates_;
};

/// Number of position components consumed per decoded gate.
inline constexpr std::size_t kSlotsPerGate = 4;

/**
 * A point of the search space: a vector in [0, 1]^d with d a multiple
 * of four. Components within 1e-12 outside the box are accepted and
 * clamped; anything further out is an encoder bug and throws.
 */
class ParticlePosition {
  public:
    explicit ParticlePosition(std::vector<double> values);

    [[nodiscard]] std::span<const double> values() const { return values_; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] std::size_t gate_count() const {
        return values_.size() / kSlotsPerGate;
    }

  private:
    std::vector<double> values_;
};

/// Round half away from zero, independent of the current FP rounding mode.
[[nodiscard]] double round_half_away(double value);

/**
 * Map a unit-interval slot onto 1..levels with round(1 + levels * value),
 * clamped to `levels` at the top end.
 */
[[nodiscard]] std::size_t discretize_slot(double value, std::size_t levels);

/**
 * Decode a particle position into a circuit, one gate per group of four
 * slots (gate type, target, control, angle), groups applied in order.
 *
 * Gate type 1..4 maps to RX, RY, RZ, CNOT. Qubit slots map to 1..n and are
 * shifted to 0-based indices. A CNOT whose control lands on its target
 * has the control moved to (control + 1) mod n. Rotation angles are
 * 2*pi*slot. Unused slots (control for rotations, angle for CNOT) are
 * ignored.
 */
[[nodiscard]] Circuit decode_particle(const ParticlePosition &position,
                                      std::size_t n_qubits);
[[nodiscard]] Circuit decode_particle(std::span<const double> position,
                                      std::size_t n_qubits);

} // namespace swarmvqc
