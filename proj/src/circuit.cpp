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

#include "swarmvqc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "swarmvqc/error.hpp"

namespace swarmvqc {

namespace {
constexpr double kBoxTolerance = 1e-12;
constexpr std::size_t kGateAlphabet = 4;
} // namespace

std::string_view gate_name(GateKind kind) {
    switch (kind) {
    case GateKind::RX:
        return "RX";
    case GateKind::RY:
        return "RY";
    case GateKind::RZ:
        return "RZ";
    case GateKind::CNOT:
        return "CNOT";
    }
    return "?";
}

Gate Gate::rotation(GateKind kind, std::size_t target, double angle) {
    if (kind == GateKind::CNOT) {
        throw InvalidArgument("Gate::rotation called with CNOT");
    }
    if (!std::isfinite(angle)) {
        throw InvalidArgument("rotation angle must be finite");
    }
    return Gate(kind, target, 0, angle);
}

Gate Gate::cnot(std::size_t control, std::size_t target) {
    if (control == target) {
        throw InvalidArgument("CNOT control and target must differ (both " +
                              std::to_string(target) + ")");
    }
    return Gate(GateKind::CNOT, target, control, 0.0);
}

std::size_t Gate::max_qubit() const {
    return is_rotation() ? target_ : std::max(target_, control_);
}

bool Gate::acts_on(std::size_t qubit) const {
    return target_ == qubit || (!is_rotation() && control_ == qubit);
}

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0) {
        throw InvalidArgument("circuit needs at least one qubit");
    }
}

Circuit::Circuit(std::size_t n_qubits, std::vector<Gate> gates)
    : Circuit(n_qubits) {
    gates_.reserve(gates.size());
    for (const auto &g : gates) {
        append(g);
    }
}

void Circuit::append(const Gate &gate) {
    if (gate.max_qubit() >= n_qubits_) {
        throw InvalidArgument("qubit index " +
                              std::to_string(gate.max_qubit()) +
                              " out of range for " + std::to_string(n_qubits_) +
                              "-qubit circuit");
    }
    gates_.push_back(gate);
}

ParticlePosition::ParticlePosition(std::vector<double> values)
    : values_(std::move(values)) {
    if (values_.size() % kSlotsPerGate != 0) {
        throw InvalidArgument("particle length " +
                              std::to_string(values_.size()) +
                              " is not a multiple of 4");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        double &v = values_[i];
        if (!(v >= -kBoxTolerance && v <= 1.0 + kBoxTolerance)) {
            throw InvalidArgument("particle component " + std::to_string(i) +
                                  " = " + std::to_string(v) +
                                  " outside [0, 1]");
        }
        v = std::clamp(v, 0.0, 1.0);
    }
}

double round_half_away(double value) {
    return value < 0.0 ? -std::floor(-value + 0.5) : std::floor(value + 0.5);
}

std::size_t discretize_slot(double value, std::size_t levels) {
    const double level =
        round_half_away(1.0 + static_cast<double>(levels) * value);
    return static_cast<std::size_t>(
        std::clamp(level, 1.0, static_cast<double>(levels)));
}

Circuit decode_particle(const ParticlePosition &position,
                        std::size_t n_qubits) {
    Circuit circuit(n_qubits);
    const auto slots = position.values();
    for (std::size_t g = 0; g < position.gate_count(); ++g) {
        const auto group = slots.subspan(g * kSlotsPerGate, kSlotsPerGate);
        const auto kind =
            static_cast<GateKind>(discretize_slot(group[0], kGateAlphabet) - 1);
        const std::size_t target = discretize_slot(group[1], n_qubits) - 1;
        if (kind == GateKind::CNOT) {
            if (n_qubits < 2) {
                throw InvalidArgument(
                    "decoded a CNOT on a 1-qubit register");
            }
            std::size_t control = discretize_slot(group[2], n_qubits) - 1;
            if (control == target) {
                control = (control + 1) % n_qubits;
            }
            circuit.append(Gate::cnot(control, target));
        } else {
            circuit.append(Gate::rotation(
                kind, target, 2.0 * std::numbers::pi * group[3]));
        }
    }
    return circuit;
}

Circuit decode_particle(std::span<const double> position,
                        std::size_t n_qubits) {
    return decode_particle(
        ParticlePosition(std::vector<double>(position.begin(), position.end())),
        n_qubits);
}

} // namespace swarmvqc
