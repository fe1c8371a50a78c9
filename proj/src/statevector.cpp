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

#include "swarmvqc/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "swarmvqc/error.hpp"

namespace swarmvqc {

namespace {
constexpr double kEncodingTolerance = 1e-9;
} // namespace

Statevector::Statevector(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw InvalidArgument("qubit count " + std::to_string(n_qubits) +
                              " outside supported range 1.." +
                              std::to_string(kMaxQubits));
    }
    amplitudes_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

Statevector Statevector::from_amplitudes(std::vector<Complex> amps) {
    if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
        throw InvalidArgument("amplitude count must be a power of two >= 2");
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(amps.size()));
    if (n > kMaxQubits) {
        throw InvalidArgument("too many qubits");
    }
    return Statevector(n, std::move(amps));
}

void Statevector::check_qubit(std::size_t qubit) const {
    if (qubit >= n_qubits_) {
        throw InvalidArgument("qubit " + std::to_string(qubit) +
                              " out of range for " + std::to_string(n_qubits_) +
                              "-qubit state");
    }
}

// Visits every index pair (i0, i1) that differs only in bit `target`,
// without materialising the 2^n x 2^n operator.
void Statevector::apply_single(std::size_t target, const Complex &m00,
                               const Complex &m01, const Complex &m10,
                               const Complex &m11) {
    const std::size_t stride = std::size_t{1} << target;
    const std::size_t dim = amplitudes_.size();
    Complex *amps = amplitudes_.data();
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t offset = 0; offset < stride; ++offset) {
            const std::size_t i0 = block + offset;
            const std::size_t i1 = i0 + stride;
            const Complex a0 = amps[i0];
            const Complex a1 = amps[i1];
            amps[i0] = m00 * a0 + m01 * a1;
            amps[i1] = m10 * a0 + m11 * a1;
        }
    }
}

void Statevector::apply_cnot(std::size_t control, std::size_t target) {
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    const std::size_t dim = amplitudes_.size();
    for (std::size_t i = 0; i < dim; ++i) {
        // Swap each pair once, from the member with the target bit clear.
        if ((i & cmask) != 0 && (i & tmask) == 0) {
            std::swap(amplitudes_[i], amplitudes_[i | tmask]);
        }
    }
}

void Statevector::apply(const Gate &gate) {
    check_qubit(gate.max_qubit());
    const double half = 0.5 * gate.angle();
    const double c = std::cos(half);
    const double s = std::sin(half);
    switch (gate.kind()) {
    case GateKind::RX:
        // exp(-i theta X / 2) = [[c, -i s], [-i s, c]]
        apply_single(gate.target(), {c, 0.0}, {0.0, -s}, {0.0, -s}, {c, 0.0});
        break;
    case GateKind::RY:
        // exp(-i theta Y / 2) = [[c, -s], [s, c]]
        apply_single(gate.target(), {c, 0.0}, {-s, 0.0}, {s, 0.0}, {c, 0.0});
        break;
    case GateKind::RZ:
        // exp(-i theta Z / 2) = diag(e^{-i theta/2}, e^{i theta/2})
        apply_single(gate.target(), {c, -s}, {0.0, 0.0}, {0.0, 0.0}, {c, s});
        break;
    case GateKind::CNOT:
        apply_cnot(gate.control(), gate.target());
        break;
    }
}

void Statevector::apply(const Circuit &circuit) {
    if (circuit.n_qubits() > n_qubits_) {
        throw InvalidArgument("circuit wider than state");
    }
    for (const auto &gate : circuit.gates()) {
        apply(gate);
    }
}

double Statevector::norm_squared() const {
    double total = 0.0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

double Statevector::probability_zero(std::size_t qubit) const {
    check_qubit(qubit);
    const std::size_t mask = std::size_t{1} << qubit;
    double p0 = 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        const double p = std::norm(amplitudes_[i]);
        total += p;
        if ((i & mask) == 0) {
            p0 += p;
        }
    }
    return total > 0.0 ? std::clamp(p0 / total, 0.0, 1.0) : 0.0;
}

double Statevector::expectation_z(std::size_t qubit) const {
    check_qubit(qubit);
    const std::size_t mask = std::size_t{1} << qubit;
    double value = 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        const double p = std::norm(amplitudes_[i]);
        value += (i & mask) == 0 ? p : -p;
    }
    return std::clamp(value, -1.0, 1.0);
}

Circuit angle_encode(std::span<const double> features) {
    Circuit circuit(features.size());
    for (std::size_t q = 0; q < features.size(); ++q) {
        const double x = features[q];
        if (!(x >= -kEncodingTolerance &&
              x <= std::numbers::pi + kEncodingTolerance)) {
            throw InvalidArgument("feature " + std::to_string(q) + " = " +
                                  std::to_string(x) +
                                  " outside [0, pi]; was the scaler applied?");
        }
        circuit.append(Gate::rotation(GateKind::RY, q, x));
    }
    return circuit;
}

Statevector encode_product_state(std::span<const double> features) {
    // Validates the range and the register size.
    const Circuit prefix = angle_encode(features);
    const std::size_t n = prefix.n_qubits();
    if (n > kMaxQubits) {
        throw InvalidArgument("too many features for the simulator");
    }
    std::vector<Complex> amps(std::size_t{1} << n);
    amps[0] = 1.0;
    std::size_t filled = 1;
    for (std::size_t q = 0; q < n; ++q) {
        // RY(x)|0> = cos(x/2)|0> + sin(x/2)|1>
        const double c = std::cos(0.5 * features[q]);
        const double s = std::sin(0.5 * features[q]);
        for (std::size_t i = 0; i < filled; ++i) {
            amps[i + filled] = amps[i] * s;
            amps[i] *= c;
        }
        filled *= 2;
    }
    return Statevector::from_amplitudes(std::move(amps));
}

ReadoutResult readout_from_expectation(double expectation) {
    ReadoutResult result;
    result.expectation = std::clamp(expectation, -1.0, 1.0);
    result.probability_class1 = 0.5 * (1.0 - result.expectation);
    result.predicted_label = result.probability_class1 >= 0.5 ? 1 : 0;
    return result;
}

double binary_cross_entropy(double probability_class1, int label) {
    const double p =
        std::clamp(probability_class1, kProbabilityClip, 1.0 - kProbabilityClip);
    return label == 1 ? -std::log(p) : -std::log(1.0 - p);
}

ReadoutResult run_and_classify(const Circuit &circuit,
                               std::span<const double> features) {
    if (features.size() != circuit.n_qubits()) {
        throw InvalidArgument("feature count " +
                              std::to_string(features.size()) +
                              " does not match circuit width " +
                              std::to_string(circuit.n_qubits()));
    }
    Statevector state(circuit.n_qubits());
    state.apply(angle_encode(features));
    state.apply(circuit);
    return readout_from_expectation(state.expectation_z(kReadoutQubit));
}

double sample_expectation(const Statevector &state, std::size_t qubit,
                          std::size_t shots, Engine &engine) {
    if (shots == 0) {
        throw InvalidArgument("shots must be positive");
    }
    const double p0 = state.probability_zero(qubit);
    std::size_t zeros = 0;
    for (std::size_t s = 0; s < shots; ++s) {
        if (uniform01(engine) < p0) {
            ++zeros;
        }
    }
    return 2.0 * static_cast<double>(zeros) / static_cast<double>(shots) - 1.0;
}

} // namespace swarmvqc
