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
 * Exact statevector simulation, angle encoding, and Z readout.
 *
 * Basis ordering is little-endian: qubit q is bit q of the amplitude
 * index, so qubit 0 is the least significant bit. |10> in the usual
 * ket notation (qubit 0 = 1, qubit 1 = 0) is therefore index 1.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "swarmvqc/circuit.hpp"
#include "swarmvqc/random.hpp"

namespace swarmvqc {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 24;
/// Qubit whose Z expectation decides the predicted class.
inline constexpr std::size_t kReadoutQubit = 0;

class Statevector {
  public:
    /// |0...0> on n_qubits, 1 <= n_qubits <= kMaxQubits.
    explicit Statevector(std::size_t n_qubits);

    /// Takes ownership of amplitudes; length must be a power of two.
    [[nodiscard]] static Statevector from_amplitudes(std::vector<Complex> amps);

    [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
    [[nodiscard]] std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }

    void apply(const Gate &gate);
    void apply(const Circuit &circuit);

    [[nodiscard]] double norm_squared() const;
    /// Probability that `qubit` reads 0.
    [[nodiscard]] double probability_zero(std::size_t qubit) const;
    /// <Z> on `qubit`: +1 weight for bit 0, -1 for bit 1.
    [[nodiscard]] double expectation_z(std::size_t qubit) const;

  private:
    Statevector(std::size_t n_qubits, std::vector<Complex> amps)
        : n_qubits_(n_qubits), amplitudes_(std::move(amps)) {}

    void check_qubit(std::size_t qubit) const;
    void apply_single(std::size_t target, const Complex &m00,
                      const Complex &m01, const Complex &m10,
                      const Complex &m11);
    void apply_cnot(std::size_t control, std::size_t target);

    std::size_t n_qubits_;
    std::vector<Complex> amplitudes_;
};

[[nodiscard]] inline Statevector init_state(std::size_t n_qubits) {
    return Statevector(n_qubits);
}

[[nodiscard]] inline Statevector apply_gate(Statevector state,
                                            const Gate &gate) {
    state.apply(gate);
    return state;
}

[[nodiscard]] inline double expectation_z(const Statevector &state,
                                          std::size_t qubit) {
    return state.expectation_z(qubit);
}

/**
 * Encoding prefix: RY(feature_i) on qubit i. Features must already lie in
 * [0, pi]; anything more than 1e-9 outside means scaling was skipped and
 * throws.
 */
[[nodiscard]] Circuit angle_encode(std::span<const double> features);

/**
 * The state produced by applying angle_encode(features) to |0...0>,
 * built directly as a tensor product in O(2^n).
 */
[[nodiscard]] Statevector encode_product_state(std::span<const double> features);

struct ReadoutResult {
    double expectation = 1.0;
    double probability_class1 = 0.0;
    int predicted_label = 0;
};

/// Probabilities are clipped into [kProbabilityClip, 1 - kProbabilityClip]
/// before taking logs.
inline constexpr double kProbabilityClip = 1e-7;

/// -[y ln p + (1 - y) ln(1 - p)] with p clipped.
[[nodiscard]] double binary_cross_entropy(double probability_class1,
                                          int label);

/// Class-1 probability (1 - <Z>)/2, label 1 iff that is >= 0.5.
[[nodiscard]] ReadoutResult readout_from_expectation(double expectation);

/// |0...0> -> encode(features) -> circuit -> <Z> on the readout qubit.
[[nodiscard]] ReadoutResult run_and_classify(const Circuit &circuit,
                                             std::span<const double> features);

/**
 * Shot estimate of <Z>: `shots` Bernoulli draws with the probability of
 * reading 0, returned as 2*count0/shots - 1.
 */
[[nodiscard]] double sample_expectation(const Statevector &state,
                                        std::size_t qubit, std::size_t shots,
                                        Engine &engine);

} // namespace swarmvqc
