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
 * Gradient-trained comparison model: a fixed layered ansatz of RY
 * rotations and a CNOT ring, trained with Adam on parameter-shift
 * gradients of the binary cross-entropy.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "swarmvqc/circuit.hpp"
#include "swarmvqc/data.hpp"

namespace swarmvqc {

/**
 * Each layer is RY(params[L*n + q]) on every qubit q in ascending order,
 * then CNOT(q, (q + 1) mod n) for q = 0..n-1. Two layers on eight qubits
 * give 16 parameters and 32 gates.
 */
struct FixedAnsatz {
    std::size_t n_qubits = 8;
    std::size_t n_layers = 2;

    [[nodiscard]] std::size_t parameter_count() const {
        return n_qubits * n_layers;
    }
    [[nodiscard]] std::size_t gate_count() const {
        return 2 * n_qubits * n_layers;
    }
    [[nodiscard]] Circuit build(std::span<const double> params) const;
};

[[nodiscard]] Circuit build_fixed_ansatz(std::span<const double> params,
                                         const FixedAnsatz &ansatz = {});

/// Mean clipped BCE of the ansatz on `batch`. Throws on an empty batch.
[[nodiscard]] double loss(const FixedAnsatz &ansatz,
                          std::span<const double> params, const Dataset &batch);

/**
 * d<Z_readout>/d(params) for one input, by the two-term shift rule
 * (E(theta + pi/2) - E(theta - pi/2)) / 2 on each parameter.
 */
[[nodiscard]] std::vector<double>
expectation_gradient(const FixedAnsatz &ansatz, std::span<const double> params,
                     std::span<const double> features);

/**
 * Gradient of loss() with respect to params: shift-rule expectation
 * gradients chained through dL/dp and dp/dE = -1/2. Where p sits in the
 * clip region the loss is flat and the contribution is zero.
 */
[[nodiscard]] std::vector<double>
parameter_shift_gradient(const FixedAnsatz &ansatz,
                         std::span<const double> params, const Dataset &batch,
                         std::size_t threads = 1);

struct AdamState {
    std::vector<double> first_moment;
    std::vector<double> second_moment;
    std::size_t step_count = 0;
    double learning_rate = 0.01;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;

    [[nodiscard]] static AdamState for_size(std::size_t n,
                                            double learning_rate = 0.01);
};

/// One bias-corrected Adam update; returns the new parameters.
[[nodiscard]] std::vector<double> adam_step(AdamState &state,
                                            std::span<const double> params,
                                            std::span<const double> gradient);

struct TrainConfig {
    std::size_t epochs = 100;
    std::size_t batch_size = 32;
    double learning_rate = 0.01;
    std::uint64_t seed = 0;
    std::size_t threads = 0;
    /// One line per epoch when non-null.
    std::ostream *progress = nullptr;
};

struct EpochRecord {
    std::size_t epoch = 0;
    double train_loss = 0.0;
    double train_acc = 0.0;
    double val_loss = 0.0;
    double val_acc = 0.0;
};

struct TrainResult {
    std::vector<double> initial_params;
    std::vector<double> final_params;
    /// Parameters at the epoch with the highest validation accuracy
    /// (earliest on ties).
    std::vector<double> best_params;
    std::size_t best_epoch = 0;
    std::vector<EpochRecord> history;
};

/// Deterministic initial angles, uniform in [0, 2*pi).
[[nodiscard]] std::vector<double> initial_parameters(const FixedAnsatz &ansatz,
                                                     std::uint64_t seed);

/**
 * Minibatch Adam over shuffled epochs. Both splits must already be
 * preprocessed to ansatz.n_qubits features in [0, pi].
 */
[[nodiscard]] TrainResult train_baseline(const Dataset &train,
                                         const Dataset &validation,
                                         const TrainConfig &config,
                                         const FixedAnsatz &ansatz = {});

/// CSV with header `epoch,train_loss,train_acc,val_loss,val_acc`.
[[nodiscard]] std::string
training_history_to_csv(std::span<const EpochRecord> history);

} // namespace swarmvqc
