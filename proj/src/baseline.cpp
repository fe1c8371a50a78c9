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

#include "swarmvqc/baseline.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <numeric>

#include "swarmvqc/error.hpp"
#include "swarmvqc/metrics.hpp"
#include "swarmvqc/parallel.hpp"
#include "swarmvqc/random.hpp"
#include "swarmvqc/statevector.hpp"
#include "swarmvqc/text_util.hpp"

namespace swarmvqc {

namespace {

constexpr double kShift = std::numbers::pi / 2.0;

void check_params(const FixedAnsatz &ansatz, std::span<const double> params) {
    if (params.size() != ansatz.parameter_count()) {
        throw InvalidArgument("ansatz expects " +
                              std::to_string(ansatz.parameter_count()) +
                              " parameters, got " +
                              std::to_string(params.size()));
    }
}

void check_batch(const FixedAnsatz &ansatz, const Dataset &batch) {
    if (batch.size() == 0) {
        throw InvalidArgument("empty batch");
    }
    if (batch.width() != ansatz.n_qubits) {
        throw InvalidArgument("batch width " + std::to_string(batch.width()) +
                              " != " + std::to_string(ansatz.n_qubits) +
                              " qubits");
    }
}

double expectation_on(const Statevector &encoded, const Circuit &circuit) {
    Statevector state = encoded;
    state.apply(circuit);
    return state.expectation_z(kReadoutQubit);
}

std::vector<double> shift_gradient(const FixedAnsatz &ansatz,
                                   std::span<const double> params,
                                   const Statevector &encoded) {
    std::vector<double> shifted(params.begin(), params.end());
    std::vector<double> grad(params.size());
    for (std::size_t k = 0; k < params.size(); ++k) {
        shifted[k] = params[k] + kShift;
        const double plus = expectation_on(encoded, ansatz.build(shifted));
        shifted[k] = params[k] - kShift;
        const double minus = expectation_on(encoded, ansatz.build(shifted));
        shifted[k] = params[k];
        grad[k] = 0.5 * (plus - minus);
    }
    return grad;
}

// dL/dE for one sample: dL/dp * dp/dE with p = (1 - E)/2.
double loss_slope(double expectation, int label) {
    const double p = 0.5 * (1.0 - expectation);
    if (p < kProbabilityClip || p > 1.0 - kProbabilityClip) {
        return 0.0;
    }
    const double dl_dp = label == 1 ? -1.0 / p : 1.0 / (1.0 - p);
    return -0.5 * dl_dp;
}

struct SplitScore {
    double loss = 0.0;
    double accuracy = 0.0;
};

SplitScore score(const FixedAnsatz &ansatz, std::span<const double> params,
                 const Dataset &data, std::size_t threads) {
    const Circuit circuit = ansatz.build(params);
    std::vector<ReadoutResult> results(data.size());
    parallel_for(
        data.size(),
        [&](std::size_t i) { results[i] = run_and_classify(circuit, data.row(i)); },
        threads);
    double total = 0.0;
    std::vector<int> predictions(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        total += binary_cross_entropy(results[i].probability_class1,
                                      data.labels[i]);
        predictions[i] = results[i].predicted_label;
    }
    return {total / static_cast<double>(data.size()),
            accuracy(predictions, data.labels)};
}

} // namespace

Circuit FixedAnsatz::build(std::span<const double> params) const {
    if (n_qubits < 2 || n_layers == 0) {
        throw InvalidArgument("ansatz needs >= 2 qubits and >= 1 layer");
    }
    check_params(*this, params);
    Circuit circuit(n_qubits);
    for (std::size_t layer = 0; layer < n_layers; ++layer) {
        for (std::size_t q = 0; q < n_qubits; ++q) {
            circuit.append(
                Gate::rotation(GateKind::RY, q, params[layer * n_qubits + q]));
        }
        for (std::size_t q = 0; q < n_qubits; ++q) {
            circuit.append(Gate::cnot(q, (q + 1) % n_qubits));
        }
    }
    return circuit;
}

Circuit build_fixed_ansatz(std::span<const double> params,
                           const FixedAnsatz &ansatz) {
    return ansatz.build(params);
}

double loss(const FixedAnsatz &ansatz, std::span<const double> params,
            const Dataset &batch) {
    check_batch(ansatz, batch);
    const Circuit circuit = ansatz.build(params);
    double total = 0.0;
    for (std::size_t i = 0; i < batch.size(); ++i) {
        const auto r = run_and_classify(circuit, batch.row(i));
        total += binary_cross_entropy(r.probability_class1, batch.labels[i]);
    }
    return total / static_cast<double>(batch.size());
}

std::vector<double> expectation_gradient(const FixedAnsatz &ansatz,
                                         std::span<const double> params,
                                         std::span<const double> features) {
    check_params(ansatz, params);
    if (features.size() != ansatz.n_qubits) {
        throw InvalidArgument("feature count does not match ansatz width");
    }
    return shift_gradient(ansatz, params, encode_product_state(features));
}

std::vector<double> parameter_shift_gradient(const FixedAnsatz &ansatz,
                                             std::span<const double> params,
                                             const Dataset &batch,
                                             std::size_t threads) {
    check_batch(ansatz, batch);
    check_params(ansatz, params);
    const Circuit circuit = ansatz.build(params);

    std::vector<std::vector<double>> per_sample(batch.size());
    parallel_for(
        batch.size(),
        [&](std::size_t i) {
            const Statevector encoded = encode_product_state(batch.row(i));
            const double slope = loss_slope(expectation_on(encoded, circuit),
                                            batch.labels[i]);
            if (slope == 0.0) {
                per_sample[i].assign(params.size(), 0.0);
                return;
            }
            auto g = shift_gradient(ansatz, params, encoded);
            for (auto &v : g) {
                v *= slope;
            }
            per_sample[i] = std::move(g);
        },
        threads);

    std::vector<double> grad(params.size(), 0.0);
    for (const auto &g : per_sample) {
        for (std::size_t k = 0; k < grad.size(); ++k) {
            grad[k] += g[k];
        }
    }
    for (auto &v : grad) {
        v /= static_cast<double>(batch.size());
    }
    return grad;
}

AdamState AdamState::for_size(std::size_t n, double learning_rate) {
    AdamState state;
    state.first_moment.assign(n, 0.0);
    state.second_moment.assign(n, 0.0);
    state.learning_rate = learning_rate;
    return state;
}

std::vector<double> adam_step(AdamState &state, std::span<const double> params,
                              std::span<const double> gradient) {
    const std::size_t n = params.size();
    if (gradient.size() != n || state.first_moment.size() != n ||
        state.second_moment.size() != n) {
        throw InvalidArgument("Adam length mismatch");
    }
    ++state.step_count;
    const double t = static_cast<double>(state.step_count);
    const double correction1 = 1.0 - std::pow(state.beta1, t);
    const double correction2 = 1.0 - std::pow(state.beta2, t);
    std::vector<double> updated(params.begin(), params.end());
    for (std::size_t k = 0; k < n; ++k) {
        auto &m = state.first_moment[k];
        auto &v = state.second_moment[k];
        m = state.beta1 * m + (1.0 - state.beta1) * gradient[k];
        v = state.beta2 * v + (1.0 - state.beta2) * gradient[k] * gradient[k];
        const double m_hat = m / correction1;
        const double v_hat = v / correction2;
        updated[k] -= state.learning_rate * m_hat /
                      (std::sqrt(v_hat) + state.epsilon);
    }
    return updated;
}

std::vector<double> initial_parameters(const FixedAnsatz &ansatz,
                                       std::uint64_t seed) {
    auto engine = make_engine(seed, Stream::AnsatzInit);
    std::vector<double> params(ansatz.parameter_count());
    for (auto &p : params) {
        p = uniform(engine, 0.0, 2.0 * std::numbers::pi);
    }
    return params;
}

TrainResult train_baseline(const Dataset &train, const Dataset &validation,
                           const TrainConfig &config,
                           const FixedAnsatz &ansatz) {
    check_batch(ansatz, train);
    check_batch(ansatz, validation);
    if (config.epochs == 0 || config.batch_size == 0) {
        throw InvalidArgument("epochs and batch size must be positive");
    }
    std::size_t batch_size = config.batch_size;
    if (train.size() < batch_size) {
        std::cerr << "warning: " << train.size()
                  << " training samples is less than one batch of "
                  << batch_size << "; using a single full batch\n";
        batch_size = train.size();
    }

    TrainResult result;
    result.initial_params = initial_parameters(ansatz, config.seed);
    std::vector<double> params = result.initial_params;
    AdamState adam =
        AdamState::for_size(params.size(), config.learning_rate);
    std::vector<std::size_t> order(train.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    double best_val = -1.0;

    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        auto engine = make_engine(config.seed, Stream::Shuffle, {epoch});
        portable_shuffle(order.begin(), order.end(), engine);
        for (std::size_t first = 0; first < order.size(); first += batch_size) {
            const std::size_t count =
                std::min(batch_size, order.size() - first);
            const Dataset batch = train.select(
                std::span<const std::size_t>(order).subspan(first, count));
            const auto grad = parameter_shift_gradient(ansatz, params, batch,
                                                       config.threads);
            params = adam_step(adam, params, grad);
        }

        const auto tr = score(ansatz, params, train, config.threads);
        const auto va = score(ansatz, params, validation, config.threads);
        const EpochRecord record{epoch, tr.loss, tr.accuracy, va.loss,
                                 va.accuracy};
        result.history.push_back(record);
        if (va.accuracy > best_val) {
            best_val = va.accuracy;
            result.best_params = params;
            result.best_epoch = epoch;
        }
        if (config.progress != nullptr) {
            *config.progress << "epoch=" << epoch
                             << " train_loss=" << format_double(tr.loss)
                             << " train_acc=" << format_double(tr.accuracy)
                             << " val_loss=" << format_double(va.loss)
                             << " val_acc=" << format_double(va.accuracy)
                             << '\n';
        }
    }
    result.final_params = params;
    return result;
}

std::string training_history_to_csv(std::span<const EpochRecord> history) {
    std::string csv = "epoch,train_loss,train_acc,val_loss,val_acc\n";
    for (const auto &r : history) {
        csv += std::to_string(r.epoch) + ',' + format_double(r.train_loss) +
               ',' + format_double(r.train_acc) + ',' +
               format_double(r.val_loss) + ',' + format_double(r.val_acc) +
               '\n';
    }
    return csv;
}

} // namespace swarmvqc
