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

#include "swarmvqc/data.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <memory>
#include <numbers>

#include "swarmvqc/circuit.hpp"
#include "swarmvqc/error.hpp"
#include "swarmvqc/random.hpp"
#include "swarmvqc/statevector.hpp"
#include "swarmvqc/text_util.hpp"

namespace swarmvqc {

std::string_view split_name(Split split) {
    switch (split) {
    case Split::Train:
        return "train";
    case Split::Validation:
        return "val";
    case Split::Test:
        return "test";
    }
    return "?";
}

Dataset Dataset::slice(std::size_t first, std::size_t count) const {
    if (first + count > size()) {
        throw InvalidArgument("slice past end of dataset");
    }
    Dataset out;
    out.split = split;
    out.features = features.middleRows(static_cast<Eigen::Index>(first),
                                       static_cast<Eigen::Index>(count));
    out.labels.assign(labels.begin() + static_cast<std::ptrdiff_t>(first),
                      labels.begin() +
                          static_cast<std::ptrdiff_t>(first + count));
    return out;
}

Dataset Dataset::select(std::span<const std::size_t> rows) const {
    Dataset out;
    out.split = split;
    out.features.resize(static_cast<Eigen::Index>(rows.size()),
                        features.cols());
    out.labels.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] >= size()) {
            throw InvalidArgument("row index out of range");
        }
        out.features.row(static_cast<Eigen::Index>(i)) =
            features.row(static_cast<Eigen::Index>(rows[i]));
        out.labels.push_back(labels[rows[i]]);
    }
    return out;
}

Dataset parse_csv(std::string_view text, Split split) {
    const auto lines = split_lines(text);
    std::size_t line_no = 0;
    std::size_t n_features = 0;
    bool have_header = false;
    std::vector<double> values;
    std::vector<int> labels;

    for (const auto line : lines) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        const auto cells = split_on(line, ',');
        if (!have_header) {
            if (trim(cells[0]) != "label" || cells.size() < 2) {
                throw ParseError(line_no,
                                 "header must be 'label,f0,...' with at least "
                                 "one feature");
            }
            for (std::size_t j = 1; j < cells.size(); ++j) {
                if (trim(cells[j]) != "f" + std::to_string(j - 1)) {
                    throw ParseError(line_no, "header column " +
                                                  std::to_string(j) +
                                                  " should be f" +
                                                  std::to_string(j - 1));
                }
            }
            n_features = cells.size() - 1;
            have_header = true;
            continue;
        }
        if (cells.size() != n_features + 1) {
            throw ParseError(line_no, "expected " +
                                          std::to_string(n_features + 1) +
                                          " columns, found " +
                                          std::to_string(cells.size()));
        }
        const auto label = parse_integer(trim(cells[0]));
        if (!label || *label < 0 || *label > std::numeric_limits<int>::max()) {
            throw ParseError(line_no, "label must be a nonnegative integer");
        }
        labels.push_back(static_cast<int>(*label));
        for (std::size_t j = 1; j < cells.size(); ++j) {
            const auto v = parse_double(trim(cells[j]));
            if (!v || !std::isfinite(*v)) {
                throw ParseError(line_no, "non-numeric value in column " +
                                              std::to_string(j));
            }
            values.push_back(*v);
        }
    }
    if (!have_header) {
        throw ParseError(0, "empty file");
    }
    if (labels.empty()) {
        throw ParseError(0, "no samples");
    }

    Dataset dataset;
    dataset.split = split;
    dataset.labels = std::move(labels);
    dataset.features = Eigen::Map<const FeatureMatrix>(
        values.data(), static_cast<Eigen::Index>(dataset.labels.size()),
        static_cast<Eigen::Index>(n_features));
    return dataset;
}

Dataset load_csv(const std::filesystem::path &path, Split split) {
    try {
        return parse_csv(read_text_file(path), split);
    } catch (const ParseError &e) {
        throw ParseError(e.line(), path.string() + ": " + e.what());
    }
}

std::string dataset_to_csv(const Dataset &dataset) {
    std::string out = "label";
    for (std::size_t j = 0; j < dataset.width(); ++j) {
        out += ",f" + std::to_string(j);
    }
    out += '\n';
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        out += std::to_string(dataset.labels[i]);
        for (const double v : dataset.row(i)) {
            out += ',';
            out += format_double(v);
        }
        out += '\n';
    }
    return out;
}

Dataset filter_first_two_classes(const Dataset &dataset) {
    std::vector<std::size_t> keep;
    bool has0 = false;
    bool has1 = false;
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        const int y = dataset.labels[i];
        if (y == 0 || y == 1) {
            keep.push_back(i);
            has0 = has0 || y == 0;
            has1 = has1 || y == 1;
        }
    }
    if (!has0 || !has1) {
        throw InvalidArgument(
            "dataset must contain both source classes 0 and 1");
    }
    return dataset.select(keep);
}

PcaModel pca_fit(const FeatureMatrix &features, std::size_t k) {
    const auto n = static_cast<std::size_t>(features.rows());
    const auto m = static_cast<std::size_t>(features.cols());
    if (n < 2) {
        throw InvalidArgument("PCA needs at least two samples");
    }
    if (k == 0 || k > std::min(n, m)) {
        throw InvalidArgument("PCA k = " + std::to_string(k) +
                              " must lie in 1..min(samples, features) = " +
                              std::to_string(std::min(n, m)));
    }

    PcaModel model;
    model.mean = features.colwise().mean().transpose();
    const Eigen::MatrixXd centered = features.rowwise() - model.mean.transpose();
    const Eigen::MatrixXd covariance =
        (centered.transpose() * centered) / static_cast<double>(n - 1);
    if (covariance.trace() <= 0.0) {
        throw InvalidArgument("zero variance: all rows are identical");
    }

    // Eigenvalues come back ascending.
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(covariance);
    if (solver.info() != Eigen::Success) {
        throw Error("covariance eigendecomposition failed");
    }
    const auto kk = static_cast<Eigen::Index>(k);
    model.components.resize(kk, static_cast<Eigen::Index>(m));
    model.explained_variance.resize(kk);
    for (Eigen::Index r = 0; r < kk; ++r) {
        const Eigen::Index col = static_cast<Eigen::Index>(m) - 1 - r;
        Eigen::VectorXd axis = solver.eigenvectors().col(col);
        Eigen::Index pivot = 0;
        for (Eigen::Index j = 1; j < axis.size(); ++j) {
            if (std::abs(axis(j)) > std::abs(axis(pivot))) {
                pivot = j;
            }
        }
        if (axis(pivot) < 0.0) {
            axis = -axis;
        }
        model.components.row(r) = axis.transpose();
        // Tiny negative eigenvalues are rounding noise on a PSD matrix.
        model.explained_variance(r) = std::max(0.0, solver.eigenvalues()(col));
    }
    return model;
}

FeatureMatrix pca_transform(const PcaModel &model,
                            const FeatureMatrix &features) {
    if (static_cast<std::size_t>(features.cols()) != model.input_width()) {
        throw InvalidArgument("PCA input width " +
                              std::to_string(features.cols()) +
                              " does not match model width " +
                              std::to_string(model.input_width()));
    }
    return (features.rowwise() - model.mean.transpose()) *
           model.components.transpose();
}

ScalerModel scale_fit(const FeatureMatrix &train) {
    if (train.rows() == 0) {
        throw InvalidArgument("cannot fit scaler on empty data");
    }
    ScalerModel model{train.colwise().minCoeff().transpose(),
                      train.colwise().maxCoeff().transpose()};
    for (const auto j : constant_columns(model)) {
        std::cerr << "warning: feature " << j
                  << " is constant on the training split; mapping it to "
                     "pi/2\n";
    }
    return model;
}

std::vector<std::size_t> constant_columns(const ScalerModel &model) {
    std::vector<std::size_t> constant;
    for (Eigen::Index j = 0; j < model.min.size(); ++j) {
        if (!(model.max(j) > model.min(j))) {
            constant.push_back(static_cast<std::size_t>(j));
        }
    }
    return constant;
}

FeatureMatrix scale_apply(const ScalerModel &model,
                          const FeatureMatrix &features) {
    if (features.cols() != model.min.size()) {
        throw InvalidArgument("scaler width mismatch");
    }
    constexpr double pi = std::numbers::pi;
    FeatureMatrix out(features.rows(), features.cols());
    for (Eigen::Index j = 0; j < features.cols(); ++j) {
        const double lo = model.min(j);
        const double span = model.max(j) - lo;
        for (Eigen::Index i = 0; i < features.rows(); ++i) {
            out(i, j) = span > 0.0
                            ? std::clamp(pi * (features(i, j) - lo) / span,
                                         0.0, pi)
                            : 0.5 * pi;
        }
    }
    return out;
}

Preprocessor Preprocessor::fit(const Dataset &train, std::size_t k) {
    Preprocessor p;
    p.pca = pca_fit(train.features, k);
    p.scaler = scale_fit(pca_transform(p.pca, train.features));
    return p;
}

Dataset Preprocessor::apply(const Dataset &dataset) const {
    Dataset out;
    out.split = dataset.split;
    out.labels = dataset.labels;
    out.features = scale_apply(scaler, pca_transform(pca, dataset.features));
    return out;
}

std::string_view fitness_mode_name(FitnessMode mode) {
    return mode == FitnessMode::ErrorRate ? "error_rate" : "cross_entropy";
}

FitnessMode parse_fitness_mode(std::string_view name) {
    if (name == "error_rate") {
        return FitnessMode::ErrorRate;
    }
    if (name == "cross_entropy") {
        return FitnessMode::CrossEntropy;
    }
    throw InvalidArgument("unknown fitness mode '" + std::string(name) +
                          "' (expected error_rate or cross_entropy)");
}

FitnessFunction make_fitness(const Dataset &train, std::size_t n_qubits,
                             FitnessMode mode) {
    if (train.size() == 0) {
        throw InvalidArgument("fitness needs at least one training sample");
    }
    if (train.width() != n_qubits) {
        throw InvalidArgument("training width " +
                              std::to_string(train.width()) + " != " +
                              std::to_string(n_qubits) + " qubits");
    }
    auto encoded = std::make_shared<std::vector<Statevector>>();
    encoded->reserve(train.size());
    for (std::size_t i = 0; i < train.size(); ++i) {
        encoded->push_back(encode_product_state(train.row(i)));
    }
    auto labels = std::make_shared<const std::vector<int>>(train.labels);

    return [encoded, labels, n_qubits, mode](std::span<const double> position) {
        const Circuit circuit = decode_particle(position, n_qubits);
        std::size_t errors = 0;
        double loss = 0.0;
        for (std::size_t i = 0; i < encoded->size(); ++i) {
            Statevector state = (*encoded)[i];
            state.apply(circuit);
            const auto r =
                readout_from_expectation(state.expectation_z(kReadoutQubit));
            const int y = (*labels)[i];
            if (mode == FitnessMode::ErrorRate) {
                errors += r.predicted_label != y ? 1 : 0;
            } else {
                loss += binary_cross_entropy(r.probability_class1, y);
            }
        }
        const auto n = static_cast<double>(encoded->size());
        return mode == FitnessMode::ErrorRate
                   ? static_cast<double>(errors) / n
                   : loss / n;
    };
}

Dataset make_two_gaussians(std::size_t n_samples, std::size_t n_features,
                           double separation, std::uint64_t seed,
                           std::uint64_t direction_seed, Split split) {
    if (n_samples == 0 || n_features == 0) {
        throw InvalidArgument("synthetic dataset needs samples and features");
    }
    auto dir_engine = make_engine(direction_seed, Stream::Synthetic, {0});
    Eigen::VectorXd direction(static_cast<Eigen::Index>(n_features));
    for (auto &v : direction) {
        v = standard_normal(dir_engine);
    }
    direction.normalize();

    auto engine = make_engine(seed, Stream::Synthetic, {1});
    Dataset data;
    data.split = split;
    data.features.resize(static_cast<Eigen::Index>(n_samples),
                         static_cast<Eigen::Index>(n_features));
    data.labels.resize(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const int y = static_cast<int>(i % 2);
        const double sign = y == 1 ? 0.5 : -0.5;
        for (std::size_t j = 0; j < n_features; ++j) {
            const auto jj = static_cast<Eigen::Index>(j);
            data.features(static_cast<Eigen::Index>(i), jj) =
                sign * separation * direction(jj) + standard_normal(engine);
        }
        data.labels[i] = y;
    }
    return data;
}

} // namespace swarmvqc
