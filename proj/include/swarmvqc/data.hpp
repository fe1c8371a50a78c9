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
 * Dataset ingestion and preprocessing: CSV loading, binary filtering,
 * PCA, min-max scaling into the encoding range, and construction of the
 * swarm fitness function.
 *
 * Dataset CSV layout: header `label,f0,f1,...,f{m-1}`, one sample per
 * row, nonnegative integer label, decimal features.
 */
#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swarmvqc/pso.hpp"

namespace swarmvqc {

/// One sample per row, contiguous.
using FeatureMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class Split { Train, Validation, Test };

[[nodiscard]] std::string_view split_name(Split split);

struct Dataset {
    FeatureMatrix features; ///< n_samples x n_features
    std::vector<int> labels;
    Split split = Split::Train;

    [[nodiscard]] std::size_t size() const { return labels.size(); }
    [[nodiscard]] std::size_t width() const {
        return static_cast<std::size_t>(features.cols());
    }
    [[nodiscard]] std::span<const double> row(std::size_t i) const {
        return {features.row(static_cast<Eigen::Index>(i)).data(), width()};
    }
    /// Rows [first, first + count) as a new dataset.
    [[nodiscard]] Dataset slice(std::size_t first, std::size_t count) const;
    /// Rows in the given order.
    [[nodiscard]] Dataset select(std::span<const std::size_t> rows) const;
};

/// Parse dataset CSV text. Row numbers in errors are 1-based file lines.
[[nodiscard]] Dataset parse_csv(std::string_view text,
                                Split split = Split::Train);
[[nodiscard]] Dataset load_csv(const std::filesystem::path &path,
                               Split split = Split::Train);
[[nodiscard]] std::string dataset_to_csv(const Dataset &dataset);

/**
 * Keep rows whose source label is 0 or 1, preserving order. Throws when
 * either class is absent.
 */
[[nodiscard]] Dataset filter_first_two_classes(const Dataset &dataset);

struct PcaModel {
    Eigen::VectorXd mean;             ///< n_features
    Eigen::MatrixXd components;       ///< k x n_features, orthonormal rows
    Eigen::VectorXd explained_variance; ///< k, non-increasing

    [[nodiscard]] std::size_t input_width() const {
        return static_cast<std::size_t>(mean.size());
    }
    [[nodiscard]] std::size_t output_width() const {
        return static_cast<std::size_t>(components.rows());
    }
};

/**
 * Top-k principal axes of the sample covariance (divisor n - 1). Each
 * component is sign-normalised so its largest-magnitude entry is
 * positive (first such entry on ties).
 */
[[nodiscard]] PcaModel pca_fit(const FeatureMatrix &features, std::size_t k);
/// (x - mean) * components^T
[[nodiscard]] FeatureMatrix pca_transform(const PcaModel &model,
                                            const FeatureMatrix &features);

struct ScalerModel {
    Eigen::VectorXd min;
    Eigen::VectorXd max;
};

/// Per-feature min/max over the training rows. Constant columns are
/// reported on stderr; they map to pi/2.
[[nodiscard]] ScalerModel scale_fit(const FeatureMatrix &train);
/// pi * (x - min) / (max - min), clamped into [0, pi].
[[nodiscard]] FeatureMatrix scale_apply(const ScalerModel &model,
                                          const FeatureMatrix &features);
/// Indices of columns with max == min.
[[nodiscard]] std::vector<std::size_t>
constant_columns(const ScalerModel &model);

/// Fitted preprocessing chain: PCA to k features then scaling to [0, pi].
struct Preprocessor {
    PcaModel pca;
    ScalerModel scaler;

    [[nodiscard]] static Preprocessor fit(const Dataset &train, std::size_t k);
    [[nodiscard]] Dataset apply(const Dataset &dataset) const;
};

enum class FitnessMode { ErrorRate, CrossEntropy };

[[nodiscard]] std::string_view fitness_mode_name(FitnessMode mode);
[[nodiscard]] FitnessMode parse_fitness_mode(std::string_view name);

/**
 * Swarm objective over a preprocessed split: decode the position, run
 * every sample, and return 1 - accuracy (ErrorRate) or the mean clipped
 * binary cross-entropy (CrossEntropy). Encoded input states are cached
 * once; the returned function is pure and safe to call concurrently.
 */
[[nodiscard]] FitnessFunction make_fitness(const Dataset &train,
                                           std::size_t n_qubits,
                                           FitnessMode mode =
                                               FitnessMode::ErrorRate);

/**
 * Two isotropic Gaussian blobs, unit variance in every direction, whose
 * means are +-separation/2 along a random unit direction. Labels
 * alternate so classes are balanced.
 */
[[nodiscard]] Dataset make_two_gaussians(std::size_t n_samples,
                                         std::size_t n_features,
                                         double separation,
                                         std::uint64_t seed,
                                         std::uint64_t direction_seed,
                                         Split split = Split::Train);

} // namespace swarmvqc
