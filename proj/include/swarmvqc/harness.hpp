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
 * End-to-end experiment runs: configuration, the load -> filter -> PCA
 * -> scale -> train -> evaluate pipeline, and the run directory layout.
 *
 * A run directory holds
 *
 *     manifest.json      format version, resolved config, input digests
 *     preprocess.json    fitted PCA and scaler
 *     circuit.txt        selected circuit (text format)
 *     circuit_final.txt  adam only: final-epoch parameters
 *     history.csv        swarm or training history
 *     metrics.csv        dataset,method,split,accuracy
 *     class_report.csv   dataset,method,class,precision,recall,f1 (test)
 *     prune.txt          light-cone report for the selected circuit
 *
 * Nothing is written outside the run directory, and no file carries a
 * timestamp, so equal configs produce byte-identical artifacts.
 */
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swarmvqc/baseline.hpp"
#include "swarmvqc/circuit.hpp"
#include "swarmvqc/data.hpp"
#include "swarmvqc/metrics.hpp"
#include "swarmvqc/pso.hpp"

namespace swarmvqc {

inline constexpr int kRunFormatVersion = 1;

enum class Method { Pso, Adam };

[[nodiscard]] std::string_view method_name(Method method);
[[nodiscard]] Method parse_method(std::string_view name);

struct ExperimentConfig {
    std::string dataset;
    /// Split files default to <data_dir>/<dataset>_{train,val,test}.csv.
    std::filesystem::path data_dir = ".";
    std::filesystem::path train_path;
    std::filesystem::path val_path;
    std::filesystem::path test_path;

    Method method = Method::Pso;
    std::size_t n_qubits = 8;
    std::size_t pca_k = 8;

    SwarmConfig swarm;
    FitnessMode fitness_mode = FitnessMode::ErrorRate;

    std::size_t epochs = 100;
    std::size_t batch_size = 32;
    double learning_rate = 0.01;

    std::optional<std::size_t> shots;
    std::size_t shot_subset = 100;

    std::uint64_t seed = 0;
    std::filesystem::path out_dir;

    /// Applies one `key = value` setting. Unknown keys throw.
    void set(std::string_view key, std::string_view value);
    /// Field-level checks that need no file access.
    void validate() const;

    [[nodiscard]] std::filesystem::path split_path(Split split) const;
    /// Column label in metrics files: "adam", "pso40", ...
    [[nodiscard]] std::string method_label() const;
    /// Every setting as key/value text, in a fixed order.
    [[nodiscard]] std::vector<std::pair<std::string, std::string>>
    entries() const;
};

/// Parses flat `key = value` lines; `#` comments and blank lines skipped.
[[nodiscard]] std::vector<std::pair<std::string, std::string>>
parse_config_text(std::string_view text);

[[nodiscard]] ExperimentConfig load_config_file(
    const std::filesystem::path &path);

struct MetricRow {
    std::string dataset;
    std::string method;
    std::string split;
    double accuracy = 0.0;
};

struct ClassRow {
    std::string dataset;
    std::string method;
    ClassMetrics metrics;
};

[[nodiscard]] std::string metrics_to_csv(const std::vector<MetricRow> &rows);
[[nodiscard]] std::vector<MetricRow> metrics_from_csv(std::string_view text);
[[nodiscard]] std::string class_rows_to_csv(const std::vector<ClassRow> &rows);

struct Evaluation {
    std::vector<int> predictions;
    double accuracy = 0.0;
    std::array<ClassMetrics, 2> report{};
};

/**
 * Classifies every row of a preprocessed split. With `shots`, each
 * sample's <Z> is estimated from that many measurements drawn from the
 * stream (seed, Shots, sample index); otherwise it is exact.
 */
[[nodiscard]] Evaluation evaluate(const Circuit &circuit, const Dataset &data,
                                  std::optional<std::size_t> shots = {},
                                  std::uint64_t seed = 0);

struct RunSummary {
    std::filesystem::path directory;
    Circuit circuit{1};
    std::vector<MetricRow> metrics;
    std::vector<ClassRow> class_rows;
};

struct RunOptions {
    /// Progress and warnings; null silences them.
    std::ostream *log = nullptr;
    std::size_t threads = 0;
};

[[nodiscard]] RunSummary run_experiment(const ExperimentConfig &config,
                                        const RunOptions &options = {});

/// Preprocessor as JSON with full double precision.
[[nodiscard]] std::string preprocessor_to_json(const Preprocessor &pre);
[[nodiscard]] Preprocessor preprocessor_from_json(std::string_view text);

/// Everything `evaluate` needs to rerun a stored circuit.
struct StoredRun {
    ExperimentConfig config;
    Preprocessor preprocessor;
    Circuit circuit{1};
};

[[nodiscard]] StoredRun load_run(const std::filesystem::path &directory);

/**
 * Loads one split for a stored run: filtered to classes 0/1 and pushed
 * through the stored preprocessing.
 */
[[nodiscard]] Dataset load_split_for_run(const StoredRun &run, Split split,
                                         const std::filesystem::path &override_path = {});

/// Builds a datasets x methods table of `split` accuracies from metrics
/// rows; methods and datasets keep first-seen order.
[[nodiscard]] ResultsTable results_table(const std::vector<MetricRow> &rows,
                                         std::string_view split);

} // namespace swarmvqc
