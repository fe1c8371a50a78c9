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
 * Binary classification metrics and result tables.
 *
 * Undefined ratios (precision with no positive predictions, recall with
 * no positive labels, F1 with P + R = 0) are reported as 0, not NaN, so
 * a predictor that never emits a class scores 0/0/0 on it.
 */
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace swarmvqc {

struct ConfusionCounts {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t tn = 0;
    std::size_t fn = 0;

    [[nodiscard]] std::size_t total() const { return tp + fp + tn + fn; }
};

/// Counts with `positive` as the positive class. Labels must be 0/1.
[[nodiscard]] ConfusionCounts confusion(std::span<const int> predictions,
                                        std::span<const int> labels,
                                        int positive = 1);

[[nodiscard]] double accuracy(std::span<const int> predictions,
                              std::span<const int> labels);

struct ClassMetrics {
    int label = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

[[nodiscard]] ClassMetrics class_metrics(const ConfusionCounts &counts,
                                         int label);

/// Precision, recall and F1 for class 0 and class 1, in that order.
[[nodiscard]] std::array<ClassMetrics, 2>
class_report(std::span<const int> predictions, std::span<const int> labels);

/// Datasets as rows, methods as columns, cells as fractions in [0, 1].
struct ResultsTable {
    struct Row {
        std::string dataset;
        std::vector<std::optional<double>> values;
    };
    std::vector<std::string> methods;
    std::vector<Row> rows;
};

/**
 * Markdown table, percentages to one decimal (0.745 -> "74.5%"), missing
 * cells as "-". Throws on a row whose width differs from the header.
 */
[[nodiscard]] std::string render_results_table(const ResultsTable &table);

[[nodiscard]] std::string format_percent(double fraction);

} // namespace swarmvqc
