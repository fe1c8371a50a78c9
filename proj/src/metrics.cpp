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

#include "swarmvqc/metrics.hpp"

#include <cstdio>

#include "swarmvqc/error.hpp"

namespace swarmvqc {

namespace {

void check_lengths(std::span<const int> predictions,
                   std::span<const int> labels) {
    if (predictions.size() != labels.size()) {
        throw InvalidArgument("prediction/label length mismatch: " +
                              std::to_string(predictions.size()) + " vs " +
                              std::to_string(labels.size()));
    }
}

double ratio(std::size_t num, std::size_t den) {
    return den == 0 ? 0.0
                    : static_cast<double>(num) / static_cast<double>(den);
}

} // namespace

ConfusionCounts confusion(std::span<const int> predictions,
                          std::span<const int> labels, int positive) {
    check_lengths(predictions, labels);
    ConfusionCounts c;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if ((labels[i] != 0 && labels[i] != 1) ||
            (predictions[i] != 0 && predictions[i] != 1)) {
            throw InvalidArgument("binary metrics need 0/1 labels");
        }
        const bool pred_pos = predictions[i] == positive;
        const bool true_pos = labels[i] == positive;
        if (pred_pos && true_pos) {
            ++c.tp;
        } else if (pred_pos) {
            ++c.fp;
        } else if (true_pos) {
            ++c.fn;
        } else {
            ++c.tn;
        }
    }
    return c;
}

double accuracy(std::span<const int> predictions,
                std::span<const int> labels) {
    check_lengths(predictions, labels);
    if (labels.empty()) {
        throw InvalidArgument("accuracy of an empty set");
    }
    std::size_t hits = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        hits += predictions[i] == labels[i] ? 1 : 0;
    }
    return ratio(hits, labels.size());
}

ClassMetrics class_metrics(const ConfusionCounts &counts, int label) {
    ClassMetrics m;
    m.label = label;
    m.precision = ratio(counts.tp, counts.tp + counts.fp);
    m.recall = ratio(counts.tp, counts.tp + counts.fn);
    const double sum = m.precision + m.recall;
    m.f1 = sum > 0.0 ? 2.0 * m.precision * m.recall / sum : 0.0;
    return m;
}

std::array<ClassMetrics, 2> class_report(std::span<const int> predictions,
                                         std::span<const int> labels) {
    return {class_metrics(confusion(predictions, labels, 0), 0),
            class_metrics(confusion(predictions, labels, 1), 1)};
}

std::string format_percent(double fraction) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.1f%%", 100.0 * fraction);
    return buffer;
}

std::string render_results_table(const ResultsTable &table) {
    std::string out = "| Dataset |";
    std::string rule = "|---|";
    for (const auto &m : table.methods) {
        out += ' ' + m + " |";
        rule += "---|";
    }
    out += '\n' + rule + '\n';
    for (const auto &row : table.rows) {
        if (row.values.size() != table.methods.size()) {
            throw InvalidArgument("row '" + row.dataset + "' has " +
                                  std::to_string(row.values.size()) +
                                  " cells for " +
                                  std::to_string(table.methods.size()) +
                                  " methods");
        }
        out += "| " + row.dataset + " |";
        for (const auto &v : row.values) {
            out += ' ' + (v ? format_percent(*v) : std::string("-")) + " |";
        }
        out += '\n';
    }
    return out;
}

} // namespace swarmvqc
