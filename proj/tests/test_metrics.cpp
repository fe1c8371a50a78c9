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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "swarmvqc/error.hpp"
#include "swarmvqc/metrics.hpp"

using namespace swarmvqc;
using Catch::Matchers::WithinAbs;

using V = std::vector<int>;

TEST_CASE("accuracy", "[accuracy]") {
    CHECK_THAT(accuracy(V{1, 1, 0}, V{1, 0, 0}), WithinAbs(2.0 / 3.0, 1e-15));
    CHECK(accuracy(V{0, 1, 1}, V{0, 1, 1}) == 1.0);
    CHECK(accuracy(V{0, 1, 1}, V{1, 0, 0}) == 0.0);
    CHECK_THROWS_AS(accuracy(V{}, V{}), InvalidArgument);
    CHECK_THROWS_AS(accuracy(V{0}, V{0, 1}), InvalidArgument);
}

TEST_CASE("confusion counts", "[confusion]") {
    const auto c = confusion(V{1, 1, 0, 0, 1}, V{1, 0, 0, 1, 1});
    CHECK(c.tp == 2);
    CHECK(c.fp == 1);
    CHECK(c.tn == 1);
    CHECK(c.fn == 1);
    const auto z = confusion(V{1, 1, 0, 0, 1}, V{1, 0, 0, 1, 1}, 0);
    CHECK(z.tp == 1);
    CHECK(z.fn == 1);
    CHECK_THROWS_AS(confusion(V{2}, V{0}), InvalidArgument);
}

TEST_CASE("constant-1 predictor on imbalanced data", "[report]") {
    const V labels{1, 1, 1, 1, 1, 1, 0, 0, 0};
    const V predictions(labels.size(), 1);
    const auto r = class_report(predictions, labels);
    CHECK(r[0].label == 0);
    CHECK(r[0].precision == 0.0);
    CHECK(r[0].recall == 0.0);
    CHECK(r[0].f1 == 0.0);
    CHECK(r[1].recall == 1.0);
    CHECK_THAT(r[1].precision, WithinAbs(6.0 / 9.0, 1e-15));
    CHECK(r[1].recall >= r[1].precision);
}

TEST_CASE("f1 is the harmonic mean", "[report]") {
    // tp = 76 * 97 gives precision 0.76 with fp = 2328, recall 0.97 with fn = 228
    ConfusionCounts c;
    c.tp = 7372;
    c.fp = 2328;
    c.fn = 228;
    const auto m = class_metrics(c, 1);
    CHECK_THAT(m.precision, WithinAbs(0.76, 1e-15));
    CHECK_THAT(m.recall, WithinAbs(0.97, 1e-15));
    CHECK_THAT(m.f1, WithinAbs(2 * 0.76 * 0.97 / 1.73, 1e-12));
    CHECK_THAT(m.f1, WithinAbs(0.85, 0.005));
}

TEST_CASE("perfect predictions", "[report]") {
    const V y{0, 1, 1, 0};
    for (const auto &m : class_report(y, y)) {
        CHECK(m.precision == 1.0);
        CHECK(m.recall == 1.0);
        CHECK(m.f1 == 1.0);
    }
}

TEST_CASE("report ignores sample order", "[report][property]") {
    std::mt19937 rng(6);
    std::bernoulli_distribution coin(0.4);
    for (int t = 0; t < 50; ++t) {
        V p(30), y(30);
        for (auto &v : p) v = coin(rng);
        for (auto &v : y) v = coin(rng);
        const auto before = class_report(p, y);
        std::vector<std::size_t> idx(30);
        for (std::size_t i = 0; i < 30; ++i) idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), rng);
        V p2(30), y2(30);
        for (std::size_t i = 0; i < 30; ++i) {
            p2[i] = p[idx[i]];
            y2[i] = y[idx[i]];
        }
        const auto after = class_report(p2, y2);
        for (int k = 0; k < 2; ++k) {
            CHECK(before[k].precision == after[k].precision);
            CHECK(before[k].recall == after[k].recall);
            CHECK(before[k].f1 == after[k].f1);
            CHECK(before[k].f1 >= 0.0);
            CHECK(before[k].f1 <= 1.0);
        }
    }
}

TEST_CASE("results table", "[table]") {
    CHECK(format_percent(0.745) == "74.5%");
    CHECK(format_percent(1.0) == "100.0%");

    ResultsTable one;
    one.methods = {"pso40"};
    one.rows = {{"mnist", {0.745}}};
    CHECK(render_results_table(one) == "| Dataset | pso40 |\n|---|---|\n| mnist | 74.5% |\n");

    ResultsTable empty;
    empty.methods = {"adam"};
    CHECK(render_results_table(empty) == "| Dataset | adam |\n|---|---|\n");

    ResultsTable grid;
    grid.methods = {"pso40", "adam"};
    grid.rows = {{"a", {0.5, std::nullopt}}, {"b", {0.25, 1.0}}};
    CHECK(render_results_table(grid) ==
          "| Dataset | pso40 | adam |\n|---|---|---|\n| a | 50.0% | - |\n| b | 25.0% | 100.0% |\n");

    grid.rows.push_back({"c", {0.5}});
    CHECK_THROWS_AS(render_results_table(grid), InvalidArgument);
}
