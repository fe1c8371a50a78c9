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

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "swarmvqc/baseline.hpp"
#include "swarmvqc/error.hpp"
#include "swarmvqc/statevector.hpp"

using namespace swarmvqc;
using Catch::Matchers::WithinAbs;

constexpr double kPi = std::numbers::pi;

namespace {

Dataset make_batch(std::mt19937 &rng, std::size_t rows, std::size_t width) {
    std::uniform_real_distribution<double> u(0.0, kPi);
    Dataset d;
    d.features.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(width));
    for (Eigen::Index i = 0; i < d.features.size(); ++i) d.features.data()[i] = u(rng);
    for (std::size_t i = 0; i < rows; ++i) d.labels.push_back(static_cast<int>(i % 2));
    return d;
}

std::vector<double> random_params(std::mt19937 &rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.0, 2 * kPi);
    std::vector<double> p(n);
    for (auto &v : p) v = u(rng);
    return p;
}

// Central differences of the clipped loss.
std::vector<double> finite_difference(const FixedAnsatz &a,
                                      std::vector<double> params,
                                      const Dataset &batch, double h) {
    std::vector<double> g(params.size());
    for (std::size_t k = 0; k < params.size(); ++k) {
        const double keep = params[k];
        params[k] = keep + h;
        const double up = loss(a, params, batch);
        params[k] = keep - h;
        const double down = loss(a, params, batch);
        params[k] = keep;
        g[k] = (up - down) / (2 * h);
    }
    return g;
}

} // namespace

TEST_CASE("ansatz layout", "[ansatz]") {
    const FixedAnsatz a;
    CHECK(a.parameter_count() == 16);
    CHECK(a.gate_count() == 32);
    const auto c = a.build(std::vector<double>(16, 0.0));
    REQUIRE(c.size() == 32);
    for (std::size_t q = 0; q < 8; ++q) {
        CHECK(c.gates()[q].kind() == GateKind::RY);
        CHECK(c.gates()[q].target() == q);
        CHECK(c.gates()[8 + q] == Gate::cnot(q, (q + 1) % 8));
    }
    auto s = init_state(8);
    s.apply(c);
    CHECK(s.amplitudes()[0] == Complex(1, 0));
    CHECK_THROWS_AS(a.build(std::vector<double>(15, 0.0)), InvalidArgument);
}

TEST_CASE("two-qubit one-layer ansatz", "[ansatz]") {
    const FixedAnsatz a{2, 1};
    const auto c = a.build(std::vector<double>{kPi, 0.0});
    REQUIRE(c.size() == 4);
    CHECK(c.gates()[2] == Gate::cnot(0, 1));
    CHECK(c.gates()[3] == Gate::cnot(1, 0));
    // RY(pi) sets q0, CNOT(0,1) sets q1, CNOT(1,0) clears q0 again: the
    // ring ends in q1 = 1, q0 = 0 (index 2), not |11>.
    auto s = init_state(2);
    s.apply(c);
    CHECK_THAT(std::abs(s.amplitudes()[2]), WithinAbs(1.0, 1e-15));
    const auto expected = oracle::matvec(oracle::circuit_unitary(c), oracle::zero_state(2));
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(std::abs(s.amplitudes()[i] - expected[i]) < 1e-14);
}

TEST_CASE("loss values", "[loss]") {
    // On the 2-qubit ring CNOT(1,0) copies q1 onto q0, so <Z0> = cos(params[1])
    // for zero features; params[1] = pi/2 gives p = 0.5.
    const FixedAnsatz a{2, 1};
    Dataset d;
    d.features = FeatureMatrix::Zero(4, 2);
    d.labels = {0, 1, 1, 0};
    CHECK_THAT(loss(a, std::vector<double>{0.0, kPi / 2}, d),
               WithinAbs(std::log(2.0), 1e-12));
    Dataset empty;
    empty.features.resize(0, 2);
    CHECK_THROWS_AS(loss(a, std::vector<double>{0, 0}, empty), InvalidArgument);
}

TEST_CASE("expectation gradient on one qubit pair", "[gradient]") {
    // <Z0> = cos(theta) with theta = params[1] (see above), so the
    // derivative is -sin(theta).
    const FixedAnsatz a{2, 1};
    const std::vector<double> zeros(2, 0.0);
    auto g = expectation_gradient(a, std::vector<double>{0.0, kPi / 2}, zeros);
    CHECK_THAT(g[1], WithinAbs(-1.0, 1e-12));
    g = expectation_gradient(a, std::vector<double>{0.0, 0.0}, zeros);
    CHECK_THAT(g[1], WithinAbs(0.0, 1e-12));
}

TEST_CASE("expectation gradient matches dense-oracle differences",
          "[gradient][oracle]") {
    std::mt19937 rng(8);
    const FixedAnsatz a{3, 2};
    for (int t = 0; t < 5; ++t) {
        const auto p = random_params(rng, a.parameter_count());
        const auto batch = make_batch(rng, 1, 3);
        const std::vector<double> f(batch.row(0).begin(), batch.row(0).end());
        const auto g = expectation_gradient(a, p, f);
        for (std::size_t k = 0; k < p.size(); ++k) {
            auto up = p, down = p;
            up[k] += 1e-5;
            down[k] -= 1e-5;
            const double fd = (oracle::classify_expectation(a.build(up), f) -
                               oracle::classify_expectation(a.build(down), f)) / 2e-5;
            CHECK_THAT(g[k], WithinAbs(fd, 1e-7));
        }
    }
}

TEST_CASE("loss gradient matches central differences", "[gradient]") {
    std::mt19937 rng(21);
    const FixedAnsatz a;
    for (int t = 0; t < 5; ++t) {
        const auto p = random_params(rng, 16);
        const auto batch = make_batch(rng, 3, 8);
        const auto g = parameter_shift_gradient(a, p, batch);
        const auto fd = finite_difference(a, p, batch, 1e-5);
        for (std::size_t k = 0; k < 16; ++k) CHECK_THAT(g[k], WithinAbs(fd[k], 1e-6));
    }
}

TEST_CASE("gradient is zero inside the clip region", "[gradient]") {
    // params[1] = 0 leaves q0 in |0>: p = 0 sits below the clip, loss is flat.
    const FixedAnsatz a{2, 1};
    Dataset d;
    d.features = FeatureMatrix::Zero(1, 2);
    d.labels = {1};
    const auto g = parameter_shift_gradient(a, std::vector<double>{kPi, 0.0}, d);
    CHECK(g[0] == 0.0);
    CHECK(g[1] == 0.0);
}

TEST_CASE("threaded gradient equals serial", "[gradient]") {
    std::mt19937 rng(4);
    const FixedAnsatz a;
    const auto p = random_params(rng, 16);
    const auto batch = make_batch(rng, 9, 8);
    CHECK(parameter_shift_gradient(a, p, batch, 1) ==
          parameter_shift_gradient(a, p, batch, 3));
}

TEST_CASE("adam first step moves by the learning rate", "[adam]") {
    auto s = AdamState::for_size(3, 0.01);
    const std::vector<double> p{1.0, 2.0, 3.0};
    const auto q = adam_step(s, p, std::vector<double>{0.5, 0.5, 0.5});
    for (std::size_t i = 0; i < 3; ++i) CHECK_THAT(p[i] - q[i], WithinAbs(0.01, 1e-9));
}

TEST_CASE("adam zero gradient", "[adam]") {
    auto s = AdamState::for_size(2, 0.01);
    const std::vector<double> p{0.3, -0.7};
    CHECK(adam_step(s, p, std::vector<double>{0, 0}) == p);
    CHECK(s.first_moment == std::vector<double>{0, 0});

    // after one real step, a zero gradient only decays the moments
    auto r = AdamState::for_size(1, 0.01);
    (void)adam_step(r, std::vector<double>{0.0}, std::vector<double>{1.0});
    const double m = r.first_moment[0], v = r.second_moment[0];
    (void)adam_step(r, std::vector<double>{0.0}, std::vector<double>{0.0});
    CHECK_THAT(r.first_moment[0], WithinAbs(0.9 * m, 1e-15));
    CHECK_THAT(r.second_moment[0], WithinAbs(0.999 * v, 1e-15));
}

TEST_CASE("adam two steps against the hand recurrence", "[adam]") {
    auto s = AdamState::for_size(1, 0.01);
    std::vector<double> p{0.0};
    const std::vector<double> g{1.0};
    // m1 = 0.1, v1 = 0.001, mhat = vhat = 1; m2 = 0.19, v2 = 0.001999,
    // mhat = vhat = 1 again.
    const auto p1 = adam_step(s, p, g);
    const auto p2 = adam_step(s, p1, g);
    const double step = 0.01 / (1.0 + 1e-8);
    CHECK_THAT(p1[0], WithinAbs(-step, 1e-14));
    CHECK_THAT(p2[0], WithinAbs(-2 * step, 1e-14));
    const double second = p1[0] - p2[0];
    CHECK(second > 0.005);
    CHECK(second < 0.015);
    CHECK_THROWS_AS(adam_step(s, p, std::vector<double>{1, 2}), InvalidArgument);
}

TEST_CASE("training with lr 0 leaves parameters fixed", "[train]") {
    std::mt19937 rng(1);
    const auto train = make_batch(rng, 20, 4);
    const auto val = make_batch(rng, 10, 4);
    TrainConfig cfg;
    cfg.epochs = 3;
    cfg.batch_size = 8;
    cfg.learning_rate = 0.0;
    const auto r = train_baseline(train, val, cfg, FixedAnsatz{4, 2});
    CHECK(r.final_params == r.initial_params);
    REQUIRE(r.history.size() == 3);
    CHECK(r.history[0].train_loss == r.history[2].train_loss);
    CHECK(r.history[0].val_acc == r.history[2].val_acc);
}

TEST_CASE("training is deterministic and improves a learnable task", "[train]") {
    // label 1 iff the first feature exceeds pi/2
    std::mt19937 rng(12);
    auto train = make_batch(rng, 60, 4);
    auto val = make_batch(rng, 30, 4);
    for (auto *d : {&train, &val})
        for (std::size_t i = 0; i < d->size(); ++i)
            d->labels[i] = d->features(static_cast<Eigen::Index>(i), 0) > kPi / 2;
    TrainConfig cfg;
    cfg.epochs = 15;
    cfg.batch_size = 16;
    cfg.learning_rate = 0.05;
    cfg.seed = 5;
    const FixedAnsatz a{4, 2};
    const auto r1 = train_baseline(train, val, cfg, a);
    cfg.threads = 2;
    const auto r2 = train_baseline(train, val, cfg, a);
    CHECK(training_history_to_csv(r1.history) == training_history_to_csv(r2.history));
    CHECK(r1.final_params == r2.final_params);
    CHECK(r1.history.back().train_loss < r1.history.front().train_loss);
    CHECK(r1.history[r1.best_epoch].val_acc >= r1.history.back().val_acc);
    for (const auto &h : r1.history) CHECK(h.val_acc <= r1.history[r1.best_epoch].val_acc);
}

TEST_CASE("small train split falls back to one batch", "[train]") {
    std::mt19937 rng(2);
    const auto train = make_batch(rng, 5, 2);
    const auto val = make_batch(rng, 4, 2);
    TrainConfig cfg;
    cfg.epochs = 2;
    cfg.batch_size = 32;
    const auto r = train_baseline(train, val, cfg, FixedAnsatz{2, 1});
    CHECK(r.history.size() == 2);
    cfg.epochs = 0;
    CHECK_THROWS_AS(train_baseline(train, val, cfg, FixedAnsatz{2, 1}), InvalidArgument);
}

TEST_CASE("history csv", "[train]") {
    const std::vector<EpochRecord> h{{0, 0.5, 0.75, 0.25, 1.0}};
    CHECK(training_history_to_csv(h) ==
          "epoch,train_loss,train_acc,val_loss,val_acc\n0,0.5,0.75,0.25,1\n");
}
