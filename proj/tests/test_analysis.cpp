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

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "swarmvqc/analysis.hpp"
#include "swarmvqc/error.hpp"
#include "swarmvqc/statevector.hpp"

using namespace swarmvqc;

TEST_CASE("isolated qubit is pruned", "[prune]") {
    const Circuit c(8, {Gate::rotation(GateKind::RZ, 7, 0.3),
                        Gate::rotation(GateKind::RY, 0, 0.4)});
    const auto r = prune_dead_gates(c, 0);
    CHECK(r.removed_gates == std::vector<std::size_t>{0});
    CHECK(r.pruned_count == 1);
    CHECK(r.kept_circuit.gates()[0] == c.gates()[1]);
}

TEST_CASE("cnot touching the readout keeps everything", "[prune]") {
    const Circuit c(8, {Gate::cnot(0, 1), Gate::rotation(GateKind::RY, 0, 0.4)});
    CHECK(prune_dead_gates(c, 0).removed_gates.empty());
}

TEST_CASE("light cone grows backwards through CNOTs", "[prune]") {
    // RX q2 feeds CNOT(2,1), which feeds CNOT(1,0): all live.
    // RZ q3 after the last interaction with q0's cone is dead.
    const Circuit c(4, {Gate::rotation(GateKind::RX, 2, 0.1), Gate::cnot(2, 1),
                        Gate::cnot(1, 0), Gate::rotation(GateKind::RZ, 2, 0.5),
                        Gate::rotation(GateKind::RZ, 3, 0.2)});
    const auto r = prune_dead_gates(c, 0);
    CHECK(r.removed_gates == std::vector<std::size_t>{3, 4});
}

TEST_CASE("effective gate counts", "[prune]") {
    CHECK(effective_gate_count(Circuit(8), 0) == 0);
    CHECK(effective_gate_count(Circuit(8, {Gate::rotation(GateKind::RX, 0, 1.0)}), 0) == 1);
    CHECK_THROWS_AS(prune_dead_gates(Circuit(2), 2), InvalidArgument);
}

TEST_CASE("report text", "[prune]") {
    const Circuit c(8, {Gate::rotation(GateKind::RZ, 7, 0.3),
                        Gate::rotation(GateKind::RY, 0, 0.4),
                        Gate::rotation(GateKind::RY, 5, 0.4)});
    CHECK(format_prune_report(prune_dead_gates(c, 0)) ==
          "original gates: 3\neffective gates: 1\nremoved: 0 2\n");
    CHECK(format_prune_report(prune_dead_gates(Circuit(1), 0)) ==
          "original gates: 0\neffective gates: 0\nremoved: none\n");
}

TEST_CASE("pruning preserves the readout expectation", "[prune][property][oracle]") {
    std::mt19937 rng(404);
    std::uniform_real_distribution<double> u(0.0, std::numbers::pi);
    std::uniform_int_distribution<std::size_t> len(0, 20);
    for (int t = 0; t < 30; ++t) {
        const auto c = oracle::random_circuit(rng, 8, len(rng));
        const auto r = prune_dead_gates(c, 0);
        CHECK(r.pruned_count <= r.original_count);
        CHECK(r.pruned_count + r.removed_gates.size() == r.original_count);
        CHECK(prune_dead_gates(r.kept_circuit, 0).kept_circuit == r.kept_circuit);
        for (int s = 0; s < 5; ++s) {
            std::vector<double> f(8);
            for (auto &v : f) v = u(rng);
            const double before = run_and_classify(c, f).expectation;
            const double after = run_and_classify(r.kept_circuit, f).expectation;
            CHECK(std::abs(before - after) <= 1e-10);
        }
    }
    // small registers against the dense oracle directly
    for (int t = 0; t < 20; ++t) {
        const auto c = oracle::random_circuit(rng, 3, 10);
        const auto r = prune_dead_gates(c, 0);
        std::vector<double> f{u(rng), u(rng), u(rng)};
        CHECK(std::abs(oracle::classify_expectation(c, f) -
                       oracle::classify_expectation(r.kept_circuit, f)) <= 1e-10);
    }
}
