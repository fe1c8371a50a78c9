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
 * Backward light-cone pruning of gates that cannot affect the readout.
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "swarmvqc/circuit.hpp"

namespace swarmvqc {

struct PruneReport {
    std::size_t original_count = 0;
    std::size_t pruned_count = 0;
    /// Indices into the original gate list, ascending.
    std::vector<std::size_t> removed_gates;
    Circuit kept_circuit{1};
};

/**
 * Walks the circuit from the last gate to the first keeping a set of
 * live qubits, initially {readout_qubit}. A rotation survives iff its
 * target is live. A CNOT survives iff it touches a live qubit, and then
 * both its qubits become live. Everything else lies outside the
 * readout's backward light cone and is dropped.
 *
 * Only causally irrelevant gates are removed: zero-angle rotations and
 * mergeable neighbours are left alone.
 */
[[nodiscard]] PruneReport prune_dead_gates(const Circuit &circuit,
                                           std::size_t readout_qubit);

[[nodiscard]] std::size_t effective_gate_count(const Circuit &circuit,
                                               std::size_t readout_qubit);

/// Human-readable summary: original count, effective count, removed indices.
[[nodiscard]] std::string format_prune_report(const PruneReport &report);

} // namespace swarmvqc
