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

#include "swarmvqc/analysis.hpp"

#include <algorithm>

#include "swarmvqc/error.hpp"

namespace swarmvqc {

PruneReport prune_dead_gates(const Circuit &circuit,
                             std::size_t readout_qubit) {
    if (readout_qubit >= circuit.n_qubits()) {
        throw InvalidArgument("readout qubit " + std::to_string(readout_qubit) +
                              " out of range for " +
                              std::to_string(circuit.n_qubits()) + " qubits");
    }
    const auto &gates = circuit.gates();
    std::vector<bool> live(circuit.n_qubits(), false);
    live[readout_qubit] = true;
    std::vector<bool> keep(gates.size(), false);

    for (std::size_t i = gates.size(); i-- > 0;) {
        const Gate &g = gates[i];
        if (g.is_rotation()) {
            keep[i] = live[g.target()];
        } else if (live[g.target()] || live[g.control()]) {
            keep[i] = true;
            live[g.target()] = true;
            live[g.control()] = true;
        }
    }

    PruneReport report;
    report.original_count = gates.size();
    report.kept_circuit = Circuit(circuit.n_qubits());
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (keep[i]) {
            report.kept_circuit.append(gates[i]);
        } else {
            report.removed_gates.push_back(i);
        }
    }
    report.pruned_count = report.kept_circuit.size();
    return report;
}

std::size_t effective_gate_count(const Circuit &circuit,
                                 std::size_t readout_qubit) {
    return prune_dead_gates(circuit, readout_qubit).pruned_count;
}

std::string format_prune_report(const PruneReport &report) {
    std::string out = "original gates: " + std::to_string(report.original_count) +
                      "\neffective gates: " +
                      std::to_string(report.pruned_count) + "\nremoved:";
    if (report.removed_gates.empty()) {
        out += " none";
    }
    for (const auto i : report.removed_gates) {
        out += ' ' + std::to_string(i);
    }
    out += '\n';
    return out;
}

} // namespace swarmvqc
