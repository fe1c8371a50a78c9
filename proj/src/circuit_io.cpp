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

#include "swarmvqc/circuit_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "swarmvqc/error.hpp"
#include "swarmvqc/text_util.hpp"

namespace swarmvqc {

namespace {

std::optional<GateKind> parse_kind(std::string_view token) {
    if (token == "RX") {
        return GateKind::RX;
    }
    if (token == "RY") {
        return GateKind::RY;
    }
    if (token == "RZ") {
        return GateKind::RZ;
    }
    if (token == "CNOT") {
        return GateKind::CNOT;
    }
    return std::nullopt;
}

std::size_t parse_qubit(std::string_view token, std::size_t n_qubits,
                        std::size_t line) {
    const auto index = parse_unsigned(token);
    if (!index) {
        throw ParseError(line, "bad qubit index '" + std::string(token) + "'");
    }
    if (*index >= n_qubits) {
        throw ParseError(line, "qubit index " + std::to_string(*index) +
                                   " out of range for " +
                                   std::to_string(n_qubits) + " qubits");
    }
    return *index;
}

} // namespace

std::string circuit_to_text(const Circuit &circuit) {
    std::ostringstream out;
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    out << "qubits " << circuit.n_qubits() << '\n';
    for (const auto &g : circuit.gates()) {
        out << gate_name(g.kind()) << ' ';
        if (g.is_rotation()) {
            out << g.target() << ' ' << g.angle() << '\n';
        } else {
            out << g.control() << ' ' << g.target() << '\n';
        }
    }
    return out.str();
}

Circuit text_to_circuit(std::string_view text) {
    std::optional<Circuit> circuit;
    std::size_t line_no = 0;
    for (const auto raw : split_lines(text)) {
        ++line_no;
        const auto tokens = split_whitespace(strip_comment(raw));
        if (tokens.empty()) {
            continue;
        }
        if (!circuit) {
            if (tokens.size() != 2 || tokens[0] != "qubits") {
                throw ParseError(line_no, "expected 'qubits <n>' header");
            }
            const auto n = parse_unsigned(tokens[1]);
            if (!n || *n == 0) {
                throw ParseError(line_no, "qubit count must be a positive "
                                          "integer");
            }
            circuit.emplace(*n);
            continue;
        }
        const auto kind = parse_kind(tokens[0]);
        if (!kind) {
            throw ParseError(line_no,
                             "unknown gate '" + std::string(tokens[0]) + "'");
        }
        if (tokens.size() != 3) {
            throw ParseError(line_no, "expected 2 operands after " +
                                          std::string(tokens[0]));
        }
        const std::size_t n = circuit->n_qubits();
        if (*kind == GateKind::CNOT) {
            const auto control = parse_qubit(tokens[1], n, line_no);
            const auto target = parse_qubit(tokens[2], n, line_no);
            if (control == target) {
                throw ParseError(line_no, "CNOT control equals target");
            }
            circuit->append(Gate::cnot(control, target));
        } else {
            const auto target = parse_qubit(tokens[1], n, line_no);
            const auto angle = parse_double(tokens[2]);
            if (!angle || !std::isfinite(*angle)) {
                throw ParseError(line_no, "bad angle '" +
                                              std::string(tokens[2]) + "'");
            }
            circuit->append(Gate::rotation(*kind, target, *angle));
        }
    }
    if (!circuit) {
        throw ParseError(0, "missing 'qubits <n>' header");
    }
    return std::move(*circuit);
}

std::string circuit_to_qasm(const Circuit &circuit) {
    std::ostringstream out;
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << circuit.n_qubits() << "];\n";
    for (const auto &g : circuit.gates()) {
        switch (g.kind()) {
        case GateKind::RX:
            out << "rx(" << g.angle() << ") q[" << g.target() << "];\n";
            break;
        case GateKind::RY:
            out << "ry(" << g.angle() << ") q[" << g.target() << "];\n";
            break;
        case GateKind::RZ:
            out << "rz(" << g.angle() << ") q[" << g.target() << "];\n";
            break;
        case GateKind::CNOT:
            out << "cx q[" << g.control() << "],q[" << g.target() << "];\n";
            break;
        }
    }
    return out.str();
}

Circuit read_circuit_file(const std::filesystem::path &path) {
    return text_to_circuit(read_text_file(path));
}

void write_circuit_file(const std::filesystem::path &path,
                        const Circuit &circuit) {
    write_text_file(path, circuit_to_text(circuit));
}

} // namespace swarmvqc
