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
 * Plain-text circuit format:
 *
 *     qubits <n>
 *     RX <target> <angle>
 *     RY <target> <angle>
 *     RZ <target> <angle>
 *     CNOT <control> <target>
 *
 * Angles are decimal radians written with 17 significant digits, so a
 * write/read round trip is exact. `#` starts a comment; blank lines are
 * skipped.
 */
#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "swarmvqc/circuit.hpp"

namespace swarmvqc {

[[nodiscard]] std::string circuit_to_text(const Circuit &circuit);

/// Throws ParseError carrying the 1-based line number of the offending line.
[[nodiscard]] Circuit text_to_circuit(std::string_view text);

/// OpenQASM 2.0 export. There is no import counterpart.
[[nodiscard]] std::string circuit_to_qasm(const Circuit &circuit);

[[nodiscard]] Circuit read_circuit_file(const std::filesystem::path &path);
void write_circuit_file(const std::filesystem::path &path,
                        const Circuit &circuit);

} // namespace swarmvqc
