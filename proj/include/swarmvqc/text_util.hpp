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

// Small string and file helpers shared by the text formats.
#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace swarmvqc {

/// Splits on '\n'; a trailing '\r' is dropped from each line.
[[nodiscard]] std::vector<std::string_view> split_lines(std::string_view text);
[[nodiscard]] std::vector<std::string_view>
split_whitespace(std::string_view text);
[[nodiscard]] std::vector<std::string_view> split_on(std::string_view text,
                                                     char delimiter);
[[nodiscard]] std::string_view trim(std::string_view text);
/// Drops everything from the first '#'.
[[nodiscard]] std::string_view strip_comment(std::string_view text);

/// Whole-token parses; nullopt on trailing garbage or empty input.
[[nodiscard]] std::optional<std::size_t> parse_unsigned(std::string_view token);
[[nodiscard]] std::optional<long long> parse_integer(std::string_view token);
[[nodiscard]] std::optional<double> parse_double(std::string_view token);

/// Shortest decimal text that reads back to the same double.
[[nodiscard]] std::string format_double(double value);

[[nodiscard]] std::string read_text_file(const std::filesystem::path &path);
/// Writes through a temporary file and renames it into place.
void write_text_file(const std::filesystem::path &path, std::string_view text);

} // namespace swarmvqc
