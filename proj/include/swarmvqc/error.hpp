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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swarmvqc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Bad argument or violated precondition.
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// Malformed text input. `line()` is 1-based; 0 means "whole input".
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string &what)
        : Error(line == 0 ? what
                          : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    [[nodiscard]] std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

} // namespace swarmvqc
