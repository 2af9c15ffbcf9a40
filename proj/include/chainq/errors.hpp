// Copyright 2026 The chainq Authors
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

namespace chainq {

// Malformed or degenerate problem instance (bad edges, too few vertices).
class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A problem exceeds a configured size guard (enumeration, simulation caps).
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// The label tracker met a gate that is not a linear reversible map.
class TrackingUnsupported : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A metric is undefined for the given input (e.g. zero optimum).
class UndefinedMetric : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A baseline table does not cover a requested grid cell.
class CoverageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text input could not be parsed; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace chainq
