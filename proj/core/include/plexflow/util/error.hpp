// Copyright 2026 The Plexflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PLEXFLOW_UTIL_ERROR_HPP_
#define PLEXFLOW_UTIL_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plexflow {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (N-Triples, Turtle, SPARQL, CSV). Line and column are
// 1-based; zero means "not known".
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)),
        detail_(message),
        line_(line),
        column_(column) {}

  const std::string& detail() const noexcept { return detail_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    if (line == 0) return message;
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + message;
  }

  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

// Input that is well-formed but uses a construct outside the supported subset.
class UnsupportedError : public ParseError {
 public:
  UnsupportedError(const std::string& construct, std::size_t line,
                   std::size_t column)
      : ParseError("unsupported construct: " + construct, line, column),
        construct_(construct) {}

  const std::string& construct() const noexcept { return construct_; }

 private:
  std::string construct_;
};

}  // namespace plexflow

#endif  // PLEXFLOW_UTIL_ERROR_HPP_
