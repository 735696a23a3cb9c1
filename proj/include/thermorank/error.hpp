// Copyright 2026 The thermorank Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thermorank {

/// Failure categories shared by the C++ core and the C API. The numeric
/// values are part of the C ABI (see thermorank.h) and must not be reordered.
enum class ErrorCode : int {
  kOk = 0,
  kDivisionByZero = 1,
  kUnknownLabel = 2,
  kAllZeroColumn = 3,
  kZeroReferenceMean = 4,
  kValidation = 5,
  kParse = 6,
  kUnknownFixture = 7,
  kBadEdit = 8,
  kMissingReference = 9,
  kShapeMismatch = 10,
  kInvalidArgument = 11,
  kInternal = 12,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures carry a 1-based source position; line 0 means "unknown".
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorCode::kParse, format(message, line, column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    if (line == 0) return message;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace thermorank
