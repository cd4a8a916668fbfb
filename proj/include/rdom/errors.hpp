// Copyright 2026 The rdom Authors
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

#ifndef RDOM_ERRORS_HPP_
#define RDOM_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rdom {

enum class ErrorCode {
  kOutOfRange,
  kSelfLoop,
  kEmptyGraph,
  kLabelMismatch,
  kTooLarge,
  kInvalidEccd,
  kNotMinimum,
  kBadSpec,
  kIncompatibleTorus,
  kParseError,
  kDuplicateVertex,
  kUnknownNeighbor,
  kMixedLabels,
  kInvalidOptions,
};

const char* ErrorCodeName(ErrorCode code);

// Single exception type for every library failure; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse errors carry the 1-based line number of the offending record.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + reason),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace rdom

#endif  // RDOM_ERRORS_HPP_
