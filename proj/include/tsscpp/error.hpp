// Copyright 2026 The TSSCPP Dimers Authors.
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

#ifndef TSSCPP_ERROR_HPP_
#define TSSCPP_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace tsscpp {

enum class ErrorCode {
  kInvalidParameter,
  kUnknownVertex,
  kResourceLimit,
  kInvalidShape,
  kSingularMatrix,
  kSingularParameter,
  kIoError,
  kInternal,
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParameter:
      return "invalid-parameter";
    case ErrorCode::kUnknownVertex:
      return "unknown-vertex";
    case ErrorCode::kResourceLimit:
      return "resource-limit";
    case ErrorCode::kInvalidShape:
      return "invalid-shape";
    case ErrorCode::kSingularMatrix:
      return "singular-matrix";
    case ErrorCode::kSingularParameter:
      return "singular-parameter";
    case ErrorCode::kIoError:
      return "io-error";
    case ErrorCode::kInternal:
      return "internal-error";
  }
  return "unknown";
}

// All library failures are reported through this exception type; `code()`
// identifies the failure class independently of the message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tsscpp

#endif  // TSSCPP_ERROR_HPP_
