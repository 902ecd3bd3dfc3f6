// Copyright 2026 The Authors.
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

#include <stdexcept>
#include <string>
#include <string_view>

namespace matroid {

enum class ErrorCode {
  kInversionOfZero,
  kNotPrime,
  kModulusMismatch,
  kAmbientMismatch,
  kShapeMismatch,
  kUnknownElement,
  kInvalidMinorQuery,
  kExhaustiveBoundExceeded,
  kGroundSetMismatch,
  kInvalidRankTable,
  kInvalidSpike,
  kInvalidAlpha,
  kNotDependent,
  kTransversalTooClose,
  kNotApplicable,
  kNotStandardForm,
  kNothingToCertify,
  kMalformed,
};

inline std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInversionOfZero: return "InversionOfZero";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kModulusMismatch: return "ModulusMismatch";
    case ErrorCode::kAmbientMismatch: return "AmbientMismatch";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kUnknownElement: return "UnknownElement";
    case ErrorCode::kInvalidMinorQuery: return "InvalidMinorQuery";
    case ErrorCode::kExhaustiveBoundExceeded: return "ExhaustiveBoundExceeded";
    case ErrorCode::kGroundSetMismatch: return "GroundSetMismatch";
    case ErrorCode::kInvalidRankTable: return "InvalidRankTable";
    case ErrorCode::kInvalidSpike: return "InvalidSpike";
    case ErrorCode::kInvalidAlpha: return "InvalidAlpha";
    case ErrorCode::kNotDependent: return "NotDependent";
    case ErrorCode::kTransversalTooClose: return "TransversalTooClose";
    case ErrorCode::kNotApplicable: return "NotApplicable";
    case ErrorCode::kNotStandardForm: return "NotStandardForm";
    case ErrorCode::kNothingToCertify: return "NothingToCertify";
    case ErrorCode::kMalformed: return "Malformed";
  }
  return "Unknown";
}

// All library failures are reported through this type; `code()` is stable,
// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace matroid
