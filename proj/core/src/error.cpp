// Copyright 2026 The coprimality Authors
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

#include "coprimality/error.hpp"

namespace coprimality {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedInput: return "malformed-input";
    case ErrorCode::kVertexOutOfRange: return "vertex-out-of-range";
    case ErrorCode::kDuplicateEdge: return "duplicate-edge";
    case ErrorCode::kTooFewVertices: return "too-few-vertices";
    case ErrorCode::kOutOfRange: return "out-of-range";
    case ErrorCode::kGuardExceeded: return "guard-exceeded";
    case ErrorCode::kNotACover: return "not-a-cover";
    case ErrorCode::kInvalidRestriction: return "invalid-restriction";
    case ErrorCode::kTailPrecondition: return "tail-precondition";
    case ErrorCode::kNonPositiveFactor: return "non-positive-factor";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace coprimality
