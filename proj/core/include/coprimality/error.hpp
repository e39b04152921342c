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

#ifndef COPRIMALITY_ERROR_HPP_
#define COPRIMALITY_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace coprimality {

enum class ErrorCode {
  kMalformedInput,
  kVertexOutOfRange,
  kDuplicateEdge,
  kTooFewVertices,
  kOutOfRange,
  kGuardExceeded,
  kNotACover,
  kInvalidRestriction,
  kTailPrecondition,
  kNonPositiveFactor,
  kIo,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; `code()` lets
// callers (and the CLI) distinguish caller mistakes from guard trips.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coprimality

#endif  // COPRIMALITY_ERROR_HPP_
