// Copyright 2026 The selfsim Authors
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

#ifndef SELFSIM_ERROR_HPP_
#define SELFSIM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace selfsim {

enum class ErrorCode {
  kInvalidArgument,
  kDegenerateInput,
  kRatioOne,
  kNoCommonBase,
  kExponentFailure,
  kSubdivisionFailure,
  kUnknownName,
  kBadParams,
  kLevelTooLarge,
  kPrefixExhausted,
  kAddressNotOnFrontier,
  kDepthTooShallow,
  kWeightMismatch,
  kWindowNotCovered,
  kNoConvergence,
  kTooFewTiles,
  kParse,
};

// Stable name used in CLI output and JSON ("NoCommonBase", ...).
const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code),
        cause_(code) {}
  Error(ErrorCode code, ErrorCode cause, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + " (" +
                           ErrorCodeName(cause) + "): " + message),
        code_(code),
        cause_(cause) {}

  ErrorCode code() const { return code_; }
  // Underlying reason when an error wraps another one; equals code()
  // otherwise.
  ErrorCode cause() const { return cause_; }

 private:
  ErrorCode code_;
  ErrorCode cause_;
};

}  // namespace selfsim

#endif  // SELFSIM_ERROR_HPP_
