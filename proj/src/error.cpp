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

#include "selfsim/error.hpp"

namespace selfsim {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kRatioOne: return "RatioOne";
    case ErrorCode::kNoCommonBase: return "NoCommonBase";
    case ErrorCode::kExponentFailure: return "ExponentFailure";
    case ErrorCode::kSubdivisionFailure: return "SubdivisionFailure";
    case ErrorCode::kUnknownName: return "UnknownName";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kLevelTooLarge: return "LevelTooLarge";
    case ErrorCode::kPrefixExhausted: return "PrefixExhausted";
    case ErrorCode::kAddressNotOnFrontier: return "AddressNotOnFrontier";
    case ErrorCode::kDepthTooShallow: return "DepthTooShallow";
    case ErrorCode::kWeightMismatch: return "WeightMismatch";
    case ErrorCode::kWindowNotCovered: return "WindowNotCovered";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kTooFewTiles: return "TooFewTiles";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace selfsim
