// Copyright 2026 The graphent Authors
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

#include "graphent/error.hpp"

namespace graphent {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kAsymmetricMatrix: return "AsymmetricMatrix";
    case ErrorCode::kValueOutOfRange: return "ValueOutOfRange";
    case ErrorCode::kEmptyMatrix: return "EmptyMatrix";
    case ErrorCode::kNonSquareMatrix: return "NonSquareMatrix";
    case ErrorCode::kLoopEdge: return "LoopEdge";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kInvalidMotif: return "InvalidMotif";
    case ErrorCode::kDisconnectedMotif: return "DisconnectedMotif";
    case ErrorCode::kMotifTooLarge: return "MotifTooLarge";
    case ErrorCode::kUnsupportedPower: return "UnsupportedPower";
    case ErrorCode::kEdgeDensityMismatch: return "EdgeDensityMismatch";
    case ErrorCode::kDegenerateFit: return "DegenerateFit";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNoTransitionFound: return "NoTransitionFound";
    case ErrorCode::kSignPatternUnexpected: return "SignPatternUnexpected";
    case ErrorCode::kEmptyTable: return "EmptyTable";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace graphent
