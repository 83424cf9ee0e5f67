// Copyright 2026 The Cagelift Authors
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

#include "cagelift/error.h"

#include <utility>

namespace cagelift {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kDuplicateName:
      return "DuplicateName";
    case ErrorCode::kUnknownEndpoint:
      return "UnknownEndpoint";
    case ErrorCode::kPinnedToPinnedArc:
      return "PinnedToPinnedArc";
    case ErrorCode::kNonzeroVoltageAtPinned:
      return "NonzeroVoltageAtPinned";
    case ErrorCode::kLiftCollision:
      return "LiftCollision";
    case ErrorCode::kNotCubic:
      return "NotCubic";
    case ErrorCode::kWrongGirth:
      return "WrongGirth";
    case ErrorCode::kNoRemotePair:
      return "NoRemotePair";
    case ErrorCode::kBadM:
      return "BadM";
    case ErrorCode::kRangeTooSmall:
      return "RangeTooSmall";
    case ErrorCode::kBudgetExceeded:
      return "BudgetExceeded";
    case ErrorCode::kMalformedHeader:
      return "MalformedHeader";
    case ErrorCode::kTruncatedBits:
      return "TruncatedBits";
    case ErrorCode::kNonPrintableChar:
      return "NonPrintableChar";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

LiftCollisionError::LiftCollisionError(const std::string& message,
                                       std::vector<int> arcs)
    : Error(ErrorCode::kLiftCollision, message), arcs_(std::move(arcs)) {}

}  // namespace cagelift
