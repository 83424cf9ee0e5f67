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

#ifndef CAGELIFT_ERROR_H_
#define CAGELIFT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cagelift {

enum class ErrorCode {
  kInvalidArgument,
  kParseError,
  // Voltage graph construction.
  kDuplicateName,
  kUnknownEndpoint,
  kPinnedToPinnedArc,
  kNonzeroVoltageAtPinned,
  kLiftCollision,
  // Identification.
  kNotCubic,
  kWrongGirth,
  kNoRemotePair,
  kBadM,
  // Certification.
  kRangeTooSmall,
  // Search.
  kBudgetExceeded,
  // graph6.
  kMalformedHeader,
  kTruncatedBits,
  kNonPrintableChar,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this type; `code()` identifies
// the failure class and `what()` carries a one-line diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by `Lift` when two arcs induce the same undirected edge or an arc
// induces a self-loop at the requested modulus.
class LiftCollisionError : public Error {
 public:
  LiftCollisionError(const std::string& message, std::vector<int> arcs);

  // Indices of the offending arcs (one entry for a self-loop).
  const std::vector<int>& arcs() const { return arcs_; }

 private:
  std::vector<int> arcs_;
};

}  // namespace cagelift

#endif  // CAGELIFT_ERROR_H_
