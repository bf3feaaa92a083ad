// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace onionpeel {

// Values are shared with the C API status codes in onionpeel.h.
enum class ErrorCode : int {
  kParseError = 1,
  kUnknownVertex = 2,
  kSelfLoop = 3,
  kParallelEdge = 4,
  kAsymmetricAdjacency = 5,
  kEulerViolation = 6,
  kNestedComponent = 7,
  kBadOuterDart = 8,
  kNotOnFace = 9,
  kEdgeExists = 10,
  kSameVertex = 11,
  kNotOnOuterFace = 12,
  kDisconnected = 13,
  kUnreachableVertex = 14,
  kInvalidForest = 15,
  kBoundViolated = 16,
  kTooSmall = 17,
  kRepairStuck = 18,
  kNotADisk = 19,
  kNotATree = 20,
  kDegreeOverflow = 21,
  kBadParameter = 22,
  kBudgetExceeded = 23,
  kNotPlanar = 24,
  kFaceNotSimple = 25,
  kInvalidArtifact = 26,
  kInternal = 27,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace onionpeel
