// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#include "onionpeel/error.hpp"

namespace onionpeel {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kParallelEdge: return "ParallelEdge";
    case ErrorCode::kAsymmetricAdjacency: return "AsymmetricAdjacency";
    case ErrorCode::kEulerViolation: return "EulerViolation";
    case ErrorCode::kNestedComponent: return "NestedComponent";
    case ErrorCode::kBadOuterDart: return "BadOuterDart";
    case ErrorCode::kNotOnFace: return "NotOnFace";
    case ErrorCode::kEdgeExists: return "EdgeExists";
    case ErrorCode::kSameVertex: return "SameVertex";
    case ErrorCode::kNotOnOuterFace: return "NotOnOuterFace";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kUnreachableVertex: return "UnreachableVertex";
    case ErrorCode::kInvalidForest: return "InvalidForest";
    case ErrorCode::kBoundViolated: return "BoundViolated";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kRepairStuck: return "RepairStuck";
    case ErrorCode::kNotADisk: return "NotADisk";
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kDegreeOverflow: return "DegreeOverflow";
    case ErrorCode::kBadParameter: return "BadParameter";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kNotPlanar: return "NotPlanar";
    case ErrorCode::kFaceNotSimple: return "FaceNotSimple";
    case ErrorCode::kInvalidArtifact: return "InvalidArtifact";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace onionpeel
