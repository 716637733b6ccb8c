/*
 * Copyright 2026 The Rationale Eval Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "rationale/errors.h"

#include <sstream>

namespace rationale {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyPropositionList: return "EmptyPropositionList";
    case ErrorCode::kEmptyText: return "EmptyText";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kMissingPredictionRole: return "MissingPredictionRole";
    case ErrorCode::kDuplicatePredictionRole: return "DuplicatePredictionRole";
    case ErrorCode::kNoInputSourcedProposition: return "NoInputSourcedProposition";
    case ErrorCode::kDanglingEdge: return "DanglingEdge";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kConflictingEdge: return "ConflictingEdge";
    case ErrorCode::kNoArgumentForPrediction: return "NoArgumentForPrediction";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kOutOfRangeConfidence: return "OutOfRangeConfidence";
    case ErrorCode::kWrongFormat: return "WrongFormat";
    case ErrorCode::kMalformedJson: return "MalformedJson";
    case ErrorCode::kSchemaViolation: return "SchemaViolation";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kRemoteUnavailable: return "RemoteUnavailable";
    case ErrorCode::kMalformedResponse: return "MalformedResponse";
    case ErrorCode::kCyclicFramework: return "CyclicFramework";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInapplicableDefect: return "InapplicableDefect";
  }
  return "Unknown";
}

std::string Violation::ToString() const {
  std::string out(ErrorCodeName(code));
  if (!path.empty()) out += " at " + path;
  if (!message.empty()) out += ": " + message;
  return out;
}

namespace {

std::string Summarize(const std::vector<Violation>& violations) {
  if (violations.empty()) return "validation failed";
  std::ostringstream out;
  out << violations.front().ToString();
  if (violations.size() > 1) {
    out << " (+" << violations.size() - 1 << " more)";
  }
  return out.str();
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(violations.empty() ? ErrorCode::kSchemaViolation
                               : violations.front().code,
            Summarize(violations)),
      violations_(std::move(violations)) {}

}  // namespace rationale
