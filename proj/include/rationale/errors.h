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

#ifndef RATIONALE_ERRORS_H_
#define RATIONALE_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rationale {

enum class ErrorCode {
  kEmptyPropositionList,
  kEmptyText,
  kDuplicateId,
  kMissingPredictionRole,
  kDuplicatePredictionRole,
  kNoInputSourcedProposition,
  kDanglingEdge,
  kDuplicateEdge,
  kConflictingEdge,
  kNoArgumentForPrediction,
  kInvalidArgument,
  kOutOfRangeConfidence,
  kWrongFormat,
  kMalformedJson,
  kSchemaViolation,
  kIoError,
  kConfigError,
  kRemoteUnavailable,
  kMalformedResponse,
  kCyclicFramework,
  kTooLarge,
  kInapplicableDefect,
};

// Stable CamelCase name, e.g. "DanglingEdge".
std::string_view ErrorCodeName(ErrorCode code);

// One problem found while parsing or validating a document. `path` is a JSON
// pointer into the document ("" for document-level problems).
struct Violation {
  ErrorCode code;
  std::string path;
  std::string message;

  std::string ToString() const;
  bool operator==(const Violation&) const = default;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Carries every violation found, not just the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

}  // namespace rationale

#endif  // RATIONALE_ERRORS_H_
