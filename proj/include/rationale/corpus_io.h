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

#ifndef RATIONALE_CORPUS_IO_H_
#define RATIONALE_CORPUS_IO_H_

// JSON document schema, JSONL corpus streaming and report serialization.
//
// Document layout (keys not listed are rejected):
//   {
//     "id": str, "format": "free_form" | "deductive" | "argumentative",
//     "input": {"claim": str, "evidence": [str]},
//     "prediction": {"label": str, "confidence": num in [0,1], "model_id": str},
//     "propositions": [{"id": str, "text": str,
//                       "source": "claim"|"evidence"|"external"|"prediction",
//                       "evidence_index": int (evidence only),
//                       "role": "prediction" (optional)}],
//     "relations": [{"from": id, "to": id}], "directed": bool   (deductive)
//     "arguments": [{"id": str, "premises": [id], "conclusion": id}],
//     "supports": [{"from", "to", "kind": reasons|accrual|unspecified}],
//     "attacks":  [{"from", "to", "kind": undercut|rebut|unspecified}]
//                                                              (argumentative)
//     "meta": {str: str}
//   }

#include <cstddef>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "rationale/errors.h"
#include "rationale/metrics.h"
#include "rationale/model.h"

namespace rationale {

// Throws ValidationError whose violations carry kMalformedJson or
// kSchemaViolation with JSON-pointer paths.
ExplanationDocument ParseDocument(std::string_view bytes);
ExplanationDocument DocumentFromJson(const nlohmann::json& j);

nlohmann::json DocumentToJson(const ExplanationDocument& doc);
// Canonical single-line form: sorted keys, no insignificant whitespace.
std::string SerializeDocument(const ExplanationDocument& doc);

enum class LoadMode { kLenient, kStrict };

struct LineError {
  std::size_t line;  // 1-based
  std::vector<Violation> violations;
};

// Lazy reader over a JSONL corpus. Blank lines are skipped. In lenient mode
// bad lines come back as LineError; in strict mode the first bad line throws
// ValidationError (message prefixed with the line number).
class CorpusReader {
 public:
  using Item = std::variant<ExplanationDocument, LineError>;

  // Throws Error(kIoError) when the file cannot be opened.
  CorpusReader(const std::string& path, LoadMode mode = LoadMode::kLenient);

  std::optional<Item> Next();

 private:
  std::ifstream in_;
  std::string path_;
  LoadMode mode_;
  std::size_t line_ = 0;
};

struct LoadedCorpus {
  std::vector<ExplanationDocument> documents;
  std::vector<LineError> errors;
};

// Reads a whole file: ".jsonl" files line by line, anything else as a single
// JSON document.
LoadedCorpus LoadPath(const std::string& path, LoadMode mode = LoadMode::kLenient);

enum class ReportFormat { kJson, kText };

std::optional<ReportFormat> ParseReportFormat(std::string_view name);

nlohmann::json ReportToJson(const DocumentReport& report);

// Compact JSON with sorted keys and every floating-point number rendered with
// exactly six decimals.
std::string DumpCanonical(const nlohmann::json& j);

// json: {"aggregate": {...}, "reports": [...]}, canonical bytes.
// text: aligned table, one row per document plus a "mean" row.
std::string WriteReport(const std::vector<DocumentReport>& reports,
                        ReportFormat format);

// Per-format corpus summary: metric mean/min/max, property pass rates, flag
// counts and invalid-document counts.
nlohmann::json SummarizeCorpus(const std::vector<DocumentReport>& reports);
std::string WriteSummary(const std::vector<DocumentReport>& reports,
                         ReportFormat format);

}  // namespace rationale

#endif  // RATIONALE_CORPUS_IO_H_
