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

#ifndef RATIONALE_MODEL_H_
#define RATIONALE_MODEL_H_

// Domain types for inputs, predictions and the three explanation formats.
//
// The raw, schema-level representation is ExplanationDocument. The validated
// forms (FreeFormExplanation, DeductiveExplanation, ArgumentativeExplanation)
// are immutable after construction and store relations as index pairs into
// their proposition/argument tables.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rationale/errors.h"

namespace rationale {

enum class SourceKind { kClaim, kEvidence, kExternal, kPrediction };

struct Source {
  SourceKind kind = SourceKind::kExternal;
  std::size_t evidence_index = 0;  // meaningful for kEvidence only

  bool operator==(const Source&) const = default;
};

struct Proposition {
  std::string id;
  std::string text;
  Source source;
  // Marks the proposition standing for the prediction. An implicit prediction
  // is the claim proposition with this flag set.
  bool prediction_role = false;

  bool IsPrediction() const {
    return prediction_role || source.kind == SourceKind::kPrediction;
  }
  bool IsFromInput() const {
    return source.kind == SourceKind::kClaim ||
           source.kind == SourceKind::kEvidence;
  }
  bool operator==(const Proposition&) const = default;
};

struct InputRecord {
  std::string claim;
  std::vector<std::string> evidence;

  // Claim followed by every evidence passage, joined with ". ".
  std::string JoinedText() const;
  bool operator==(const InputRecord&) const = default;
};

struct Prediction {
  std::string label;
  double confidence = 0.0;
  std::string model_id;

  bool operator==(const Prediction&) const = default;
};

enum class ConfidenceBand { kTop, kHigh, kMedium, kLow };

struct BandThresholds {
  double top = 0.99;
  double high = 0.70;
  double medium = 0.50;

  bool operator==(const BandThresholds&) const = default;
};

// Throws Error(kOutOfRangeConfidence) outside [0, 1].
ConfidenceBand BandOf(double confidence, const BandThresholds& thresholds = {});
std::string_view BandName(ConfidenceBand band);

enum class Format { kFreeForm, kDeductive, kArgumentative };

std::string_view FormatName(Format format);
std::optional<Format> ParseFormat(std::string_view name);

enum class SupportKind { kReasons, kAccrual, kUnspecified };
enum class AttackKind { kUndercut, kRebut, kUnspecified };

std::string_view SupportKindName(SupportKind kind);
std::string_view AttackKindName(AttackKind kind);
std::optional<SupportKind> ParseSupportKind(std::string_view name);
std::optional<AttackKind> ParseAttackKind(std::string_view name);

struct RelationEdge {
  std::string from;
  std::string to;

  auto operator<=>(const RelationEdge&) const = default;
};

struct SupportEdge {
  std::string from;
  std::string to;
  SupportKind kind = SupportKind::kUnspecified;

  bool operator==(const SupportEdge&) const = default;
};

struct AttackEdge {
  std::string from;
  std::string to;
  AttackKind kind = AttackKind::kUnspecified;

  bool operator==(const AttackEdge&) const = default;
};

struct Argument {
  std::string id;
  std::vector<std::string> premises;  // may be empty (enthymeme)
  std::string conclusion;

  bool operator==(const Argument&) const = default;
};

// Schema-level document; see corpus_io.h for the JSON mapping.
struct ExplanationDocument {
  std::string id;
  Format format = Format::kFreeForm;
  InputRecord input;
  Prediction prediction;
  std::vector<Proposition> propositions;
  // deductive
  std::vector<RelationEdge> relations;
  bool directed = true;
  // argumentative
  std::vector<Argument> arguments;
  std::vector<SupportEdge> supports;
  std::vector<AttackEdge> attacks;
  std::map<std::string, std::string> meta;

  bool operator==(const ExplanationDocument&) const = default;
};

// Proposition table with id lookup and the resolved prediction role.
class PropositionTable {
 public:
  PropositionTable() = default;
  explicit PropositionTable(std::vector<Proposition> propositions);

  std::size_t size() const { return propositions_.size(); }
  const Proposition& operator[](std::size_t i) const { return propositions_[i]; }
  const std::vector<Proposition>& all() const { return propositions_; }

  std::optional<std::size_t> IndexOf(std::string_view id) const;
  // Index of the prediction-role proposition, if any.
  std::optional<std::size_t> prediction() const { return prediction_; }

  bool operator==(const PropositionTable& other) const {
    return propositions_ == other.propositions_;
  }

 private:
  std::vector<Proposition> propositions_;
  std::unordered_map<std::string, std::size_t> index_;
  std::optional<std::size_t> prediction_;
};

struct IndexEdge {
  std::size_t from;
  std::size_t to;

  auto operator<=>(const IndexEdge&) const = default;
};

class FreeFormExplanation {
 public:
  explicit FreeFormExplanation(PropositionTable propositions)
      : propositions_(std::move(propositions)) {}

  const PropositionTable& propositions() const { return propositions_; }

  bool operator==(const FreeFormExplanation&) const = default;

 private:
  PropositionTable propositions_;
};

class DeductiveExplanation {
 public:
  DeductiveExplanation(PropositionTable propositions,
                       std::vector<IndexEdge> relation, bool directed)
      : propositions_(std::move(propositions)),
        relation_(std::move(relation)),
        directed_(directed) {}

  const PropositionTable& propositions() const { return propositions_; }
  const std::vector<IndexEdge>& relation() const { return relation_; }
  bool directed() const { return directed_; }

  bool operator==(const DeductiveExplanation&) const = default;

 private:
  PropositionTable propositions_;
  std::vector<IndexEdge> relation_;
  bool directed_;
};

// Argument with premises and conclusion resolved to proposition indices.
struct ResolvedArgument {
  std::string id;
  std::vector<std::size_t> premises;
  std::size_t conclusion;

  bool operator==(const ResolvedArgument&) const = default;
};

struct KindedSupport {
  IndexEdge edge;
  SupportKind kind;
  bool operator==(const KindedSupport&) const = default;
};

struct KindedAttack {
  IndexEdge edge;
  AttackKind kind;
  bool operator==(const KindedAttack&) const = default;
};

class ArgumentativeExplanation {
 public:
  ArgumentativeExplanation(PropositionTable propositions,
                           std::vector<ResolvedArgument> arguments,
                           std::vector<KindedSupport> supports,
                           std::vector<KindedAttack> attacks);

  const PropositionTable& propositions() const { return propositions_; }
  const std::vector<ResolvedArgument>& arguments() const { return arguments_; }
  const std::vector<KindedSupport>& supports() const { return supports_; }
  const std::vector<KindedAttack>& attacks() const { return attacks_; }

  std::optional<std::size_t> ArgumentIndex(std::string_view id) const;
  // Indices of arguments whose conclusion is the prediction-role proposition.
  std::vector<std::size_t> PredictionArguments() const;

  bool operator==(const ArgumentativeExplanation& other) const {
    return propositions_ == other.propositions_ &&
           arguments_ == other.arguments_ && supports_ == other.supports_ &&
           attacks_ == other.attacks_;
  }

 private:
  PropositionTable propositions_;
  std::vector<ResolvedArgument> arguments_;
  std::vector<KindedSupport> supports_;
  std::vector<KindedAttack> attacks_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct ValidationOptions {
  // Enforce the "explanation for a prediction" clauses (prediction role and
  // input-sourced propositions present).
  bool for_prediction = true;
};

// Each validator throws ValidationError listing every violation found.
FreeFormExplanation ValidateFreeForm(const ExplanationDocument& doc,
                                     const ValidationOptions& options = {});
DeductiveExplanation ValidateDeductive(const ExplanationDocument& doc,
                                       const ValidationOptions& options = {});
ArgumentativeExplanation ValidateArgumentative(
    const ExplanationDocument& doc, const ValidationOptions& options = {});

// Dispatches on doc.format and returns the violations (empty when valid).
std::vector<Violation> Validate(const ExplanationDocument& doc,
                                const ValidationOptions& options = {});

// Writes a validated explanation back into `doc`'s format-specific sections,
// keeping id, input, prediction and meta from `doc`.
ExplanationDocument ToDocument(const ExplanationDocument& doc,
                               const FreeFormExplanation& e);
ExplanationDocument ToDocument(const ExplanationDocument& doc,
                               const DeductiveExplanation& e);
ExplanationDocument ToDocument(const ExplanationDocument& doc,
                               const ArgumentativeExplanation& e);

}  // namespace rationale

#endif  // RATIONALE_MODEL_H_
