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

#include "rationale/model.h"

#include <set>
#include <utility>

#include "rationale/errors.h"

namespace rationale {

std::string InputRecord::JoinedText() const {
  std::string out = claim;
  for (const std::string& passage : evidence) {
    out += ". ";
    out += passage;
  }
  return out;
}

ConfidenceBand BandOf(double confidence, const BandThresholds& thresholds) {
  if (!(confidence >= 0.0 && confidence <= 1.0)) {
    throw Error(ErrorCode::kOutOfRangeConfidence,
                "confidence " + std::to_string(confidence) + " outside [0, 1]");
  }
  if (confidence >= thresholds.top) return ConfidenceBand::kTop;
  if (confidence >= thresholds.high) return ConfidenceBand::kHigh;
  if (confidence >= thresholds.medium) return ConfidenceBand::kMedium;
  return ConfidenceBand::kLow;
}

std::string_view BandName(ConfidenceBand band) {
  switch (band) {
    case ConfidenceBand::kTop: return "Top";
    case ConfidenceBand::kHigh: return "High";
    case ConfidenceBand::kMedium: return "Medium";
    case ConfidenceBand::kLow: return "Low";
  }
  return "";
}

std::string_view FormatName(Format format) {
  switch (format) {
    case Format::kFreeForm: return "free_form";
    case Format::kDeductive: return "deductive";
    case Format::kArgumentative: return "argumentative";
  }
  return "";
}

std::optional<Format> ParseFormat(std::string_view name) {
  if (name == "free_form") return Format::kFreeForm;
  if (name == "deductive") return Format::kDeductive;
  if (name == "argumentative") return Format::kArgumentative;
  return std::nullopt;
}

std::string_view SupportKindName(SupportKind kind) {
  switch (kind) {
    case SupportKind::kReasons: return "reasons";
    case SupportKind::kAccrual: return "accrual";
    case SupportKind::kUnspecified: return "unspecified";
  }
  return "";
}

std::string_view AttackKindName(AttackKind kind) {
  switch (kind) {
    case AttackKind::kUndercut: return "undercut";
    case AttackKind::kRebut: return "rebut";
    case AttackKind::kUnspecified: return "unspecified";
  }
  return "";
}

std::optional<SupportKind> ParseSupportKind(std::string_view name) {
  if (name == "reasons") return SupportKind::kReasons;
  if (name == "accrual") return SupportKind::kAccrual;
  if (name == "unspecified") return SupportKind::kUnspecified;
  return std::nullopt;
}

std::optional<AttackKind> ParseAttackKind(std::string_view name) {
  if (name == "undercut") return AttackKind::kUndercut;
  if (name == "rebut") return AttackKind::kRebut;
  if (name == "unspecified") return AttackKind::kUnspecified;
  return std::nullopt;
}

PropositionTable::PropositionTable(std::vector<Proposition> propositions)
    : propositions_(std::move(propositions)) {
  for (std::size_t i = 0; i < propositions_.size(); ++i) {
    index_.emplace(propositions_[i].id, i);
    if (!prediction_ && propositions_[i].IsPrediction()) prediction_ = i;
  }
}

std::optional<std::size_t> PropositionTable::IndexOf(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ArgumentativeExplanation::ArgumentativeExplanation(
    PropositionTable propositions, std::vector<ResolvedArgument> arguments,
    std::vector<KindedSupport> supports, std::vector<KindedAttack> attacks)
    : propositions_(std::move(propositions)),
      arguments_(std::move(arguments)),
      supports_(std::move(supports)),
      attacks_(std::move(attacks)) {
  for (std::size_t i = 0; i < arguments_.size(); ++i) {
    index_.emplace(arguments_[i].id, i);
  }
}

std::optional<std::size_t> ArgumentativeExplanation::ArgumentIndex(
    std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> ArgumentativeExplanation::PredictionArguments() const {
  std::vector<std::size_t> out;
  const auto prediction = propositions_.prediction();
  if (!prediction) return out;
  for (std::size_t i = 0; i < arguments_.size(); ++i) {
    if (arguments_[i].conclusion == *prediction) out.push_back(i);
  }
  return out;
}

namespace {

using Violations = std::vector<Violation>;

std::string At(std::string_view section, std::size_t i) {
  return "/" + std::string(section) + "/" + std::to_string(i);
}

void CheckFormat(const ExplanationDocument& doc, Format expected,
                 Violations& out) {
  if (doc.format != expected) {
    out.push_back({ErrorCode::kWrongFormat, "/format",
                   "expected " + std::string(FormatName(expected)) + ", got " +
                       std::string(FormatName(doc.format))});
  }
}

// Checks shared by all formats; returns the table (possibly partial when
// violations were recorded).
PropositionTable CheckPropositions(const ExplanationDocument& doc,
                                   const ValidationOptions& options,
                                   Violations& out) {
  if (doc.input.claim.empty()) {
    out.push_back({ErrorCode::kEmptyText, "/input/claim", "claim is empty"});
  }
  if (!(doc.prediction.confidence >= 0.0 && doc.prediction.confidence <= 1.0)) {
    out.push_back({ErrorCode::kOutOfRangeConfidence, "/prediction/confidence",
                   "confidence outside [0, 1]"});
  }
  if (doc.propositions.empty()) {
    out.push_back({ErrorCode::kEmptyPropositionList, "/propositions",
                   "explanation has no propositions"});
    return PropositionTable();
  }

  std::set<std::string> seen;
  std::size_t prediction_count = 0;
  bool any_input = false;
  for (std::size_t i = 0; i < doc.propositions.size(); ++i) {
    const Proposition& p = doc.propositions[i];
    const std::string path = At("propositions", i);
    if (p.id.empty()) {
      out.push_back({ErrorCode::kInvalidArgument, path + "/id", "empty id"});
    } else if (!seen.insert(p.id).second) {
      out.push_back({ErrorCode::kDuplicateId, path + "/id",
                     "duplicate proposition id '" + p.id + "'"});
    }
    if (p.text.empty()) {
      out.push_back({ErrorCode::kEmptyText, path + "/text",
                     "proposition '" + p.id + "' has empty text"});
    }
    if (p.source.kind == SourceKind::kEvidence &&
        p.source.evidence_index >= doc.input.evidence.size()) {
      out.push_back({ErrorCode::kInvalidArgument, path + "/evidence_index",
                     "evidence index " + std::to_string(p.source.evidence_index) +
                         " out of range"});
    }
    if (p.IsPrediction()) ++prediction_count;
    if (p.IsFromInput()) any_input = true;
  }
  if (prediction_count > 1) {
    out.push_back({ErrorCode::kDuplicatePredictionRole, "/propositions",
                   "more than one proposition has the prediction role"});
  }
  if (options.for_prediction) {
    if (prediction_count == 0) {
      out.push_back({ErrorCode::kMissingPredictionRole, "/propositions",
                     "no proposition has the prediction role"});
    }
    if (!any_input) {
      out.push_back({ErrorCode::kNoInputSourcedProposition, "/propositions",
                     "no proposition is drawn from the claim or evidence"});
    }
  }
  return PropositionTable(doc.propositions);
}

void ThrowIfAny(Violations violations) {
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

}  // namespace

FreeFormExplanation ValidateFreeForm(const ExplanationDocument& doc,
                                     const ValidationOptions& options) {
  Violations violations;
  CheckFormat(doc, Format::kFreeForm, violations);
  PropositionTable table = CheckPropositions(doc, options, violations);
  ThrowIfAny(std::move(violations));
  return FreeFormExplanation(std::move(table));
}

DeductiveExplanation ValidateDeductive(const ExplanationDocument& doc,
                                       const ValidationOptions& options) {
  Violations violations;
  CheckFormat(doc, Format::kDeductive, violations);
  PropositionTable table = CheckPropositions(doc, options, violations);

  std::vector<IndexEdge> relation;
  std::set<IndexEdge> seen;
  for (std::size_t i = 0; i < doc.relations.size(); ++i) {
    const RelationEdge& edge = doc.relations[i];
    const auto from = table.IndexOf(edge.from);
    const auto to = table.IndexOf(edge.to);
    if (!from || !to) {
      violations.push_back({ErrorCode::kDanglingEdge, At("relations", i),
                            "edge (" + edge.from + ", " + edge.to +
                                ") references an unknown proposition"});
      continue;
    }
    IndexEdge key{*from, *to};
    if (!doc.directed && key.to < key.from) std::swap(key.from, key.to);
    if (!seen.insert(key).second) {
      violations.push_back({ErrorCode::kDuplicateEdge, At("relations", i),
                            "duplicate edge (" + edge.from + ", " + edge.to + ")"});
      continue;
    }
    relation.push_back({*from, *to});
  }
  ThrowIfAny(std::move(violations));
  return DeductiveExplanation(std::move(table), std::move(relation),
                              doc.directed);
}

ArgumentativeExplanation ValidateArgumentative(
    const ExplanationDocument& doc, const ValidationOptions& options) {
  Violations violations;
  CheckFormat(doc, Format::kArgumentative, violations);
  PropositionTable table = CheckPropositions(doc, options, violations);

  if (doc.arguments.empty()) {
    violations.push_back({ErrorCode::kInvalidArgument, "/arguments",
                          "explanation has no arguments"});
  }
  std::vector<ResolvedArgument> arguments;
  std::unordered_map<std::string, std::size_t> argument_index;
  for (std::size_t i = 0; i < doc.arguments.size(); ++i) {
    const Argument& a = doc.arguments[i];
    const std::string path = At("arguments", i);
    if (a.id.empty()) {
      violations.push_back({ErrorCode::kInvalidArgument, path + "/id", "empty id"});
      continue;
    }
    if (!argument_index.emplace(a.id, i).second) {
      violations.push_back({ErrorCode::kDuplicateId, path + "/id",
                            "duplicate argument id '" + a.id + "'"});
      continue;
    }
    ResolvedArgument resolved{a.id, {}, 0};
    bool ok = true;
    std::set<std::size_t> premise_set;
    for (std::size_t k = 0; k < a.premises.size(); ++k) {
      const auto premise = table.IndexOf(a.premises[k]);
      if (!premise) {
        violations.push_back({ErrorCode::kInvalidArgument,
                              path + "/premises/" + std::to_string(k),
                              "unknown proposition '" + a.premises[k] + "'"});
        ok = false;
      } else if (!premise_set.insert(*premise).second) {
        violations.push_back({ErrorCode::kInvalidArgument,
                              path + "/premises/" + std::to_string(k),
                              "repeated premise '" + a.premises[k] + "'"});
        ok = false;
      } else {
        resolved.premises.push_back(*premise);
      }
    }
    const auto conclusion = table.IndexOf(a.conclusion);
    if (!conclusion) {
      violations.push_back({ErrorCode::kInvalidArgument, path + "/conclusion",
                            "unknown proposition '" + a.conclusion + "'"});
      ok = false;
    } else if (premise_set.count(*conclusion) != 0) {
      violations.push_back({ErrorCode::kInvalidArgument, path + "/conclusion",
                            "conclusion is also a premise"});
      ok = false;
    } else {
      resolved.conclusion = *conclusion;
    }
    if (ok) arguments.push_back(std::move(resolved));
  }

  auto resolve = [&](const std::string& from, const std::string& to)
      -> std::optional<IndexEdge> {
    auto f = argument_index.find(from);
    auto t = argument_index.find(to);
    if (f == argument_index.end() || t == argument_index.end()) {
      return std::nullopt;
    }
    return IndexEdge{f->second, t->second};
  };

  std::vector<KindedSupport> supports;
  std::set<IndexEdge> support_set;
  for (std::size_t i = 0; i < doc.supports.size(); ++i) {
    const SupportEdge& s = doc.supports[i];
    const auto edge = resolve(s.from, s.to);
    if (!edge) {
      violations.push_back({ErrorCode::kDanglingEdge, At("supports", i),
                            "support (" + s.from + ", " + s.to +
                                ") references an unknown argument"});
    } else if (!support_set.insert(*edge).second) {
      violations.push_back({ErrorCode::kDuplicateEdge, At("supports", i),
                            "duplicate support (" + s.from + ", " + s.to + ")"});
    } else {
      supports.push_back({*edge, s.kind});
    }
  }
  std::vector<KindedAttack> attacks;
  std::set<IndexEdge> attack_set;
  for (std::size_t i = 0; i < doc.attacks.size(); ++i) {
    const AttackEdge& a = doc.attacks[i];
    const auto edge = resolve(a.from, a.to);
    if (!edge) {
      violations.push_back({ErrorCode::kDanglingEdge, At("attacks", i),
                            "attack (" + a.from + ", " + a.to +
                                ") references an unknown argument"});
    } else if (!attack_set.insert(*edge).second) {
      violations.push_back({ErrorCode::kDuplicateEdge, At("attacks", i),
                            "duplicate attack (" + a.from + ", " + a.to + ")"});
    } else if (support_set.count(*edge) != 0) {
      violations.push_back({ErrorCode::kConflictingEdge, At("attacks", i),
                            "(" + a.from + ", " + a.to +
                                ") is both a support and an attack"});
    } else {
      attacks.push_back({*edge, a.kind});
    }
  }

  if (options.for_prediction && table.prediction()) {
    bool concluded = false;
    for (const ResolvedArgument& a : arguments) {
      if (a.conclusion == *table.prediction()) concluded = true;
    }
    if (!concluded) {
      violations.push_back({ErrorCode::kNoArgumentForPrediction, "/arguments",
                            "no argument concludes the prediction"});
    }
  }
  ThrowIfAny(std::move(violations));
  return ArgumentativeExplanation(std::move(table), std::move(arguments),
                                  std::move(supports), std::move(attacks));
}

std::vector<Violation> Validate(const ExplanationDocument& doc,
                                const ValidationOptions& options) {
  try {
    switch (doc.format) {
      case Format::kFreeForm: ValidateFreeForm(doc, options); break;
      case Format::kDeductive: ValidateDeductive(doc, options); break;
      case Format::kArgumentative: ValidateArgumentative(doc, options); break;
    }
  } catch (const ValidationError& e) {
    return e.violations();
  }
  return {};
}

namespace {

ExplanationDocument Base(const ExplanationDocument& doc,
                         const PropositionTable& table, Format format) {
  ExplanationDocument out;
  out.id = doc.id;
  out.format = format;
  out.input = doc.input;
  out.prediction = doc.prediction;
  out.meta = doc.meta;
  out.propositions = table.all();
  return out;
}

}  // namespace

ExplanationDocument ToDocument(const ExplanationDocument& doc,
                               const FreeFormExplanation& e) {
  return Base(doc, e.propositions(), Format::kFreeForm);
}

ExplanationDocument ToDocument(const ExplanationDocument& doc,
                               const DeductiveExplanation& e) {
  ExplanationDocument out = Base(doc, e.propositions(), Format::kDeductive);
  out.directed = e.directed();
  for (const IndexEdge& edge : e.relation()) {
    out.relations.push_back(
        {e.propositions()[edge.from].id, e.propositions()[edge.to].id});
  }
  return out;
}

ExplanationDocument ToDocument(const ExplanationDocument& doc,
                               const ArgumentativeExplanation& e) {
  ExplanationDocument out = Base(doc, e.propositions(), Format::kArgumentative);
  const auto& props = e.propositions();
  const auto& args = e.arguments();
  for (const ResolvedArgument& a : args) {
    Argument raw{a.id, {}, props[a.conclusion].id};
    for (std::size_t p : a.premises) raw.premises.push_back(props[p].id);
    out.arguments.push_back(std::move(raw));
  }
  for (const KindedSupport& s : e.supports()) {
    out.supports.push_back({args[s.edge.from].id, args[s.edge.to].id, s.kind});
  }
  for (const KindedAttack& a : e.attacks()) {
    out.attacks.push_back({args[a.edge.from].id, args[a.edge.to].id, a.kind});
  }
  return out;
}

}  // namespace rationale
