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

#ifndef RATIONALE_METRICS_H_
#define RATIONALE_METRICS_H_

// The six quantitative explanation metrics and document-level scoring.
//
//   Coh         fraction of enumerated subsets P' of P \ {y} that contradict
//               neither the prediction y nor the input X.
//   RelWeak     fraction of propositions with a relation path to y.
//   RelStrong   fraction of P \ {y} with a direct relation edge to y.
//   Red         1 - fraction of P \ {y} that both occur in X and lie in the
//               weakly connected component of y (0 is best).
//   Acc         mean over y-concluding arguments of the fraction of their
//               attackers that are themselves attacked (1 when unattacked).
//   CirLiteral  self-loop participation ratio, (1/N) sum_a (1/M) #self-loops(a).
//   CirCycle    fraction of arguments lying on a support/attack cycle.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rationale/argumentation.h"
#include "rationale/model.h"
#include "rationale/properties.h"
#include "rationale/text_oracle.h"

namespace rationale {

// Decides whether a proposition text occurs in the input. Default:
// lowercase, punctuation stripped, whitespace collapsed, then substring
// containment in the claim or any evidence passage.
struct MatcherConfig {
  bool lowercase = true;
  bool strip_punctuation = true;

  bool operator==(const MatcherConfig&) const = default;
};

bool OccursInInput(std::string_view text, const InputRecord& input,
                   const MatcherConfig& matcher = {});

struct EvalConfig {
  OracleConfig oracle;
  std::size_t max_subset_size = 3;
  BandThresholds bands;
  double base_strength = 0.5;
  double weak_threshold = 0.5;
  MatcherConfig matcher;
  std::uint64_t seed = 0;
};

// A score plus the conventions that were applied to obtain it.
struct MetricValue {
  double value = 0.0;
  std::vector<std::string> notes;
};

MetricValue Coh(const PropositionTable& propositions, const InputRecord& input,
                const TextOracle& oracle, std::size_t max_subset_size = 3);
MetricValue RelWeak(const DeductiveExplanation& e);
MetricValue RelStrong(const DeductiveExplanation& e);
MetricValue Red(const DeductiveExplanation& e, const InputRecord& input,
                const MatcherConfig& matcher = {});
MetricValue Acc(const ArgumentativeExplanation& e);
MetricValue CirLiteral(const ArgumentativeExplanation& e);
MetricValue CirCycle(const ArgumentativeExplanation& e);

// Whether the framework is a set of trees of depth at most two (each argument
// has at most one outgoing edge, no cycles, longest path <= 2 edges).
bool IsShallowForest(const BipolarGraph& g);

// Band-expectation flag for Acc, or "" when the score meets expectation.
std::string AccBandFlag(double acc, ConfidenceBand band);

// Configuration snapshot embedded in every metric report.
struct Provenance {
  std::string oracle_backend;
  double contradiction_threshold = 0.0;
  double implication_threshold = 0.0;
  double lexical_min_overlap = 0.0;
  std::size_t max_subset_size = 0;
  BandThresholds bands;
  double base_strength = 0.0;
  double weak_threshold = 0.0;
  std::uint64_t seed = 0;
  std::vector<std::string> conventions;
};

Provenance MakeProvenance(const EvalConfig& config, std::string_view backend);

struct MetricReport {
  std::optional<double> coh;
  std::optional<double> rel_weak;
  std::optional<double> rel_strong;
  std::optional<double> red;
  std::optional<double> acc;
  std::optional<double> cir_literal;
  std::optional<double> cir_cycle;
  std::vector<std::string> band_expectation_flags;
  std::vector<std::string> notes;
  Provenance provenance;
};

struct MetricError {
  std::string metric;
  ErrorCode code;
  std::string message;
};

// Everything computed for one document.
struct DocumentReport {
  std::string id;
  Format format = Format::kFreeForm;
  std::optional<ConfidenceBand> band;
  std::vector<Violation> violations;  // non-empty: document invalid, no scores
  std::optional<MetricReport> metrics;
  std::vector<PropertyReport> properties;
  std::vector<MetricError> errors;

  bool valid() const { return violations.empty(); }
};

// Validates and scores. Per-metric failures are collected in `errors` while
// the remaining metrics are still computed. Argumentative documents also get
// their property checks.
DocumentReport ScoreDocument(const ExplanationDocument& doc,
                             const EvalConfig& config, const TextOracle& oracle);

// Validates and runs every property check applicable to the format.
DocumentReport CheckDocument(const ExplanationDocument& doc,
                             const EvalConfig& config, const TextOracle& oracle);

// Scores (score=true) or checks every document on `threads` workers
// (0 = hardware concurrency). Results are sorted by document id, input order
// breaking ties.
std::vector<DocumentReport> EvaluateCorpus(
    const std::vector<ExplanationDocument>& docs, const EvalConfig& config,
    const TextOracle& oracle, bool score, unsigned threads = 0);

}  // namespace rationale

#endif  // RATIONALE_METRICS_H_
