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

#ifndef RATIONALE_TEXT_ORACLE_H_
#define RATIONALE_TEXT_ORACLE_H_

// Contradiction / implication judgements between natural-language strings.
//
// All backends implement TextOracle::Judge(premise, hypothesis), which yields
// both verdicts for the ordered pair. contradicts(a, b) and implies(a, b) are
// read off Judge(a, b).

#include <memory>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rationale {

struct RelationJudgement {
  bool contradiction = false;
  bool implication = false;
  double contradiction_score = 0.0;
  double implication_score = 0.0;
  std::string backend;

  bool operator==(const RelationJudgement&) const = default;
};

enum class OracleBackend { kLexical, kRemote };

struct OracleConfig {
  OracleBackend backend = OracleBackend::kLexical;
  double contradiction_threshold = 0.5;
  double implication_threshold = 0.5;
  bool cache_enabled = true;
  std::string remote_url;
  int remote_timeout_seconds = 10;
  // Lexical rule: minimum content-token Jaccard overlap for a contradiction.
  double lexical_min_overlap = 0.6;
};

class TextOracle {
 public:
  virtual ~TextOracle() = default;

  virtual RelationJudgement Judge(std::string_view premise,
                                  std::string_view hypothesis) const = 0;
  virtual std::string_view name() const = 0;
};

inline RelationJudgement Contradicts(const TextOracle& oracle,
                                     std::string_view a, std::string_view b) {
  return oracle.Judge(a, b);
}
inline RelationJudgement Implies(const TextOracle& oracle, std::string_view a,
                                 std::string_view b) {
  return oracle.Judge(a, b);
}

// Separator used to conjoin a set of propositions into one text.
inline constexpr std::string_view kConjunctionSeparator = ". ";

std::string JoinConjunction(std::span<const std::string_view> parts);

// Judges the conjunction of `sources` (document order) against `target`.
// A contradiction is reported when any pair inside `sources` contradicts
// (either direction), when any single source contradicts `target`, or when
// the joined conjunction contradicts `target`. Throws Error(kInvalidArgument)
// for an empty source set.
RelationJudgement SetContradicts(const TextOracle& oracle,
                                 std::span<const std::string_view> sources,
                                 std::string_view target);

// True when some pair of `texts` contradicts, in either direction.
bool InternallyContradictory(const TextOracle& oracle,
                             std::span<const std::string_view> texts);

// Deterministic, offline rule: tokens are lowercased alphanumeric runs;
// negation markers (not, no, never, n't, none, cannot) are counted and dropped;
// a fixed stopword list is removed to obtain content tokens.
//   contradiction: Jaccard(content) >= min_overlap, odd total negation count,
//                  score = Jaccard (0 when parity is even) >= threshold.
//   implication:   coverage of the hypothesis's content tokens by the
//                  premise's, equal negation parity, score >= threshold.
class LexicalOracle final : public TextOracle {
 public:
  explicit LexicalOracle(const OracleConfig& config = {});

  RelationJudgement Judge(std::string_view premise,
                          std::string_view hypothesis) const override;
  std::string_view name() const override { return "lexical"; }

 private:
  double contradiction_threshold_;
  double implication_threshold_;
  double min_overlap_;
};

struct LexicalAnalysis {
  std::vector<std::string> content;  // sorted, unique
  int negations = 0;
};

LexicalAnalysis AnalyzeText(std::string_view text);

// Client for the NLI service: POST {url}/nli with {"premise","hypothesis"};
// response {"label": ENTAILMENT|CONTRADICTION|NEUTRAL, "scores": {...}}.
// Throws Error(kRemoteUnavailable) on transport/HTTP failure and
// Error(kMalformedResponse) on an unparseable body.
class RemoteOracle final : public TextOracle {
 public:
  explicit RemoteOracle(const OracleConfig& config);

  RelationJudgement Judge(std::string_view premise,
                          std::string_view hypothesis) const override;
  std::string_view name() const override { return "remote"; }

 private:
  std::string scheme_host_port_;
  std::string path_prefix_;
  int timeout_seconds_;
  double contradiction_threshold_;
  double implication_threshold_;
};

// Maps an NLI service response body onto a judgement.
RelationJudgement ParseNliResponse(std::string_view body,
                                   double contradiction_threshold,
                                   double implication_threshold);

// Memoizes another oracle. Safe for concurrent Judge() calls.
class CachingOracle final : public TextOracle {
 public:
  explicit CachingOracle(std::shared_ptr<const TextOracle> inner)
      : inner_(std::move(inner)) {}

  RelationJudgement Judge(std::string_view premise,
                          std::string_view hypothesis) const override;
  std::string_view name() const override { return inner_->name(); }

  std::size_t size() const;

 private:
  std::shared_ptr<const TextOracle> inner_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::string, RelationJudgement> cache_;
};

// Builds the configured backend, wrapped in a cache when enabled. The
// RATIONALE_NLI_URL environment variable overrides config.remote_url.
std::shared_ptr<const TextOracle> MakeOracle(OracleConfig config);

}  // namespace rationale

#endif  // RATIONALE_TEXT_ORACLE_H_
