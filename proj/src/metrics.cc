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

#include "rationale/metrics.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <numeric>
#include <thread>

#include "rationale/errors.h"
#include "rationale/graph.h"

namespace rationale {

namespace {

std::size_t RequirePrediction(const PropositionTable& table,
                              std::string_view metric) {
  const auto prediction = table.prediction();
  if (!prediction) {
    throw Error(ErrorCode::kMissingPredictionRole,
                std::string(metric) + " needs a prediction-role proposition");
  }
  return *prediction;
}

std::string Normalize(std::string_view text, const MatcherConfig& matcher) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char raw : text) {
    const auto c = static_cast<unsigned char>(raw);
    const bool space =
        std::isspace(c) || (matcher.strip_punctuation && std::ispunct(c));
    if (space) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(matcher.lowercase ? static_cast<char>(std::tolower(c)) : raw);
  }
  return out;
}

// Per-target contradiction flags for the Coh enumeration.
struct TargetJudgements {
  std::string_view target;
  std::vector<bool> single;  // member i contradicts target
};

}  // namespace

bool OccursInInput(std::string_view text, const InputRecord& input,
                   const MatcherConfig& matcher) {
  const std::string needle = Normalize(text, matcher);
  if (needle.empty()) return false;
  if (Normalize(input.claim, matcher).find(needle) != std::string::npos) {
    return true;
  }
  return std::any_of(input.evidence.begin(), input.evidence.end(),
                     [&](const std::string& passage) {
                       return Normalize(passage, matcher).find(needle) !=
                              std::string::npos;
                     });
}

MetricValue Coh(const PropositionTable& propositions, const InputRecord& input,
                const TextOracle& oracle, std::size_t max_subset_size) {
  if (max_subset_size < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_subset_size must be >= 1");
  }
  const std::size_t prediction = RequirePrediction(propositions, "coh");
  std::vector<std::string_view> members;
  for (std::size_t i = 0; i < propositions.size(); ++i) {
    if (i != prediction) members.push_back(propositions[i].text);
  }
  MetricValue out;
  const std::size_t n = members.size();
  if (n == 0) {
    out.value = 1.0;
    out.notes.push_back("coh: no propositions besides the prediction, scored 1.0");
    return out;
  }

  // Same decision as SetContradicts for every subset, with the pairwise and
  // single-member judgements computed once.
  std::vector<std::vector<bool>> pair(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      pair[i][k] = pair[k][i] = oracle.Judge(members[i], members[k]).contradiction ||
                                oracle.Judge(members[k], members[i]).contradiction;
    }
  }
  const std::string joined_input = input.JoinedText();
  std::vector<TargetJudgements> targets = {
      {propositions[prediction].text, {}}, {joined_input, {}}};
  for (TargetJudgements& t : targets) {
    for (std::string_view m : members) {
      t.single.push_back(oracle.Judge(m, t.target).contradiction);
    }
  }

  const bool full = propositions.size() <= kFullEnumerationLimit;
  const std::size_t largest = full ? n : std::min(max_subset_size, n);
  std::size_t enumerated = 0;
  std::size_t passing = 0;
  std::vector<std::size_t> pick;
  std::vector<std::string_view> texts;
  for (std::size_t k = 1; k <= largest; ++k) {
    pick.resize(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      ++enumerated;
      bool contradicts = false;
      for (std::size_t a = 0; a < k && !contradicts; ++a) {
        for (std::size_t b = a + 1; b < k && !contradicts; ++b) {
          contradicts = pair[pick[a]][pick[b]];
        }
      }
      for (const TargetJudgements& t : targets) {
        for (std::size_t a = 0; a < k && !contradicts; ++a) {
          contradicts = t.single[pick[a]];
        }
        if (!contradicts && k > 1) {
          texts.clear();
          for (std::size_t a : pick) texts.push_back(members[a]);
          contradicts = oracle.Judge(JoinConjunction(texts), t.target).contradiction;
        }
        if (contradicts) break;
      }
      if (!contradicts) ++passing;

      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  out.value = static_cast<double>(passing) / static_cast<double>(enumerated);
  if (!full && largest < n) {
    out.notes.push_back("coh: subsets truncated to size <= " +
                        std::to_string(largest));
  }
  return out;
}

MetricValue RelWeak(const DeductiveExplanation& e) {
  const PropositionTable& table = e.propositions();
  const std::size_t prediction = RequirePrediction(table, "rel_weak");
  const std::vector<bool> reaches = CanReach(RelationGraph(e), prediction);
  const auto hits = std::count(reaches.begin(), reaches.end(), true);
  return {static_cast<double>(hits) / static_cast<double>(table.size()), {}};
}

MetricValue RelStrong(const DeductiveExplanation& e) {
  const PropositionTable& table = e.propositions();
  const std::size_t prediction = RequirePrediction(table, "rel_strong");
  if (table.size() == 1) {
    return {1.0, {"rel_strong: no propositions besides the prediction, scored 1.0"}};
  }
  const Digraph g = RelationGraph(e);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i != prediction && g.HasEdge(i, prediction)) ++hits;
  }
  return {static_cast<double>(hits) / static_cast<double>(table.size() - 1), {}};
}

MetricValue Red(const DeductiveExplanation& e, const InputRecord& input,
                const MatcherConfig& matcher) {
  const PropositionTable& table = e.propositions();
  const std::size_t prediction = RequirePrediction(table, "red");
  if (table.size() == 1) {
    return {0.0, {"red: no propositions besides the prediction, scored 0.0"}};
  }
  const std::vector<bool> component =
      WeakComponent(Digraph(table.size(), e.relation()), prediction);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i != prediction && component[i] &&
        OccursInInput(table[i].text, input, matcher)) {
      ++hits;
    }
  }
  return {1.0 - static_cast<double>(hits) / static_cast<double>(table.size() - 1),
          {}};
}

bool IsShallowForest(const BipolarGraph& g) {
  const Digraph combined = g.Combined();
  for (std::size_t a = 0; a < g.size(); ++a) {
    if (combined.Successors(a).size() > 1) return false;
  }
  if (!TopologicalOrder(combined)) return false;
  return LongestPathLength(combined) <= 2;
}

MetricValue Acc(const ArgumentativeExplanation& e) {
  const std::vector<std::size_t> for_prediction = e.PredictionArguments();
  if (for_prediction.empty()) {
    throw Error(ErrorCode::kMissingPredictionRole,
                "acc needs an argument concluding the prediction");
  }
  const BipolarGraph g = ToBipolarGraph(e);
  const Digraph attacks = g.AttackGraph();
  double total = 0.0;
  for (std::size_t a : for_prediction) {
    const auto& attackers = attacks.Predecessors(a);
    if (attackers.empty()) {
      total += 1.0;
      continue;
    }
    const auto countered =
        std::count_if(attackers.begin(), attackers.end(), [&](std::size_t b) {
          return !attacks.Predecessors(b).empty();
        });
    total += static_cast<double>(countered) / static_cast<double>(attackers.size());
  }
  MetricValue out{total / static_cast<double>(for_prediction.size()), {}};
  if (!IsShallowForest(g)) {
    out.notes.push_back("acc: framework is not a forest of depth <= 2");
  }
  return out;
}

MetricValue CirLiteral(const ArgumentativeExplanation& e) {
  const std::size_t n = e.arguments().size();
  const std::size_t m = e.supports().size() + e.attacks().size();
  if (n == 0 || m == 0) return {0.0, {}};
  std::size_t loops = 0;
  for (const KindedSupport& s : e.supports()) loops += s.edge.from == s.edge.to;
  for (const KindedAttack& a : e.attacks()) loops += a.edge.from == a.edge.to;
  return {static_cast<double>(loops) / (static_cast<double>(m) * static_cast<double>(n)),
          {}};
}

MetricValue CirCycle(const ArgumentativeExplanation& e) {
  const BipolarGraph g = ToBipolarGraph(e);
  if (g.size() == 0) return {0.0, {}};
  const std::vector<bool> on_cycle = CycleNodes(g.Combined());
  const auto hits = std::count(on_cycle.begin(), on_cycle.end(), true);
  return {static_cast<double>(hits) / static_cast<double>(g.size()), {}};
}

std::string AccBandFlag(double acc, ConfidenceBand band) {
  const bool perfect = acc == 1.0;
  switch (band) {
    case ConfidenceBand::kTop:
      return perfect ? "" : "Top band expects Acc=1";
    case ConfidenceBand::kHigh:
      return perfect ? "" : "High band expects Acc=1";
    case ConfidenceBand::kLow:
      return perfect ? "Low band expects Acc≠1" : "";
    case ConfidenceBand::kMedium:
      return "";
  }
  return "";
}

Provenance MakeProvenance(const EvalConfig& config, std::string_view backend) {
  Provenance p;
  p.oracle_backend = std::string(backend);
  p.contradiction_threshold = config.oracle.contradiction_threshold;
  p.implication_threshold = config.oracle.implication_threshold;
  p.lexical_min_overlap = config.oracle.lexical_min_overlap;
  p.max_subset_size = config.max_subset_size;
  p.bands = config.bands;
  p.base_strength = config.base_strength;
  p.weak_threshold = config.weak_threshold;
  p.seed = config.seed;
  p.conventions = {
      "coh: subsets range over propositions other than the prediction",
      "rel_strong, red: the prediction is excluded from the sum",
      "acc: normalized by the number of prediction arguments; unattacked counts 1",
      "cir: literal self-loop ratio and cycle-participation ratio both reported",
      "strength: clamped additive, base " + std::to_string(config.base_strength),
  };
  return p;
}

namespace {

template <typename Fn>
void Collect(DocumentReport& report, std::string_view name, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    report.errors.push_back({std::string(name), e.code(), e.what()});
  }
}

void AddMetric(DocumentReport& report, std::string_view name,
               std::optional<double>& slot, const std::function<MetricValue()>& fn) {
  Collect(report, name, [&] {
    MetricValue v = fn();
    slot = v.value;
    for (std::string& note : v.notes) report.metrics->notes.push_back(std::move(note));
  });
}

// Validates and fills the header fields; false when the document is invalid.
bool Prepare(const ExplanationDocument& doc, const BandThresholds& bands,
             DocumentReport& report) {
  report.id = doc.id;
  report.format = doc.format;
  report.violations = Validate(doc);
  if (!report.valid()) return false;
  report.band = BandOf(doc.prediction.confidence, bands);
  return true;
}

FaithfulnessOptions MakeFaithfulness(const EvalConfig& config) {
  return {config.bands, config.base_strength, config.weak_threshold};
}

void AddArgumentativeChecks(const ArgumentativeExplanation& e,
                            const ExplanationDocument& doc,
                            const EvalConfig& config, const TextOracle& oracle,
                            DocumentReport& report) {
  report.properties.push_back(CheckDialecticalNonCircularity(ToBipolarGraph(e)));
  Collect(report, "dialectical_faithfulness", [&] {
    report.properties.push_back(CheckDialecticalFaithfulness(
        e, doc.prediction, oracle, MakeFaithfulness(config)));
  });
  Collect(report, "acceptability", [&] {
    report.properties.push_back(CheckAcceptability(e, doc.prediction, config.bands));
  });
}

}  // namespace

DocumentReport ScoreDocument(const ExplanationDocument& doc,
                             const EvalConfig& config, const TextOracle& oracle) {
  DocumentReport report;
  if (!Prepare(doc, config.bands, report)) return report;
  report.metrics.emplace();
  MetricReport& m = *report.metrics;
  m.provenance = MakeProvenance(config, oracle.name());

  switch (doc.format) {
    case Format::kFreeForm: {
      const FreeFormExplanation e = ValidateFreeForm(doc);
      AddMetric(report, "coh", m.coh, [&] {
        return Coh(e.propositions(), doc.input, oracle, config.max_subset_size);
      });
      break;
    }
    case Format::kDeductive: {
      const DeductiveExplanation e = ValidateDeductive(doc);
      AddMetric(report, "coh", m.coh, [&] {
        return Coh(e.propositions(), doc.input, oracle, config.max_subset_size);
      });
      AddMetric(report, "rel_weak", m.rel_weak, [&] { return RelWeak(e); });
      AddMetric(report, "rel_strong", m.rel_strong, [&] { return RelStrong(e); });
      AddMetric(report, "red", m.red,
                [&] { return Red(e, doc.input, config.matcher); });
      break;
    }
    case Format::kArgumentative: {
      const ArgumentativeExplanation e = ValidateArgumentative(doc);
      AddMetric(report, "acc", m.acc, [&] { return Acc(e); });
      AddMetric(report, "cir_literal", m.cir_literal, [&] { return CirLiteral(e); });
      AddMetric(report, "cir_cycle", m.cir_cycle, [&] { return CirCycle(e); });
      if (m.acc) {
        std::string flag = AccBandFlag(*m.acc, *report.band);
        if (!flag.empty()) m.band_expectation_flags.push_back(std::move(flag));
        if (!IsShallowForest(ToBipolarGraph(e))) {
          m.band_expectation_flags.push_back("Acc structure: not a forest of depth <= 2");
        }
      }
      AddArgumentativeChecks(e, doc, config, oracle, report);
      break;
    }
  }
  return report;
}

DocumentReport CheckDocument(const ExplanationDocument& doc,
                             const EvalConfig& config, const TextOracle& oracle) {
  DocumentReport report;
  if (!Prepare(doc, config.bands, report)) return report;
  switch (doc.format) {
    case Format::kFreeForm: {
      const FreeFormExplanation e = ValidateFreeForm(doc);
      Collect(report, "coherence", [&] {
        report.properties.push_back(
            CheckCoherence(e.propositions(), oracle, std::max<std::size_t>(2, config.max_subset_size)));
      });
      break;
    }
    case Format::kDeductive: {
      const DeductiveExplanation e = ValidateDeductive(doc);
      Collect(report, "coherence", [&] {
        report.properties.push_back(
            CheckCoherence(e.propositions(), oracle, std::max<std::size_t>(2, config.max_subset_size)));
      });
      report.properties.push_back(CheckNonCircularity(e));
      Collect(report, "weak_relevance",
              [&] { report.properties.push_back(CheckWeakRelevance(e)); });
      Collect(report, "strong_relevance",
              [&] { report.properties.push_back(CheckStrongRelevance(e)); });
      Collect(report, "non_redundancy",
              [&] { report.properties.push_back(CheckNonRedundancy(e)); });
      break;
    }
    case Format::kArgumentative: {
      const ArgumentativeExplanation e = ValidateArgumentative(doc);
      AddArgumentativeChecks(e, doc, config, oracle, report);
      break;
    }
  }
  return report;
}

std::vector<DocumentReport> EvaluateCorpus(
    const std::vector<ExplanationDocument>& docs, const EvalConfig& config,
    const TextOracle& oracle, bool score, unsigned threads) {
  std::vector<DocumentReport> reports(docs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(1, docs.size())));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < docs.size(); i = next++) {
      reports[i] = score ? ScoreDocument(docs[i], config, oracle)
                         : CheckDocument(docs[i], config, oracle);
    }
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  std::vector<std::size_t> order(docs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return reports[a].id < reports[b].id;
  });
  std::vector<DocumentReport> sorted;
  sorted.reserve(reports.size());
  for (std::size_t i : order) sorted.push_back(std::move(reports[i]));
  return sorted;
}

}  // namespace rationale
