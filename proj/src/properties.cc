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

#include "rationale/properties.h"

#include <algorithm>

#include "rationale/errors.h"

namespace rationale {

std::string_view VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kHolds: return "holds";
    case Verdict::kFails: return "fails";
    case Verdict::kNotAssessed: return "not_assessed";
  }
  return "";
}

namespace {

std::vector<std::string> Ids(const PropositionTable& table,
                             const std::vector<std::size_t>& indices) {
  std::vector<std::string> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(table[i].id);
  return out;
}

std::size_t RequirePrediction(const PropositionTable& table,
                              std::string_view property) {
  const auto prediction = table.prediction();
  if (!prediction) {
    throw Error(ErrorCode::kMissingPredictionRole,
                std::string(property) + " needs a prediction-role proposition");
  }
  return *prediction;
}

PropertyReport FromOffenders(std::string property, std::string witness_kind,
                             const PropositionTable& table,
                             const std::vector<std::size_t>& offenders) {
  PropertyReport report;
  report.property = std::move(property);
  if (!offenders.empty()) {
    report.verdict = Verdict::kFails;
    report.witnesses.push_back({std::move(witness_kind), Ids(table, offenders)});
  }
  return report;
}

// Calls fn(subset) for every increasing index combination of size k.
template <typename Fn>
void ForEachCombination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n || k == 0) return;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    fn(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

Digraph RelationGraph(const DeductiveExplanation& e) {
  Digraph g(e.propositions().size(), e.relation());
  return e.directed() ? g : g.Symmetrized();
}

PropertyReport CheckCoherence(const PropositionTable& propositions,
                              const TextOracle& oracle,
                              std::size_t max_subset_size) {
  if (max_subset_size < 2) {
    throw Error(ErrorCode::kInvalidArgument, "max_subset_size must be >= 2");
  }
  const std::size_t n = propositions.size();
  const bool full = n <= kFullEnumerationLimit;
  const std::size_t largest = full ? n : std::min(max_subset_size, n);

  std::vector<std::vector<bool>> pair(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool c = oracle.Judge(propositions[i].text, propositions[j].text).contradiction ||
                     oracle.Judge(propositions[j].text, propositions[i].text).contradiction;
      pair[i][j] = pair[j][i] = c;
    }
  }

  PropertyReport report;
  report.property = "coherence";
  std::vector<std::vector<std::size_t>> minimal;
  auto contains_witness = [&minimal](const std::vector<std::size_t>& subset) {
    for (const auto& w : minimal) {
      if (std::includes(subset.begin(), subset.end(), w.begin(), w.end())) {
        return true;
      }
    }
    return false;
  };

  for (std::size_t k = 2; k <= largest; ++k) {
    ForEachCombination(n, k, [&](const std::vector<std::size_t>& subset) {
      if (contains_witness(subset)) return;
      bool contradictory = false;
      if (k == 2) {
        contradictory = pair[subset[0]][subset[1]];
      } else {
        // Pairs are already covered; test each member against the rest.
        std::vector<std::string_view> rest;
        for (std::size_t m = 0; m < k && !contradictory; ++m) {
          rest.clear();
          for (std::size_t r = 0; r < k; ++r) {
            if (r != m) rest.push_back(propositions[subset[r]].text);
          }
          const std::string joined = JoinConjunction(rest);
          const std::string& member = propositions[subset[m]].text;
          contradictory = oracle.Judge(joined, member).contradiction ||
                          oracle.Judge(member, joined).contradiction;
        }
      }
      if (contradictory) minimal.push_back(subset);
    });
  }

  for (const auto& subset : minimal) {
    report.witnesses.push_back({"contradictory_subset", Ids(propositions, subset)});
  }
  if (!minimal.empty()) report.verdict = Verdict::kFails;
  if (!full && largest < n) {
    report.notes = "enumeration truncated to subsets of size <= " +
                   std::to_string(largest) + " over " + std::to_string(n) +
                   " propositions";
  }
  return report;
}

PropertyReport CheckNonCircularity(const DeductiveExplanation& e) {
  const PropositionTable& table = e.propositions();
  const auto cycle =
      e.directed() ? FindCycle(Digraph(table.size(), e.relation()))
                   : FindUndirectedCycle(table.size(), e.relation());
  PropertyReport report;
  report.property = "non_circularity";
  if (cycle) {
    report.verdict = Verdict::kFails;
    report.witnesses.push_back({"cycle", Ids(table, *cycle)});
  }
  if (!e.directed()) report.notes = "undirected relation: checked for undirected cycles";
  return report;
}

PropertyReport CheckWeakRelevance(const DeductiveExplanation& e) {
  const PropositionTable& table = e.propositions();
  const std::size_t prediction = RequirePrediction(table, "weak relevance");
  const std::vector<bool> reaches = CanReach(RelationGraph(e), prediction);
  std::vector<std::size_t> unconnected;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!reaches[i]) unconnected.push_back(i);
  }
  return FromOffenders("weak_relevance", "unconnected", table, unconnected);
}

PropertyReport CheckStrongRelevance(const DeductiveExplanation& e) {
  const PropositionTable& table = e.propositions();
  const std::size_t prediction = RequirePrediction(table, "strong relevance");
  const Digraph g = RelationGraph(e);
  std::vector<std::size_t> missing;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i != prediction && !g.HasEdge(i, prediction)) missing.push_back(i);
  }
  PropertyReport report =
      FromOffenders("strong_relevance", "missing_edge", table, missing);
  report.notes = "the prediction itself is exempt from needing an edge to itself";
  return report;
}

bool IsExplanationForPrediction(const DeductiveExplanation& e,
                                const std::vector<bool>& keep) {
  const PropositionTable& table = e.propositions();
  const auto prediction = table.prediction();
  if (!prediction || !keep[*prediction]) return false;

  Digraph restricted(table.size());
  for (const IndexEdge& edge : e.relation()) {
    if (keep[edge.from] && keep[edge.to]) restricted.AddEdge(edge.from, edge.to);
  }
  if (!e.directed()) restricted = restricted.Symmetrized();
  const std::vector<bool> reaches = CanReach(restricted, *prediction);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i != *prediction && keep[i] && table[i].IsFromInput() && reaches[i]) {
      return true;
    }
  }
  return false;
}

PropertyReport CheckNonRedundancy(const DeductiveExplanation& e) {
  const PropositionTable& table = e.propositions();
  const std::size_t prediction = RequirePrediction(table, "non-redundancy");
  std::vector<std::size_t> removable;
  std::vector<bool> keep(table.size(), true);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i == prediction) continue;
    keep[i] = false;
    if (IsExplanationForPrediction(e, keep)) removable.push_back(i);
    keep[i] = true;
  }
  return FromOffenders("non_redundancy", "removable", table, removable);
}

std::set<std::string> ReachableSet(const DeductiveExplanation& e,
                                   std::span<const std::string> start_ids) {
  const PropositionTable& table = e.propositions();
  std::vector<std::size_t> starts;
  for (const std::string& id : start_ids) {
    const auto index = table.IndexOf(id);
    if (!index) {
      throw Error(ErrorCode::kInvalidArgument, "unknown proposition '" + id + "'");
    }
    starts.push_back(*index);
  }
  const std::vector<bool> seen = ReachableFrom(RelationGraph(e), starts);
  std::set<std::string> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (seen[i]) out.insert(table[i].id);
  }
  return out;
}

}  // namespace rationale
