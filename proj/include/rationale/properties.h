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

#ifndef RATIONALE_PROPERTIES_H_
#define RATIONALE_PROPERTIES_H_

// Boolean property checks with witnesses for free-form and deductive
// explanations.

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rationale/graph.h"
#include "rationale/model.h"
#include "rationale/text_oracle.h"

namespace rationale {

enum class Verdict { kHolds, kFails, kNotAssessed };

std::string_view VerdictName(Verdict verdict);

struct Witness {
  // e.g. "cycle", "contradictory_subset", "unconnected", "missing_edge",
  // "removable", "pure_support_cycle", "undefended_attacker".
  std::string kind;
  std::vector<std::string> ids;

  bool operator==(const Witness&) const = default;
};

// Invariant: verdict == kFails implies !witnesses.empty().
struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::kHolds;
  std::vector<Witness> witnesses;
  std::string notes;

  bool holds() const { return verdict == Verdict::kHolds; }
  bool operator==(const PropertyReport&) const = default;
};

inline constexpr std::size_t kFullEnumerationLimit = 12;

// No subset of the propositions (sizes 2..max_subset_size, or all sizes when
// there are at most 12 propositions) is internally contradictory. Witnesses
// are the minimal contradictory subsets.
PropertyReport CheckCoherence(const PropositionTable& propositions,
                              const TextOracle& oracle,
                              std::size_t max_subset_size = 3);

PropertyReport CheckNonCircularity(const DeductiveExplanation& e);
PropertyReport CheckWeakRelevance(const DeductiveExplanation& e);
PropertyReport CheckStrongRelevance(const DeductiveExplanation& e);
PropertyReport CheckNonRedundancy(const DeductiveExplanation& e);

// Proposition ids reachable from `start_ids` along the relation (undirected
// explanations are traversed both ways). Unknown ids throw
// Error(kInvalidArgument).
std::set<std::string> ReachableSet(const DeductiveExplanation& e,
                                   std::span<const std::string> start_ids);

// Relation as a digraph, symmetrized for undirected explanations.
Digraph RelationGraph(const DeductiveExplanation& e);

// Whether the structure restricted to `keep` still contains the prediction,
// an input-sourced proposition, and a path from one of those to the
// prediction.
bool IsExplanationForPrediction(const DeductiveExplanation& e,
                                const std::vector<bool>& keep);

}  // namespace rationale

#endif  // RATIONALE_PROPERTIES_H_
