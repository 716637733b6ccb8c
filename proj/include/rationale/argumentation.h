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

#ifndef RATIONALE_ARGUMENTATION_H_
#define RATIONALE_ARGUMENTATION_H_

// Bipolar argumentation: edge classification, gradual strength, abstract
// acceptability and the argumentative property checks.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rationale/graph.h"
#include "rationale/model.h"
#include "rationale/properties.h"
#include "rationale/text_oracle.h"

namespace rationale {

// Support/attack structure over argument indices 0..n-1.
struct BipolarGraph {
  std::vector<std::string> ids;
  std::vector<IndexEdge> supports;
  std::vector<IndexEdge> attacks;

  std::size_t size() const { return ids.size(); }
  // Digraph over supports ∪ attacks.
  Digraph Combined() const;
  Digraph AttackGraph() const;
};

BipolarGraph ToBipolarGraph(const ArgumentativeExplanation& e);

enum class EdgeClass { kUndercut, kRebut, kReasons, kAccrual, kUnsupported };

std::string_view EdgeClassName(EdgeClass c);

// First matching kind in the order undercut, rebut, reasons, accrual.
EdgeClass ClassifyEdge(const ArgumentativeExplanation& e, std::size_t from,
                       std::size_t to, const TextOracle& oracle);

struct StrengthMap {
  std::vector<double> strength;  // indexed like BipolarGraph::ids
  double base_score = 0.5;
};

class GradualSemantics {
 public:
  virtual ~GradualSemantics() = default;
  // Throws Error(kCyclicFramework) when strengths are undefined.
  virtual StrengthMap Compute(const BipolarGraph& g) const = 0;
};

// sigma(a) = clamp(base + sum sigma(supporters) - sum sigma(attackers), 0, 1),
// evaluated parents-first on an acyclic graph.
class ClampedAdditiveSemantics final : public GradualSemantics {
 public:
  explicit ClampedAdditiveSemantics(double base = 0.5) : base_(base) {}
  StrengthMap Compute(const BipolarGraph& g) const override;

 private:
  double base_;
};

StrengthMap StrengthsAcyclic(const BipolarGraph& g, double base = 0.5);

// Argument sets are sorted index lists.
using ArgumentSet = std::vector<std::size_t>;

enum class ExtensionSemantics { kGrounded, kAdmissible };

struct AFExtension {
  ArgumentSet members;
  ExtensionSemantics semantics;

  bool operator==(const AFExtension&) const = default;
};

AFExtension GroundedExtension(std::size_t n,
                              const std::vector<IndexEdge>& attacks);

inline constexpr std::size_t kBruteForceLimit = 12;

// Every admissible set, in increasing bitmask order. Throws Error(kTooLarge)
// above kBruteForceLimit nodes.
std::vector<AFExtension> AdmissibleSetsBruteForce(
    std::size_t n, const std::vector<IndexEdge>& attacks);

bool IsConflictFree(const ArgumentSet& s, const Digraph& attack_graph);
bool IsAdmissible(const ArgumentSet& s, const Digraph& attack_graph);

// Nodes on a directed cycle of supports ∪ attacks.
std::vector<std::string> CycleNodeIds(const BipolarGraph& g);

PropertyReport CheckDialecticalNonCircularity(const BipolarGraph& g);

struct FaithfulnessOptions {
  BandThresholds bands;
  double base_score = 0.5;
  // Prediction arguments at or below this strength count as weak.
  double weak_threshold = 0.5;
};

// Throws Error(kCyclicFramework) or Error(kMissingPredictionRole).
PropertyReport CheckDialecticalFaithfulness(
    const ArgumentativeExplanation& e, const Prediction& prediction,
    const TextOracle& oracle, const FaithfulnessOptions& options = {},
    const GradualSemantics* semantics = nullptr);

// Throws Error(kMissingPredictionRole).
PropertyReport CheckAcceptability(const ArgumentativeExplanation& e,
                                  const Prediction& prediction,
                                  const BandThresholds& bands = {});

// An admissible superset of `required`: exhaustive up to kBruteForceLimit
// arguments, greedy defense closure above. nullopt when none is found.
std::optional<ArgumentSet> FindAdmissibleSuperset(std::size_t n,
                                                  const std::vector<IndexEdge>& attacks,
                                                  const ArgumentSet& required);

}  // namespace rationale

#endif  // RATIONALE_ARGUMENTATION_H_
