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

#include "rationale/argumentation.h"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

#include "rationale/errors.h"

namespace rationale {

Digraph BipolarGraph::Combined() const {
  Digraph g(size(), supports);
  for (const IndexEdge& e : attacks) g.AddEdge(e.from, e.to);
  return g;
}

Digraph BipolarGraph::AttackGraph() const { return Digraph(size(), attacks); }

BipolarGraph ToBipolarGraph(const ArgumentativeExplanation& e) {
  BipolarGraph g;
  for (const ResolvedArgument& a : e.arguments()) g.ids.push_back(a.id);
  for (const KindedSupport& s : e.supports()) g.supports.push_back(s.edge);
  for (const KindedAttack& a : e.attacks()) g.attacks.push_back(a.edge);
  return g;
}

std::string_view EdgeClassName(EdgeClass c) {
  switch (c) {
    case EdgeClass::kUndercut: return "undercut";
    case EdgeClass::kRebut: return "rebut";
    case EdgeClass::kReasons: return "reasons";
    case EdgeClass::kAccrual: return "accrual";
    case EdgeClass::kUnsupported: return "unsupported";
  }
  return "";
}

EdgeClass ClassifyEdge(const ArgumentativeExplanation& e, std::size_t from,
                       std::size_t to, const TextOracle& oracle) {
  const PropositionTable& props = e.propositions();
  const ResolvedArgument& source = e.arguments().at(from);
  const ResolvedArgument& target = e.arguments().at(to);
  const std::string& conclusion = props[source.conclusion].text;
  auto contradicts = [&](const std::string& other) {
    return oracle.Judge(conclusion, other).contradiction ||
           oracle.Judge(other, conclusion).contradiction;
  };
  auto implies = [&](const std::string& other) {
    return oracle.Judge(conclusion, other).implication;
  };

  for (std::size_t p : target.premises) {
    if (contradicts(props[p].text)) return EdgeClass::kUndercut;
  }
  if (contradicts(props[target.conclusion].text)) return EdgeClass::kRebut;
  for (std::size_t p : target.premises) {
    if (implies(props[p].text)) return EdgeClass::kReasons;
  }
  if (implies(props[target.conclusion].text)) return EdgeClass::kAccrual;
  return EdgeClass::kUnsupported;
}

StrengthMap ClampedAdditiveSemantics::Compute(const BipolarGraph& g) const {
  const auto order = TopologicalOrder(g.Combined());
  if (!order) {
    throw Error(ErrorCode::kCyclicFramework,
                "dialectical strength is undefined on a cyclic framework");
  }
  std::vector<std::vector<std::size_t>> supporters(g.size()), attackers(g.size());
  for (const IndexEdge& e : g.supports) supporters[e.to].push_back(e.from);
  for (const IndexEdge& e : g.attacks) attackers[e.to].push_back(e.from);

  StrengthMap out;
  out.base_score = base_;
  out.strength.assign(g.size(), base_);
  for (std::size_t a : *order) {
    double sigma = base_;
    for (std::size_t s : supporters[a]) sigma += out.strength[s];
    for (std::size_t t : attackers[a]) sigma -= out.strength[t];
    out.strength[a] = std::clamp(sigma, 0.0, 1.0);
  }
  return out;
}

StrengthMap StrengthsAcyclic(const BipolarGraph& g, double base) {
  return ClampedAdditiveSemantics(base).Compute(g);
}

bool IsConflictFree(const ArgumentSet& s, const Digraph& attack_graph) {
  for (std::size_t a : s) {
    for (std::size_t b : s) {
      if (attack_graph.HasEdge(a, b)) return false;
    }
  }
  return true;
}

bool IsAdmissible(const ArgumentSet& s, const Digraph& attack_graph) {
  if (!IsConflictFree(s, attack_graph)) return false;
  std::vector<bool> member(attack_graph.size(), false);
  for (std::size_t a : s) member[a] = true;
  for (std::size_t a : s) {
    for (std::size_t attacker : attack_graph.Predecessors(a)) {
      const auto& counter = attack_graph.Predecessors(attacker);
      const bool defended = std::any_of(counter.begin(), counter.end(),
                                        [&](std::size_t d) { return member[d]; });
      if (!defended) return false;
    }
  }
  return true;
}

AFExtension GroundedExtension(std::size_t n,
                              const std::vector<IndexEdge>& attacks) {
  const Digraph g(n, attacks);
  std::vector<bool> in(n, false);
  while (true) {
    // Arguments attacked by the current set.
    std::vector<bool> defeated(n, false);
    for (std::size_t a = 0; a < n; ++a) {
      if (!in[a]) continue;
      for (std::size_t b : g.Successors(a)) defeated[b] = true;
    }
    std::vector<bool> next(n, false);
    for (std::size_t a = 0; a < n; ++a) {
      const auto& attackers = g.Predecessors(a);
      next[a] = std::all_of(attackers.begin(), attackers.end(),
                            [&](std::size_t b) { return defeated[b]; });
    }
    if (next == in) break;
    in = std::move(next);
  }
  AFExtension out{{}, ExtensionSemantics::kGrounded};
  for (std::size_t a = 0; a < n; ++a) {
    if (in[a]) out.members.push_back(a);
  }
  return out;
}

namespace {

struct AttackMasks {
  std::vector<std::uint32_t> attackers;  // bit b set: b attacks a
  std::vector<std::uint32_t> targets;    // bit b set: a attacks b
};

AttackMasks MakeMasks(std::size_t n, const std::vector<IndexEdge>& attacks) {
  AttackMasks m{std::vector<std::uint32_t>(n, 0), std::vector<std::uint32_t>(n, 0)};
  for (const IndexEdge& e : attacks) {
    m.attackers[e.to] |= 1u << e.from;
    m.targets[e.from] |= 1u << e.to;
  }
  return m;
}

bool MaskAdmissible(std::uint32_t set, const AttackMasks& m) {
  std::uint32_t attacked_by_set = 0;
  std::uint32_t attackers_of_set = 0;
  for (std::size_t a = 0; a < m.targets.size(); ++a) {
    if ((set >> a) & 1u) {
      attacked_by_set |= m.targets[a];
      attackers_of_set |= m.attackers[a];
    }
  }
  if ((attacked_by_set & set) != 0) return false;
  return (attackers_of_set & ~attacked_by_set) == 0;
}

ArgumentSet FromMask(std::uint32_t mask, std::size_t n) {
  ArgumentSet out;
  for (std::size_t a = 0; a < n; ++a) {
    if ((mask >> a) & 1u) out.push_back(a);
  }
  return out;
}

}  // namespace

std::vector<AFExtension> AdmissibleSetsBruteForce(
    std::size_t n, const std::vector<IndexEdge>& attacks) {
  if (n > kBruteForceLimit) {
    throw Error(ErrorCode::kTooLarge,
                "admissible-set enumeration limited to " +
                    std::to_string(kBruteForceLimit) + " arguments");
  }
  const AttackMasks masks = MakeMasks(n, attacks);
  std::vector<AFExtension> out;
  for (std::uint32_t set = 0; set < (1u << n); ++set) {
    if (MaskAdmissible(set, masks)) {
      out.push_back({FromMask(set, n), ExtensionSemantics::kAdmissible});
    }
  }
  return out;
}

std::optional<ArgumentSet> FindAdmissibleSuperset(
    std::size_t n, const std::vector<IndexEdge>& attacks,
    const ArgumentSet& required) {
  if (n <= kBruteForceLimit) {
    for (const AFExtension& ext : AdmissibleSetsBruteForce(n, attacks)) {
      if (std::includes(ext.members.begin(), ext.members.end(),
                        required.begin(), required.end())) {
        return ext.members;
      }
    }
    return std::nullopt;
  }

  // Greedy defense closure.
  const Digraph g(n, attacks);
  std::vector<bool> member(n, false);
  for (std::size_t a : required) member[a] = true;
  auto as_set = [&member]() {
    ArgumentSet out;
    for (std::size_t a = 0; a < member.size(); ++a) {
      if (member[a]) out.push_back(a);
    }
    return out;
  };
  auto conflicts_with_set = [&](std::size_t d) {
    if (g.HasEdge(d, d)) return true;
    for (std::size_t x : g.Successors(d)) {
      if (member[x]) return true;
    }
    for (std::size_t x : g.Predecessors(d)) {
      if (member[x]) return true;
    }
    return false;
  };
  if (!IsConflictFree(as_set(), g)) return std::nullopt;
  for (std::size_t round = 0; round <= n; ++round) {
    std::vector<bool> defeated(n, false);
    for (std::size_t a = 0; a < n; ++a) {
      if (!member[a]) continue;
      for (std::size_t b : g.Successors(a)) defeated[b] = true;
    }
    std::set<std::size_t> undefended;
    for (std::size_t a = 0; a < n; ++a) {
      if (!member[a]) continue;
      for (std::size_t b : g.Predecessors(a)) {
        if (!defeated[b]) undefended.insert(b);
      }
    }
    if (undefended.empty()) return as_set();
    for (std::size_t attacker : undefended) {
      std::optional<std::size_t> defender;
      for (std::size_t d : g.Predecessors(attacker)) {
        if (!member[d] && !conflicts_with_set(d) &&
            (!defender || d < *defender)) {
          defender = d;
        }
      }
      if (!defender) return std::nullopt;
      member[*defender] = true;
    }
  }
  return std::nullopt;
}

std::vector<std::string> CycleNodeIds(const BipolarGraph& g) {
  const std::vector<bool> on_cycle = CycleNodes(g.Combined());
  std::vector<std::string> out;
  for (std::size_t a = 0; a < g.size(); ++a) {
    if (on_cycle[a]) out.push_back(g.ids[a]);
  }
  return out;
}

PropertyReport CheckDialecticalNonCircularity(const BipolarGraph& g) {
  PropertyReport report;
  report.property = "dialectical_non_circularity";
  const auto cycle = FindCycle(g.Combined());
  if (!cycle) return report;

  const std::set<IndexEdge> supports(g.supports.begin(), g.supports.end());
  std::size_t support_edges = 0;
  Witness witness;
  for (std::size_t i = 0; i < cycle->size(); ++i) {
    const std::size_t from = (*cycle)[i];
    const std::size_t to = (*cycle)[(i + 1) % cycle->size()];
    if (supports.count({from, to}) != 0) ++support_edges;
    witness.ids.push_back(g.ids[from]);
  }
  if (support_edges == cycle->size()) {
    witness.kind = "pure_support_cycle";
  } else if (support_edges == 0) {
    witness.kind = "pure_attack_cycle";
  } else {
    witness.kind = "mixed_cycle";
  }
  report.verdict = Verdict::kFails;
  report.witnesses.push_back(std::move(witness));
  return report;
}

namespace {

std::vector<std::size_t> RequirePredictionArguments(
    const ArgumentativeExplanation& e, std::string_view property) {
  std::vector<std::size_t> out = e.PredictionArguments();
  if (out.empty()) {
    throw Error(ErrorCode::kMissingPredictionRole,
                std::string(property) + " needs an argument concluding the prediction");
  }
  return out;
}

// Declared rebuttals count; unspecified attacks are classified, and an
// unsupported classification counts as a rebuttal.
bool IsRebuttal(const ArgumentativeExplanation& e, const KindedAttack& attack,
                const TextOracle& oracle) {
  switch (attack.kind) {
    case AttackKind::kRebut: return true;
    case AttackKind::kUndercut: return false;
    case AttackKind::kUnspecified: {
      const EdgeClass c = ClassifyEdge(e, attack.edge.from, attack.edge.to, oracle);
      return c == EdgeClass::kRebut || c == EdgeClass::kUnsupported;
    }
  }
  return true;
}

std::string FormatStrengths(const ArgumentativeExplanation& e,
                            const StrengthMap& strengths) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << "strengths:";
  for (std::size_t a = 0; a < e.arguments().size(); ++a) {
    out << ' ' << e.arguments()[a].id << '=' << strengths.strength[a];
  }
  return out.str();
}

}  // namespace

PropertyReport CheckDialecticalFaithfulness(
    const ArgumentativeExplanation& e, const Prediction& prediction,
    const TextOracle& oracle, const FaithfulnessOptions& options,
    const GradualSemantics* semantics) {
  const std::vector<std::size_t> for_prediction =
      RequirePredictionArguments(e, "dialectical faithfulness");
  const ConfidenceBand band = BandOf(prediction.confidence, options.bands);
  std::vector<bool> is_prediction_arg(e.arguments().size(), false);
  for (std::size_t a : for_prediction) is_prediction_arg[a] = true;
  const auto& args = e.arguments();

  PropertyReport report;
  report.property = "dialectical_faithfulness";
  if (band == ConfidenceBand::kMedium) {
    report.verdict = Verdict::kNotAssessed;
    report.notes = "Medium band: faithfulness is only defined for Top, High and Low";
    return report;
  }
  if (band == ConfidenceBand::kTop) {
    for (const KindedAttack& attack : e.attacks()) {
      if (is_prediction_arg[attack.edge.to] && IsRebuttal(e, attack, oracle)) {
        report.verdict = Verdict::kFails;
        report.witnesses.push_back(
            {"rebutting_attacker",
             {args[attack.edge.from].id, args[attack.edge.to].id}});
      }
    }
    report.notes = "Top band: no rebuttal of a prediction argument allowed";
    return report;
  }

  const ClampedAdditiveSemantics fallback(options.base_score);
  const StrengthMap strengths =
      (semantics ? *semantics : static_cast<const GradualSemantics&>(fallback))
          .Compute(ToBipolarGraph(e));
  const auto& sigma = strengths.strength;
  report.notes = FormatStrengths(e, strengths);

  if (band == ConfidenceBand::kHigh) {
    for (const KindedAttack& attack : e.attacks()) {
      const std::size_t target = attack.edge.to;
      if (is_prediction_arg[target] && !(sigma[target] > sigma[attack.edge.from])) {
        report.verdict = Verdict::kFails;
        report.witnesses.push_back(
            {"attacker_not_weaker", {args[attack.edge.from].id, args[target].id}});
      }
    }
    return report;
  }

  // Low band.
  double strongest_prediction_arg = 0.0;
  bool all_weak = true;
  for (std::size_t a : for_prediction) {
    strongest_prediction_arg = std::max(strongest_prediction_arg, sigma[a]);
    if (sigma[a] > options.weak_threshold) all_weak = false;
  }
  if (all_weak) return report;
  for (const KindedAttack& attack : e.attacks()) {
    if (is_prediction_arg[attack.edge.to] && IsRebuttal(e, attack, oracle) &&
        sigma[attack.edge.from] > strongest_prediction_arg) {
      return report;
    }
  }
  report.verdict = Verdict::kFails;
  Witness strong{"strong_prediction_argument", {}};
  for (std::size_t a : for_prediction) {
    if (sigma[a] > options.weak_threshold) strong.ids.push_back(args[a].id);
  }
  report.witnesses.push_back(std::move(strong));
  return report;
}

PropertyReport CheckAcceptability(const ArgumentativeExplanation& e,
                                  const Prediction& prediction,
                                  const BandThresholds& bands) {
  ArgumentSet required = RequirePredictionArguments(e, "acceptability");
  const ConfidenceBand band = BandOf(prediction.confidence, bands);
  const auto& args = e.arguments();

  PropertyReport report;
  report.property = "acceptability";
  if (band == ConfidenceBand::kMedium) {
    report.verdict = Verdict::kNotAssessed;
    report.notes = "Medium band: acceptability is only defined for Top, High and Low";
    return report;
  }
  const BipolarGraph g = ToBipolarGraph(e);
  const auto found = FindAdmissibleSuperset(g.size(), g.attacks, required);
  if (g.size() > kBruteForceLimit) {
    report.notes = "greedy defense closure (more than " +
                   std::to_string(kBruteForceLimit) + " arguments)";
  }

  if (band == ConfidenceBand::kLow) {
    if (found) {
      report.verdict = Verdict::kFails;
      Witness w{"admissible_superset", {}};
      for (std::size_t a : *found) w.ids.push_back(args[a].id);
      report.witnesses.push_back(std::move(w));
    }
    return report;
  }

  if (!found) {
    report.verdict = Verdict::kFails;
    const Digraph attack_graph = g.AttackGraph();
    Witness w{"undefended_attacker", {}};
    std::set<std::size_t> listed;
    for (std::size_t a : required) {
      for (std::size_t b : attack_graph.Predecessors(a)) {
        if (attack_graph.Predecessors(b).empty() && listed.insert(b).second) {
          w.ids.push_back(args[b].id);
        }
      }
    }
    if (w.ids.empty()) {
      w.kind = "no_admissible_superset";
      for (std::size_t a : required) w.ids.push_back(args[a].id);
    }
    report.witnesses.push_back(std::move(w));
  }
  return report;
}

}  // namespace rationale
