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

#include "rationale/generator.h"

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "rationale/errors.h"
#include "rationale/graph.h"

namespace rationale {

namespace {

constexpr std::array<std::string_view, 12> kAdjectives = {
    "coastal", "northern", "annual", "private", "federal", "rural",
    "regional", "urban", "seasonal", "public", "municipal", "national"};
constexpr std::array<std::string_view, 12> kNouns = {
    "reservoir", "budget", "turnout", "harvest", "census", "tariff",
    "railway", "hospital", "vaccine", "pension", "factory", "election"};
constexpr std::array<std::string_view, 12> kVerbs = {
    "exceeds", "reduces", "doubles", "delays", "funds", "predicts",
    "restricts", "raises", "matches", "replaces", "expands", "halves"};
constexpr std::array<std::string_view, 12> kObjects = {
    "capacity", "forecasts", "revenue", "wages", "emissions", "imports",
    "exports", "rainfall", "enrollment", "inflation", "mortality", "output"};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t Below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  double Unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool Chance(double p) { return Unit() < p; }

 private:
  std::mt19937_64 engine_;
};

template <std::size_t N>
std::string_view Pick(Rng& rng, const std::array<std::string_view, N>& words) {
  return words[rng.Below(N)];
}

// Six content tokens, two of them unique to `tag`.
std::string MakeText(Rng& rng, std::size_t tag) {
  std::string out;
  for (std::string_view w : {Pick(rng, kAdjectives), Pick(rng, kNouns),
                             Pick(rng, kVerbs), Pick(rng, kObjects)}) {
    out += w;
    out += ' ';
  }
  const std::string t = std::to_string(tag);
  return out + "q" + t + "x r" + t + "z";
}

// Evidence passage: the proposition text followed by tag-unique filler, so a
// passage is never dominated lexically by the propositions quoted from it.
std::string MakePassage(const std::string& quoted, std::size_t tag) {
  const std::string t = std::to_string(tag);
  std::string out = quoted + ". ";
  for (char c : std::string_view("uvwxyz")) {
    out += "e" + t + c;
    if (c != 'z') out += ' ';
  }
  return out;
}

void CheckSpec(const GenSpec& spec, std::size_t n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "generator needs n >= 1");
  if (!(spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "edge_probability must lie in [0, 1]");
  }
}

ExplanationDocument NewDocument(Format format, const GenSpec& spec, Rng& rng) {
  ExplanationDocument doc;
  doc.format = format;
  doc.id = std::string(FormatName(format)) + "-" + std::to_string(spec.seed);
  doc.prediction.label = rng.Chance(0.5) ? "Supported" : "Refuted";
  doc.prediction.confidence = static_cast<double>(rng.Below(1001)) / 1000.0;
  doc.prediction.model_id = "generator";
  doc.meta["generator_seed"] = std::to_string(spec.seed);
  return doc;
}

void AddPrediction(ExplanationDocument& doc, const std::string& text) {
  doc.input.claim = text;
  doc.propositions.push_back({"p0", text, {SourceKind::kClaim, 0}, true});
}

// Adds proposition `tag`; `evidence` forces an evidence source, otherwise the
// source is drawn and external texts may be negated.
void AddProposition(ExplanationDocument& doc, Rng& rng, std::size_t tag,
                    bool evidence) {
  std::string text = MakeText(rng, tag);
  Proposition p{"p" + std::to_string(tag), text, {SourceKind::kExternal, 0}, false};
  if (evidence || rng.Chance(0.5)) {
    p.source = {SourceKind::kEvidence, doc.input.evidence.size()};
    doc.input.evidence.push_back(MakePassage(text, tag));
  } else if (rng.Chance(0.5)) {
    p.text = FlipNegation(text);
  }
  doc.propositions.push_back(std::move(p));
}

ExplanationDocument ApplyDefects(ExplanationDocument doc, const GenSpec& spec) {
  std::uint64_t salt = 1;
  for (Defect d : spec.defects) doc = Mutate(doc, d, spec.seed * 31 + salt++);
  return doc;
}

std::string FreshId(const std::vector<std::string>& used, char prefix) {
  for (std::size_t k = used.size();; ++k) {
    std::string id = prefix + std::to_string(k);
    if (std::find(used.begin(), used.end(), id) == used.end()) return id;
  }
}

std::vector<std::string> PropositionIds(const ExplanationDocument& doc) {
  std::vector<std::string> ids;
  for (const Proposition& p : doc.propositions) ids.push_back(p.id);
  return ids;
}

std::vector<std::string> ArgumentIds(const ExplanationDocument& doc) {
  std::vector<std::string> ids;
  for (const Argument& a : doc.arguments) ids.push_back(a.id);
  return ids;
}

// Appends a fresh external proposition and returns its id.
std::string AddFreshProposition(ExplanationDocument& doc, Rng& rng) {
  const std::string id = FreshId(PropositionIds(doc), 'p');
  const std::size_t tag = std::stoul(id.substr(1)) + 1000;
  doc.propositions.push_back({id, MakeText(rng, tag), {SourceKind::kExternal, 0}, false});
  return id;
}

Error Inapplicable(Defect d, std::string_view why) {
  return Error(ErrorCode::kInapplicableDefect,
               std::string(DefectName(d)) + ": " + std::string(why));
}

bool HasArgumentEdge(const ExplanationDocument& doc, const std::string& from,
                     const std::string& to) {
  auto same = [&](const auto& e) { return e.from == from && e.to == to; };
  return std::any_of(doc.supports.begin(), doc.supports.end(), same) ||
         std::any_of(doc.attacks.begin(), doc.attacks.end(), same);
}

// Index graph of a document's relation (deductive) or supports ∪ attacks.
struct IndexedGraph {
  std::vector<std::string> ids;
  std::vector<IndexEdge> edges;
};

IndexedGraph GraphOf(const ExplanationDocument& doc) {
  IndexedGraph g;
  const bool args = doc.format == Format::kArgumentative;
  g.ids = args ? ArgumentIds(doc) : PropositionIds(doc);
  auto index = [&g](const std::string& id) {
    return static_cast<std::size_t>(std::find(g.ids.begin(), g.ids.end(), id) -
                                    g.ids.begin());
  };
  auto add = [&](const std::string& from, const std::string& to) {
    g.edges.push_back({index(from), index(to)});
  };
  if (args) {
    for (const SupportEdge& e : doc.supports) add(e.from, e.to);
    for (const AttackEdge& e : doc.attacks) add(e.from, e.to);
  } else {
    for (const RelationEdge& e : doc.relations) add(e.from, e.to);
  }
  return g;
}

void AddSelfLoop(ExplanationDocument& doc, Rng& rng) {
  const IndexedGraph g = GraphOf(doc);
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < g.ids.size(); ++i) {
    const IndexEdge loop{i, i};
    if (std::find(g.edges.begin(), g.edges.end(), loop) == g.edges.end()) {
      eligible.push_back(i);
    }
  }
  if (eligible.empty()) throw Inapplicable(Defect::kSelfLoop, "every node has a self-loop");
  const std::string& id = g.ids[eligible[rng.Below(eligible.size())]];
  if (doc.format == Format::kArgumentative) {
    doc.attacks.push_back({id, id, AttackKind::kUnspecified});
  } else {
    doc.relations.push_back({id, id});
  }
}

void AddCycle(ExplanationDocument& doc, Rng& rng) {
  const IndexedGraph g = GraphOf(doc);
  const std::size_t n = g.ids.size();
  const bool undirected = doc.format == Format::kDeductive && !doc.directed;
  const Digraph graph = undirected ? Digraph(n, g.edges).Symmetrized()
                                   : Digraph(n, g.edges);
  // Candidate back edges (v, u) closing a path u ->...-> v of length >= 1
  // (>= 2 when undirected, where a reversed edge is the same edge).
  std::vector<IndexEdge> candidates;
  for (std::size_t u = 0; u < n; ++u) {
    const std::size_t start[] = {u};
    const std::vector<bool> reach = ReachableFrom(graph, start);
    for (std::size_t v = 0; v < n; ++v) {
      if (v == u || !reach[v] || graph.HasEdge(v, u)) continue;
      if (undirected && graph.HasEdge(u, v)) continue;
      candidates.push_back({v, u});
    }
  }
  if (candidates.empty()) {
    throw Inapplicable(Defect::kCycle, "no path to close into a cycle");
  }
  const IndexEdge e = candidates[rng.Below(candidates.size())];
  if (doc.format == Format::kArgumentative) {
    doc.supports.push_back({g.ids[e.from], g.ids[e.to], SupportKind::kUnspecified});
  } else {
    doc.relations.push_back({g.ids[e.from], g.ids[e.to]});
  }
}

void AddIsolatedNode(ExplanationDocument& doc, Rng& rng) {
  const std::string prop = AddFreshProposition(doc, rng);
  if (doc.format == Format::kArgumentative) {
    doc.arguments.push_back({FreshId(ArgumentIds(doc), 'a'), {}, prop});
  }
}

void AddUndefendedAttack(ExplanationDocument& doc, Rng& rng) {
  if (doc.format != Format::kArgumentative) {
    throw Inapplicable(Defect::kUndefendedAttack, "needs an argumentative document");
  }
  std::optional<std::string> prediction;
  for (const Proposition& p : doc.propositions) {
    if (p.IsPrediction()) prediction = p.id;
  }
  std::vector<std::string> targets;
  for (const Argument& a : doc.arguments) {
    if (prediction && a.conclusion == *prediction) targets.push_back(a.id);
  }
  if (targets.empty()) {
    throw Inapplicable(Defect::kUndefendedAttack, "no argument concludes the prediction");
  }
  const std::string target = targets[rng.Below(targets.size())];
  const std::string prop = AddFreshProposition(doc, rng);
  const std::string attacker = FreshId(ArgumentIds(doc), 'a');
  doc.arguments.push_back({attacker, {}, prop});
  doc.attacks.push_back({attacker, target, AttackKind::kRebut});
}

void AddContradictionPair(ExplanationDocument& doc, Rng& rng) {
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < doc.propositions.size(); ++i) {
    if (!doc.propositions[i].IsPrediction()) eligible.push_back(i);
  }
  if (eligible.empty()) {
    for (std::size_t i = 0; i < doc.propositions.size(); ++i) eligible.push_back(i);
  }
  if (eligible.empty()) {
    throw Inapplicable(Defect::kContradictionPair, "no proposition to contradict");
  }
  const Proposition& original = doc.propositions[eligible[rng.Below(eligible.size())]];
  Proposition copy{FreshId(PropositionIds(doc), 'p'), FlipNegation(original.text),
                   {SourceKind::kExternal, 0}, false};
  doc.propositions.push_back(std::move(copy));
}

}  // namespace

std::string_view DefectName(Defect defect) {
  switch (defect) {
    case Defect::kSelfLoop: return "self_loop";
    case Defect::kCycle: return "cycle";
    case Defect::kIsolatedNode: return "isolated_node";
    case Defect::kUndefendedAttack: return "undefended_attack";
    case Defect::kContradictionPair: return "contradiction_pair";
  }
  return "";
}

std::optional<Defect> ParseDefect(std::string_view name) {
  for (Defect d : {Defect::kSelfLoop, Defect::kCycle, Defect::kIsolatedNode,
                   Defect::kUndefendedAttack, Defect::kContradictionPair}) {
    if (DefectName(d) == name) return d;
  }
  return std::nullopt;
}

std::string FlipNegation(std::string_view text) {
  std::string s(text);
  if (const auto pos = s.find(" not "); pos != std::string::npos) {
    return s.erase(pos, 4);
  }
  std::size_t spaces = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == ' ' && ++spaces == 2) return s.insert(i, " not");
  }
  return s + " not";
}

ExplanationDocument GenFreeForm(const GenSpec& spec) {
  CheckSpec(spec, spec.n_props);
  Rng rng(spec.seed);
  ExplanationDocument doc = NewDocument(Format::kFreeForm, spec, rng);
  AddPrediction(doc, MakeText(rng, 0));
  for (std::size_t i = 1; i < spec.n_props; ++i) AddProposition(doc, rng, i, i == 1);
  return ApplyDefects(std::move(doc), spec);
}

ExplanationDocument GenDeductive(const GenSpec& spec) {
  CheckSpec(spec, spec.n_props);
  Rng rng(spec.seed);
  ExplanationDocument doc = NewDocument(Format::kDeductive, spec, rng);
  AddPrediction(doc, MakeText(rng, 0));
  for (std::size_t i = 1; i < spec.n_props; ++i) {
    AddProposition(doc, rng, i, i == 1);
    const std::size_t parent = rng.Below(i);
    doc.relations.push_back({"p" + std::to_string(i), "p" + std::to_string(parent)});
    for (std::size_t j = 0; j < i; ++j) {
      if (j != parent && rng.Chance(spec.edge_probability)) {
        doc.relations.push_back({"p" + std::to_string(i), "p" + std::to_string(j)});
      }
    }
  }
  return ApplyDefects(std::move(doc), spec);
}

ExplanationDocument GenArgumentative(const GenSpec& spec) {
  CheckSpec(spec, spec.n_args);
  Rng rng(spec.seed);
  ExplanationDocument doc = NewDocument(Format::kArgumentative, spec, rng);
  AddPrediction(doc, MakeText(rng, 0));

  const std::size_t n = spec.n_args;
  const std::size_t roots = n > 3 && rng.Chance(0.5) ? 2 : 1;
  std::size_t tag = 1;
  std::vector<std::size_t> depth(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Argument arg{"a" + std::to_string(i), {}, "p0"};
    if (rng.Chance(0.5) || i == 0) {
      AddProposition(doc, rng, tag, i == 0);
      arg.premises.push_back(doc.propositions.back().id);
      ++tag;
    }
    if (i >= roots) {
      AddProposition(doc, rng, tag++, false);
      arg.conclusion = doc.propositions.back().id;
    }
    doc.arguments.push_back(std::move(arg));
    if (i < roots) continue;

    std::vector<std::size_t> parents;
    for (std::size_t j = 0; j < i; ++j) {
      if (depth[j] < 2) parents.push_back(j);
    }
    const std::size_t parent = parents[rng.Below(parents.size())];
    depth[i] = depth[parent] + 1;
    const std::string from = "a" + std::to_string(i);
    const std::string to = "a" + std::to_string(parent);
    if (rng.Chance(0.5)) {
      doc.supports.push_back({from, to, static_cast<SupportKind>(rng.Below(3))});
    } else {
      doc.attacks.push_back({from, to, static_cast<AttackKind>(rng.Below(3))});
    }
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const std::string from = "a" + std::to_string(i);
      const std::string to = "a" + std::to_string(j);
      if (!rng.Chance(spec.edge_probability) || HasArgumentEdge(doc, from, to)) continue;
      if (rng.Chance(0.5)) {
        doc.supports.push_back({from, to, SupportKind::kUnspecified});
      } else {
        doc.attacks.push_back({from, to, AttackKind::kUnspecified});
      }
    }
  }
  return ApplyDefects(std::move(doc), spec);
}

ExplanationDocument Mutate(const ExplanationDocument& doc, Defect defect,
                           std::uint64_t seed) {
  ExplanationDocument out = doc;
  Rng rng(seed);
  switch (defect) {
    case Defect::kSelfLoop:
    case Defect::kCycle:
      if (doc.format == Format::kFreeForm) {
        throw Inapplicable(defect, "free-form documents have no relation");
      }
      if (defect == Defect::kSelfLoop) {
        AddSelfLoop(out, rng);
      } else {
        AddCycle(out, rng);
      }
      break;
    case Defect::kIsolatedNode: AddIsolatedNode(out, rng); break;
    case Defect::kUndefendedAttack: AddUndefendedAttack(out, rng); break;
    case Defect::kContradictionPair: AddContradictionPair(out, rng); break;
  }
  return out;
}

}  // namespace rationale
