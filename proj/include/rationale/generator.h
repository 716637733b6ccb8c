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

#ifndef RATIONALE_GENERATOR_H_
#define RATIONALE_GENERATOR_H_

// Seeded document generation and single-defect mutation for property and
// metamorphic tests.
//
// Proposition texts come from a fixed vocabulary. Every text carries two tags
// unique to its proposition, so two distinct generated texts share at most
// half of their content tokens: the lexical oracle never sees a contradiction
// between them, whatever negations were inserted. A contradiction_pair defect
// copies a text with its negation parity flipped, which the lexical rule
// always flags.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "rationale/model.h"

namespace rationale {

enum class Defect {
  kSelfLoop,
  kCycle,
  kIsolatedNode,
  kUndefendedAttack,
  kContradictionPair,
};

std::string_view DefectName(Defect defect);
std::optional<Defect> ParseDefect(std::string_view name);

struct GenSpec {
  std::uint64_t seed = 0;
  std::size_t n_props = 4;  // deductive / free-form
  std::size_t n_args = 4;   // argumentative
  double edge_probability = 0.2;
  std::set<Defect> defects;
};

// Throw Error(kInvalidArgument) for an invalid spec and
// Error(kInapplicableDefect) when a requested defect cannot be injected.
ExplanationDocument GenFreeForm(const GenSpec& spec);
// Relation is a DAG in which every proposition reaches the prediction.
ExplanationDocument GenDeductive(const GenSpec& spec);
// Acyclic support/attack forest of depth <= 2 rooted at prediction arguments,
// plus extra back edges drawn with edge_probability.
ExplanationDocument GenArgumentative(const GenSpec& spec);

// Adds exactly one defect, leaving the rest of the document untouched.
// `seed` picks among eligible targets.
ExplanationDocument Mutate(const ExplanationDocument& doc, Defect defect,
                           std::uint64_t seed = 0);

// Toggles the negation of a text: removes a " not " if present, otherwise
// inserts "not" after the second word.
std::string FlipNegation(std::string_view text);

}  // namespace rationale

#endif  // RATIONALE_GENERATOR_H_
