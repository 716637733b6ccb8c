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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "rationale/errors.h"
#include "rationale/generator.h"
#include "test_util.h"

namespace rationale {
namespace {

using testing::ArgumentDoc;
using testing::LoadFixture;

ArgumentativeExplanation Fixture(const std::string& name) {
  return ValidateArgumentative(LoadFixture(name));
}

BipolarGraph Graph(std::size_t n, std::vector<IndexEdge> supports,
                   std::vector<IndexEdge> attacks) {
  BipolarGraph g;
  for (std::size_t i = 0; i < n; ++i) g.ids.push_back("a" + std::to_string(i + 1));
  g.supports = std::move(supports);
  g.attacks = std::move(attacks);
  return g;
}

TEST(ClassifyEdgeTest, KingKinds) {
  const ArgumentativeExplanation e1 = Fixture("king_reasons.json");
  const PropositionTable& props = e1.propositions();
  testing::ScriptedOracle oracle;
  const std::string& c3 = props[*props.IndexOf("c3")].text;
  const std::string& p2 = props[*props.IndexOf("p2")].text;
  const std::string& y = props[*props.IndexOf("y")].text;
  oracle.SetImplication(c3, p2);
  oracle.SetImplication(y, y);
  EXPECT_EQ(ClassifyEdge(e1, *e1.ArgumentIndex("a3"), *e1.ArgumentIndex("a2"), oracle),
            EdgeClass::kReasons);

  const ArgumentativeExplanation e2 = Fixture("king_accrual.json");
  EXPECT_EQ(ClassifyEdge(e2, *e2.ArgumentIndex("a1"), *e2.ArgumentIndex("a2"), oracle),
            EdgeClass::kAccrual);
  EXPECT_EQ(ClassifyEdge(e2, *e2.ArgumentIndex("a1"), *e2.ArgumentIndex("a3"), oracle),
            EdgeClass::kUnsupported);
}

TEST(ClassifyEdgeTest, LexicalRebutAndUndercut) {
  ExplanationDocument doc = ArgumentDoc(2, {1}, {}, {{2, 1}});
  doc.propositions[1].text = "the bridge will not reopen";
  const ArgumentativeExplanation e = ValidateArgumentative(doc);
  EXPECT_EQ(ClassifyEdge(e, 1, 0, LexicalOracle()), EdgeClass::kRebut);

  doc.arguments[0].premises = {"p"};
  doc.propositions.push_back({"p", "the cables are sound", {SourceKind::kExternal, 0}, false});
  doc.propositions[1].text = "the cables are not sound";
  const ArgumentativeExplanation u = ValidateArgumentative(doc);
  EXPECT_EQ(ClassifyEdge(u, 1, 0, LexicalOracle()), EdgeClass::kUndercut);
}

TEST(ClassifyEdgeTest, SelfPairNeverRebutsLexically) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenSpec spec;
    spec.seed = seed;
    spec.n_args = 2 + seed % 5;
    const ArgumentativeExplanation e = ValidateArgumentative(GenArgumentative(spec));
    for (std::size_t a = 0; a < e.arguments().size(); ++a) {
      EXPECT_NE(ClassifyEdge(e, a, a, LexicalOracle()), EdgeClass::kRebut);
    }
  }
}

TEST(StrengthTest, HandChecks) {
  EXPECT_DOUBLE_EQ(StrengthsAcyclic(Graph(1, {}, {})).strength[0], 0.5);
  EXPECT_DOUBLE_EQ(StrengthsAcyclic(Graph(2, {{1, 0}}, {})).strength[0], 1.0);
  EXPECT_DOUBLE_EQ(StrengthsAcyclic(Graph(2, {}, {{1, 0}})).strength[0], 0.0);
  // Chain: a3 supports a2 supports a1 (clamped at every step).
  const StrengthMap chain = StrengthsAcyclic(Graph(3, {{2, 1}, {1, 0}}, {}));
  EXPECT_EQ(chain.strength, (std::vector<double>{1.0, 1.0, 0.5}));
  EXPECT_DOUBLE_EQ(StrengthsAcyclic(Graph(1, {}, {}), 0.2).strength[0], 0.2);
  EXPECT_THROW(StrengthsAcyclic(Graph(2, {{0, 1}}, {{1, 0}})), Error);
}

TEST(StrengthTest, BridgeOrderings) {
  const StrengthMap middle =
      StrengthsAcyclic(ToBipolarGraph(Fixture("bridge_high.json")));
  EXPECT_DOUBLE_EQ(middle.strength[1], 0.0);  // a2 undercut
  EXPECT_DOUBLE_EQ(middle.strength[3], 1.0);  // a4 still strong
  EXPECT_GT(middle.strength[3], middle.strength[2]);

  const StrengthMap right =
      StrengthsAcyclic(ToBipolarGraph(Fixture("bridge_low.json")));
  EXPECT_EQ(right.strength, (std::vector<double>{0.0, 0.0, 0.5, 0.5}));
  EXPECT_LE(right.strength[1], 0.5);  // a2 is weak overall
}

TEST(StrengthTest, MonotoneUnderFreshParents) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 1 + rng() % 7;
    BipolarGraph g = Graph(n, {}, {});
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        const auto r = rng() % 4;
        if (r == 0) g.supports.push_back({v, u});
        if (r == 1) g.attacks.push_back({v, u});
      }
    }
    const StrengthMap base = StrengthsAcyclic(g);
    for (double s : base.strength) {
      EXPECT_GE(s, 0.0);
      EXPECT_LE(s, 1.0);
    }
    const std::size_t target = rng() % n;
    BipolarGraph sup = g;
    sup.ids.push_back("fresh");
    sup.supports.push_back({n, target});
    BipolarGraph att = g;
    att.ids.push_back("fresh");
    att.attacks.push_back({n, target});
    EXPECT_GE(StrengthsAcyclic(sup).strength[target], base.strength[target]);
    EXPECT_LE(StrengthsAcyclic(att).strength[target], base.strength[target]);
  }
}

TEST(GroundedTest, Examples) {
  EXPECT_EQ(GroundedExtension(2, {{0, 1}}).members, (ArgumentSet{0}));
  EXPECT_EQ(GroundedExtension(3, {{0, 1}, {1, 0}}).members, (ArgumentSet{2}));
  EXPECT_EQ(GroundedExtension(3, {{0, 1}, {1, 2}}).members, (ArgumentSet{0, 2}));
  EXPECT_EQ(GroundedExtension(2, {{0, 1}}).semantics, ExtensionSemantics::kGrounded);
}

std::vector<ArgumentSet> Members(const std::vector<AFExtension>& exts) {
  std::vector<ArgumentSet> out;
  for (const AFExtension& e : exts) out.push_back(e.members);
  return out;
}

TEST(AdmissibleTest, Examples) {
  EXPECT_EQ(AdmissibleSetsBruteForce(3, {}).size(), 8u);
  EXPECT_EQ(Members(AdmissibleSetsBruteForce(2, {{0, 1}})),
            (std::vector<ArgumentSet>{{}, {0}}));
  EXPECT_EQ(Members(AdmissibleSetsBruteForce(2, {{0, 1}, {1, 0}})),
            (std::vector<ArgumentSet>{{}, {0}, {1}}));
  EXPECT_THROW(AdmissibleSetsBruteForce(13, {}), Error);
}

TEST(AdmissibleTest, AgreesWithDirectDefinition) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = rng() % 7;
    const auto attacks = testing::RandomEdges(rng, n, 0.25);
    auto expected = testing::BruteAdmissible(n, attacks);
    auto actual = Members(AdmissibleSetsBruteForce(n, attacks));
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    EXPECT_EQ(actual, expected);
  }
}

TEST(AdmissibleTest, GreedySupersetOnLargeFrameworks) {
  // 20 arguments: the chain 18 -> 17 -> ... -> 0 is defended from its
  // unattacked head; 19 is a bystander.
  std::vector<IndexEdge> chain;
  for (std::size_t i = 18; i > 0; --i) chain.push_back({i, i - 1});
  const auto found = FindAdmissibleSuperset(20, chain, {0});
  ASSERT_TRUE(found);
  EXPECT_TRUE(IsAdmissible(*found, Digraph(20, chain)));
  EXPECT_TRUE(std::binary_search(found->begin(), found->end(), std::size_t{0}));
  // Adding 19 -> 18 leaves the head undefended.
  chain.push_back({19, 18});
  EXPECT_FALSE(FindAdmissibleSuperset(20, chain, {0}));
  // Self-attacking required member can never be admissible.
  std::vector<IndexEdge> self = {{0, 0}};
  EXPECT_FALSE(FindAdmissibleSuperset(20, self, {0}));
}

TEST(DialecticalNonCircularityTest, CycleShapes) {
  const struct {
    const char* file;
    const char* kind;
  } cases[] = {{"cycle_support.json", "pure_support_cycle"},
               {"cycle_attack.json", "pure_attack_cycle"},
               {"cycle_mixed.json", "mixed_cycle"}};
  for (const auto& c : cases) {
    const BipolarGraph g = ToBipolarGraph(Fixture(c.file));
    const PropertyReport r = CheckDialecticalNonCircularity(g);
    ASSERT_EQ(r.verdict, Verdict::kFails) << c.file;
    EXPECT_EQ(r.property, "dialectical_non_circularity");
    EXPECT_EQ(r.witnesses[0].kind, c.kind) << c.file;
    std::vector<std::string> ids = r.witnesses[0].ids;
    std::sort(ids.begin(), ids.end());
    EXPECT_EQ(ids, (std::vector<std::string>{"a1", "a2", "a3"}));
    EXPECT_EQ(CycleNodeIds(g), (std::vector<std::string>{"a1", "a2", "a3"}));
  }
}

TEST(DialecticalNonCircularityTest, SelfAttackAndTree) {
  const PropertyReport self = CheckDialecticalNonCircularity(Graph(1, {}, {{0, 0}}));
  ASSERT_EQ(self.verdict, Verdict::kFails);
  EXPECT_EQ(self.witnesses[0].ids, (std::vector<std::string>{"a1"}));
  EXPECT_EQ(CycleNodeIds(Graph(1, {}, {{0, 0}})), (std::vector<std::string>{"a1"}));
  const BipolarGraph tree = ToBipolarGraph(Fixture("bridge_top.json"));
  EXPECT_TRUE(CheckDialecticalNonCircularity(tree).holds());
  EXPECT_TRUE(CycleNodeIds(tree).empty());
}

TEST(CycleNodeIdsTest, AgreesWithSimpleCycleEnumeration) {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 1 + rng() % 8;
    const BipolarGraph g = Graph(n, testing::RandomEdges(rng, n, 0.12),
                                 testing::RandomEdges(rng, n, 0.08));
    std::vector<IndexEdge> all = g.supports;
    all.insert(all.end(), g.attacks.begin(), g.attacks.end());
    std::set<std::string> expected;
    for (const auto& cycle : testing::BruteSimpleCycles(n, all)) {
      for (std::size_t v : cycle) expected.insert(g.ids[v]);
    }
    const auto ids = CycleNodeIds(g);
    EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()), expected);
  }
}

TEST(FaithfulnessTest, BridgeVerdicts) {
  const char* files[] = {"bridge_top.json", "bridge_high.json",
                         "bridge_low.json"};
  for (const char* f : files) {
    const ExplanationDocument doc = LoadFixture(f);
    const PropertyReport r = CheckDialecticalFaithfulness(
        ValidateArgumentative(doc), doc.prediction, LexicalOracle());
    EXPECT_TRUE(r.holds()) << f;
    EXPECT_EQ(r.property, "dialectical_faithfulness");
  }
}

TEST(FaithfulnessTest, TopBandRebuttal) {
  ExplanationDocument doc = ArgumentDoc(2, {1}, {}, {{2, 1}}, 1.0);
  doc.attacks[0].kind = AttackKind::kRebut;
  PropertyReport r =
      CheckDialecticalFaithfulness(ValidateArgumentative(doc), doc.prediction, LexicalOracle());
  ASSERT_EQ(r.verdict, Verdict::kFails);
  EXPECT_EQ(r.witnesses[0].kind, "rebutting_attacker");
  // Unspecified attacks that classify as unsupported count as rebuttals.
  doc.attacks[0].kind = AttackKind::kUnspecified;
  r = CheckDialecticalFaithfulness(ValidateArgumentative(doc), doc.prediction, LexicalOracle());
  EXPECT_EQ(r.verdict, Verdict::kFails);
  doc.attacks[0].kind = AttackKind::kUndercut;
  r = CheckDialecticalFaithfulness(ValidateArgumentative(doc), doc.prediction, LexicalOracle());
  EXPECT_TRUE(r.holds());
}

TEST(FaithfulnessTest, HighBandAttackerNotWeaker) {
  const ExplanationDocument doc = ArgumentDoc(2, {1}, {}, {{2, 1}}, 0.8);
  const PropertyReport r =
      CheckDialecticalFaithfulness(ValidateArgumentative(doc), doc.prediction, LexicalOracle());
  ASSERT_EQ(r.verdict, Verdict::kFails);
  EXPECT_EQ(r.witnesses[0].kind, "attacker_not_weaker");
}

TEST(FaithfulnessTest, MediumBandNotAssessedAndCycleThrows) {
  const ExplanationDocument medium = ArgumentDoc(2, {1}, {}, {{2, 1}}, 0.6);
  EXPECT_EQ(CheckDialecticalFaithfulness(ValidateArgumentative(medium), medium.prediction,
                                         LexicalOracle())
                .verdict,
            Verdict::kNotAssessed);
  const ExplanationDocument cyclic = LoadFixture("cycle_support.json");
  try {
    CheckDialecticalFaithfulness(ValidateArgumentative(cyclic), cyclic.prediction,
                                 LexicalOracle());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCyclicFramework);
  }
}

TEST(AcceptabilityTest, BridgeVerdicts) {
  const ExplanationDocument left = LoadFixture("bridge_top.json");
  EXPECT_TRUE(CheckAcceptability(ValidateArgumentative(left), left.prediction).holds());
  const ExplanationDocument middle = LoadFixture("bridge_high.json");
  EXPECT_TRUE(CheckAcceptability(ValidateArgumentative(middle), middle.prediction).holds());
  const ExplanationDocument right = LoadFixture("bridge_low.json");
  const PropertyReport r = CheckAcceptability(ValidateArgumentative(right), right.prediction);
  ASSERT_EQ(r.verdict, Verdict::kFails);
  EXPECT_EQ(r.witnesses[0].kind, "admissible_superset");
}

TEST(AcceptabilityTest, DefendedPredictionArgument) {
  // a1 concludes y, a2 attacks a1, a3 attacks a2.
  const ExplanationDocument defended = ArgumentDoc(3, {1}, {}, {{2, 1}, {3, 2}}, 0.8);
  EXPECT_TRUE(
      CheckAcceptability(ValidateArgumentative(defended), defended.prediction).holds());
  const ExplanationDocument open = ArgumentDoc(2, {1}, {}, {{2, 1}}, 0.8);
  const PropertyReport r = CheckAcceptability(ValidateArgumentative(open), open.prediction);
  ASSERT_EQ(r.verdict, Verdict::kFails);
  EXPECT_EQ(r.witnesses[0].kind, "undefended_attacker");
  EXPECT_EQ(r.witnesses[0].ids, (std::vector<std::string>{"a2"}));
}

TEST(AcceptabilityTest, UnattackedPredictionIsAcceptable) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GenSpec spec;
    spec.seed = seed;
    spec.n_args = 2 + seed % 6;
    spec.edge_probability = 0.3;
    ExplanationDocument doc = GenArgumentative(spec);
    doc.prediction.confidence = 0.9;
    const ArgumentativeExplanation e = ValidateArgumentative(doc);
    bool attacked = false;
    for (const KindedAttack& a : e.attacks()) {
      for (std::size_t y : e.PredictionArguments()) attacked |= a.edge.to == y;
    }
    if (!attacked) EXPECT_TRUE(CheckAcceptability(e, doc.prediction).holds()) << seed;
  }
}

}  // namespace
}  // namespace rationale
