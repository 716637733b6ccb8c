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

#include "rationale/model.h"

#include <gtest/gtest.h>

#include "rationale/errors.h"
#include "test_util.h"

namespace rationale {
namespace {

using testing::LoadFixture;

bool HasCode(const std::vector<Violation>& violations, ErrorCode code) {
  for (const Violation& v : violations) {
    if (v.code == code) return true;
  }
  return false;
}

ExplanationDocument MinimalFreeForm() {
  ExplanationDocument doc;
  doc.id = "d";
  doc.format = Format::kFreeForm;
  doc.input.claim = "the claim";
  doc.prediction = {"Verified", 0.9, "m"};
  doc.propositions = {{"y", "the claim", {SourceKind::kClaim, 0}, true},
                      {"p1", "a reason", {SourceKind::kExternal, 0}, false}};
  return doc;
}

TEST(ModelTest, TuringFreeFormValidates) {
  const ExplanationDocument doc = LoadFixture("turing_free_form.json");
  const FreeFormExplanation e = ValidateFreeForm(doc);
  EXPECT_EQ(e.propositions().size(), 4u);
  ASSERT_TRUE(e.propositions().prediction());
  EXPECT_EQ(e.propositions()[*e.propositions().prediction()].id, "y");
}

TEST(ModelTest, EmptyPropositionList) {
  ExplanationDocument doc = MinimalFreeForm();
  doc.propositions.clear();
  EXPECT_TRUE(HasCode(Validate(doc), ErrorCode::kEmptyPropositionList));
  EXPECT_THROW(ValidateFreeForm(doc), ValidationError);
}

TEST(ModelTest, OnlyExternalPropositions) {
  ExplanationDocument doc = MinimalFreeForm();
  doc.propositions[0].source = {SourceKind::kPrediction, 0};
  EXPECT_TRUE(HasCode(Validate(doc), ErrorCode::kNoInputSourcedProposition));
}

TEST(ModelTest, DuplicateIdsAndRoles) {
  ExplanationDocument doc = MinimalFreeForm();
  doc.propositions[1].id = "y";
  EXPECT_TRUE(HasCode(Validate(doc), ErrorCode::kDuplicateId));
  doc = MinimalFreeForm();
  doc.propositions[1].prediction_role = true;
  EXPECT_TRUE(HasCode(Validate(doc), ErrorCode::kDuplicatePredictionRole));
  doc = MinimalFreeForm();
  doc.propositions[0].prediction_role = false;
  EXPECT_TRUE(HasCode(Validate(doc), ErrorCode::kMissingPredictionRole));
  EXPECT_TRUE(Validate(doc, {.for_prediction = false}).empty());
}

TEST(ModelTest, EmptyTextRejected) {
  ExplanationDocument doc = MinimalFreeForm();
  doc.propositions[1].text = "";
  EXPECT_TRUE(HasCode(Validate(doc), ErrorCode::kEmptyText));
}

TEST(ModelTest, DaffodilDeductiveValidates) {
  const DeductiveExplanation e = ValidateDeductive(LoadFixture("daffodil_chain.json"));
  EXPECT_EQ(e.relation(), (std::vector<IndexEdge>{{0, 1}, {1, 2}}));
  EXPECT_TRUE(e.directed());
}

TEST(ModelTest, DanglingEdge) {
  ExplanationDocument doc = LoadFixture("daffodil_chain.json");
  doc.relations.push_back({"p1", "p9"});
  const auto violations = Validate(doc);
  ASSERT_TRUE(HasCode(violations, ErrorCode::kDanglingEdge));
  EXPECT_EQ(violations.front().path, "/relations/2");
}

TEST(ModelTest, DuplicateEdge) {
  ExplanationDocument doc = LoadFixture("daffodil_chain.json");
  doc.relations.push_back({"p1", "p2"});
  EXPECT_TRUE(HasCode(Validate(doc), ErrorCode::kDuplicateEdge));
  doc = LoadFixture("daffodil_chain.json");
  doc.directed = false;
  doc.relations.push_back({"p2", "p1"});
  EXPECT_TRUE(HasCode(Validate(doc), ErrorCode::kDuplicateEdge));
}

TEST(ModelTest, SingleClaimPredictionDeductive) {
  ExplanationDocument doc;
  doc.id = "single";
  doc.format = Format::kDeductive;
  doc.input.claim = "c";
  doc.prediction = {"Verified", 0.5, ""};
  doc.propositions = {{"y", "c", {SourceKind::kClaim, 0}, true}};
  EXPECT_TRUE(Validate(doc).empty());
}

TEST(ModelTest, KingExplanationsValidate) {
  const ArgumentativeExplanation e1 =
      ValidateArgumentative(LoadFixture("king_reasons.json"));
  EXPECT_EQ(e1.PredictionArguments(), (std::vector<std::size_t>{0, 1}));
  const ArgumentativeExplanation e2 =
      ValidateArgumentative(LoadFixture("king_accrual.json"));
  EXPECT_EQ(e2.supports().size(), 3u);
}

TEST(ModelTest, ConflictingEdge) {
  ExplanationDocument doc = LoadFixture("king_reasons.json");
  doc.attacks.push_back({"a3", "a2", AttackKind::kUndercut});
  EXPECT_TRUE(HasCode(Validate(doc), ErrorCode::kConflictingEdge));
}

TEST(ModelTest, NoArgumentForPrediction) {
  ExplanationDocument doc = LoadFixture("king_reasons.json");
  doc.arguments[0].conclusion = "c3";
  doc.arguments[1].conclusion = "c3";
  EXPECT_TRUE(HasCode(Validate(doc), ErrorCode::kNoArgumentForPrediction));
}

TEST(ModelTest, ArgumentReferences) {
  ExplanationDocument doc = LoadFixture("king_reasons.json");
  doc.arguments[0].premises.push_back("y");
  EXPECT_TRUE(HasCode(Validate(doc), ErrorCode::kInvalidArgument));
  doc = LoadFixture("king_reasons.json");
  doc.arguments[2].premises = {"missing"};
  EXPECT_FALSE(Validate(doc).empty());
  doc = LoadFixture("king_reasons.json");
  doc.supports.push_back({"a3", "a9", SupportKind::kReasons});
  EXPECT_TRUE(HasCode(Validate(doc), ErrorCode::kDanglingEdge));
}

TEST(ModelTest, EnthymemeAllowed) {
  const ExplanationDocument doc = LoadFixture("bridge_top.json");
  EXPECT_TRUE(Validate(doc).empty());
}

TEST(ModelTest, WrongFormat) {
  const ExplanationDocument doc = LoadFixture("daffodil_chain.json");
  EXPECT_THROW(ValidateArgumentative(doc), ValidationError);
}

TEST(ModelTest, BandOf) {
  EXPECT_EQ(BandOf(1.0), ConfidenceBand::kTop);
  EXPECT_EQ(BandOf(0.99), ConfidenceBand::kTop);
  EXPECT_EQ(BandOf(0.93), ConfidenceBand::kHigh);
  EXPECT_EQ(BandOf(0.70), ConfidenceBand::kHigh);
  EXPECT_EQ(BandOf(0.6), ConfidenceBand::kMedium);
  EXPECT_EQ(BandOf(0.2), ConfidenceBand::kLow);
  EXPECT_EQ(BandOf(0.0), ConfidenceBand::kLow);
  EXPECT_EQ(BandOf(0.8, {0.95, 0.85, 0.6}), ConfidenceBand::kMedium);
  try {
    BandOf(1.7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfRangeConfidence);
  }
}

TEST(ModelTest, ValidationIsIdempotent) {
  const ExplanationDocument doc = LoadFixture("king_accrual.json");
  const ArgumentativeExplanation e = ValidateArgumentative(doc);
  const ExplanationDocument back = ToDocument(doc, e);
  EXPECT_EQ(ValidateArgumentative(back), e);
  EXPECT_EQ(back, doc);

  const ExplanationDocument d2 = LoadFixture("daffodil_chain.json");
  EXPECT_EQ(ToDocument(d2, ValidateDeductive(d2)), d2);
}

}  // namespace
}  // namespace rationale
