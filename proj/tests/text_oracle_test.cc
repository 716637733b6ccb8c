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

#include "rationale/text_oracle.h"

#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <random>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "rationale/errors.h"
#include "rationale/generator.h"

namespace rationale {
namespace {

TEST(LexicalOracleTest, ContradictionExamples) {
  const LexicalOracle oracle;
  EXPECT_FALSE(oracle.Judge("Turing died in 1954", "Turing died in 1954").contradiction);
  const RelationJudgement king = oracle.Judge("the USA has a king", "the USA has no king");
  EXPECT_TRUE(king.contradiction);
  EXPECT_DOUBLE_EQ(king.contradiction_score, 1.0);
  EXPECT_EQ(king.backend, "lexical");
  EXPECT_FALSE(oracle.Judge("daffodils are perennial", "the sky is blue").contradiction);
}

TEST(LexicalOracleTest, ImplicationExamples) {
  const LexicalOracle oracle;
  EXPECT_TRUE(oracle.Judge("some sentence here", "some sentence here").implication);
  EXPECT_TRUE(oracle.Judge("perennial plants live two years or more",
                           "plants live two years")
                  .implication);
  EXPECT_FALSE(oracle.Judge("the USA has no king", "the USA has a king").implication);
}

TEST(LexicalOracleTest, NegationMarkers) {
  const LexicalAnalysis a = AnalyzeText("It isn't raining, and we cannot never go; none!");
  EXPECT_EQ(a.negations, 4);
  const LexicalOracle oracle;
  EXPECT_TRUE(oracle.Judge("the bridge is open", "the bridge isn't open").contradiction);
  EXPECT_TRUE(oracle.Judge("the bridge is open", "the bridge isn’t open").contradiction);
  // Double negation restores parity.
  EXPECT_FALSE(oracle.Judge("the bridge is not open", "the bridge isn't open").contradiction);
}

TEST(LexicalOracleTest, EmptyContent) {
  const LexicalOracle oracle;
  const RelationJudgement j = oracle.Judge("the", "of the");
  EXPECT_FALSE(j.contradiction);
  EXPECT_TRUE(j.implication);  // empty hypothesis is fully covered
}

TEST(LexicalOracleTest, ThresholdsApplyToScores) {
  OracleConfig config;
  config.contradiction_threshold = 0.9;
  const LexicalOracle strict(config);
  // Jaccard 2/3: passes the 0.6 overlap gate but not the 0.9 threshold.
  EXPECT_FALSE(LexicalOracle().Judge("red car fast", "red car not slow").contradiction);
  EXPECT_TRUE(LexicalOracle().Judge("red car", "red car wheels not").contradiction);
  EXPECT_FALSE(strict.Judge("red car", "red car wheels not").contradiction);
}

std::vector<std::string> RandomSentences(std::size_t count, std::uint64_t seed) {
  static const std::vector<std::string> words = {
      "king", "usa", "not", "no", "republic", "house", "white", "the", "lives",
      "never", "plant", "two", "years", "n't", "cannot", "a", "is", "president"};
  std::mt19937_64 rng(seed);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::string s;
    const std::size_t len = 1 + rng() % 6;
    for (std::size_t k = 0; k < len; ++k) {
      if (k) s += ' ';
      s += words[rng() % words.size()];
    }
    out.push_back(s);
  }
  return out;
}

TEST(LexicalOracleTest, SymmetryAndReflexivityOverRandomStrings) {
  const LexicalOracle oracle;
  const auto sentences = RandomSentences(120, 7);
  for (const std::string& a : sentences) {
    EXPECT_FALSE(oracle.Judge(a, a).contradiction) << a;
    EXPECT_TRUE(oracle.Judge(a, a).implication) << a;
    for (const std::string& b : sentences) {
      EXPECT_EQ(oracle.Judge(a, b).contradiction, oracle.Judge(b, a).contradiction)
          << a << " | " << b;
    }
  }
}

TEST(LexicalOracleTest, ThresholdMonotonicity) {
  const auto sentences = RandomSentences(80, 11);
  for (double low : {0.0, 0.3, 0.6}) {
    for (double high : {0.6, 0.8, 1.0}) {
      if (high < low) continue;
      OracleConfig lo, hi;
      lo.contradiction_threshold = low;
      hi.contradiction_threshold = high;
      const LexicalOracle a(lo), b(hi);
      for (const std::string& s : sentences) {
        for (const std::string& t : sentences) {
          if (b.Judge(s, t).contradiction) {
            EXPECT_TRUE(a.Judge(s, t).contradiction);
          }
        }
      }
    }
  }
}

TEST(LexicalOracleTest, CacheDoesNotChangeJudgements) {
  OracleConfig cached;
  OracleConfig uncached;
  uncached.cache_enabled = false;
  const auto with_cache = MakeOracle(cached);
  const auto without = MakeOracle(uncached);
  std::vector<std::string> texts;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenSpec spec;
    spec.seed = seed;
    spec.n_props = 5;
    spec.defects = {Defect::kContradictionPair};
    for (const Proposition& p : GenDeductive(spec).propositions) texts.push_back(p.text);
  }
  for (int round = 0; round < 2; ++round) {
    for (const std::string& a : texts) {
      for (const std::string& b : texts) {
        EXPECT_EQ(with_cache->Judge(a, b), without->Judge(a, b));
      }
    }
  }
}

TEST(CachingOracleTest, ConcurrentLookups) {
  auto cache = std::make_shared<CachingOracle>(std::make_shared<LexicalOracle>());
  const auto sentences = RandomSentences(40, 3);
  std::vector<std::thread> pool;
  std::atomic<int> mismatches{0};
  const LexicalOracle reference;
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&] {
      for (const std::string& a : sentences) {
        for (const std::string& b : sentences) {
          if (!(cache->Judge(a, b) == reference.Judge(a, b))) ++mismatches;
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  EXPECT_EQ(mismatches.load(), 0);
  EXPECT_LE(cache->size(), sentences.size() * sentences.size());
}

TEST(SetContradictsTest, Examples) {
  const LexicalOracle oracle;
  const std::string_view single[] = {"the USA has a king"};
  EXPECT_EQ(SetContradicts(oracle, single, "the USA has no king").contradiction,
            oracle.Judge("the USA has a king", "the USA has no king").contradiction);
  const std::string_view pair[] = {"the gate is shut", "the gate is not shut"};
  EXPECT_TRUE(SetContradicts(oracle, pair, "anything at all").contradiction);
  EXPECT_TRUE(InternallyContradictory(oracle, pair));
  const std::string_view disjoint[] = {"x", "y"};
  EXPECT_FALSE(SetContradicts(oracle, disjoint, "z").contradiction);
  EXPECT_THROW(SetContradicts(oracle, {}, "z"), Error);
}

TEST(SetContradictsTest, JoinOrder) {
  const std::string_view parts[] = {"first", "second", "third"};
  EXPECT_EQ(JoinConjunction(parts), "first. second. third");
}

TEST(RemoteOracleTest, ParseResponses) {
  const RelationJudgement c = ParseNliResponse(
      R"({"label":"CONTRADICTION","scores":{"CONTRADICTION":0.98,"NEUTRAL":0.01,"ENTAILMENT":0.01}})",
      0.5, 0.5);
  EXPECT_TRUE(c.contradiction);
  EXPECT_DOUBLE_EQ(c.contradiction_score, 0.98);
  EXPECT_FALSE(c.implication);
  const RelationJudgement n = ParseNliResponse(R"({"label":"NEUTRAL"})", 0.5, 0.5);
  EXPECT_FALSE(n.contradiction);
  EXPECT_FALSE(n.implication);
  EXPECT_THROW(ParseNliResponse("not json", 0.5, 0.5), Error);
  EXPECT_THROW(ParseNliResponse(R"({"label":"MAYBE"})", 0.5, 0.5), Error);
}

class NliServer {
 public:
  NliServer() {
    server_.Post("/v1/nli", [this](const httplib::Request& req, httplib::Response& res) {
      if (fail_) {
        res.status = 503;
        return;
      }
      const auto body = nlohmann::json::parse(req.body);
      last_premise_ = body.at("premise").get<std::string>();
      const std::string hyp = body.at("hypothesis").get<std::string>();
      nlohmann::json out;
      if (hyp.find("contradict") != std::string::npos) {
        out = {{"label", "CONTRADICTION"},
               {"scores", {{"CONTRADICTION", 0.98}, {"NEUTRAL", 0.01}, {"ENTAILMENT", 0.01}}}};
      } else {
        out = {{"label", "NEUTRAL"},
               {"scores", {{"CONTRADICTION", 0.1}, {"NEUTRAL", 0.8}, {"ENTAILMENT", 0.1}}}};
      }
      res.set_content(out.dump(), "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~NliServer() {
    server_.stop();
    thread_.join();
  }

  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_) + "/v1"; }
  void set_fail(bool fail) { fail_ = fail; }
  const std::string& last_premise() const { return last_premise_; }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
  std::atomic<bool> fail_{false};
  std::string last_premise_;
};

TEST(RemoteOracleTest, AgainstLocalService) {
  NliServer server;
  OracleConfig config;
  config.backend = OracleBackend::kRemote;
  config.remote_url = server.url();
  config.remote_timeout_seconds = 2;
  const RemoteOracle oracle(config);

  const RelationJudgement c = oracle.Judge("premise one", "please contradict");
  EXPECT_TRUE(c.contradiction);
  EXPECT_DOUBLE_EQ(c.contradiction_score, 0.98);
  EXPECT_EQ(c.backend, "remote");
  EXPECT_EQ(server.last_premise(), "premise one");

  const RelationJudgement n = oracle.Judge("premise", "something neutral");
  EXPECT_FALSE(n.contradiction);
  EXPECT_FALSE(n.implication);

  server.set_fail(true);
  try {
    oracle.Judge("premise", "anything");
    FAIL() << "expected RemoteUnavailable";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRemoteUnavailable);
  }
}

TEST(RemoteOracleTest, ConfigErrors) {
  OracleConfig config;
  config.backend = OracleBackend::kRemote;
  config.remote_url = "https://example.invalid";
  EXPECT_THROW(RemoteOracle{config}, Error);
  config.remote_url = "";
  EXPECT_THROW(RemoteOracle{config}, Error);
  config.backend = OracleBackend::kLexical;
  config.contradiction_threshold = 1.5;
  EXPECT_THROW(MakeOracle(config), Error);
}

TEST(RemoteOracleTest, EnvironmentOverridesUrl) {
  NliServer server;
  ::setenv("RATIONALE_NLI_URL", server.url().c_str(), 1);
  OracleConfig config;
  config.backend = OracleBackend::kRemote;
  config.remote_url = "http://127.0.0.1:1";
  const auto oracle = MakeOracle(config);
  ::unsetenv("RATIONALE_NLI_URL");
  EXPECT_TRUE(oracle->Judge("a", "contradict me").contradiction);
}

}  // namespace
}  // namespace rationale
