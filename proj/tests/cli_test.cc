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

#include "rationale/cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "json.hpp"
#include "test_util.h"

namespace rationale {
namespace {

using nlohmann::json;
using testing::FixturePath;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  TempFile(const std::string& name, const std::string& content)
      : path_(std::filesystem::temp_directory_path() /
              ("rationale_cli_" + std::to_string(::getpid()) + "_" + name)) {
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

TEST(CliTest, ValidateExitCodes) {
  EXPECT_EQ(Cli({"validate", FixturePath("daffodil_chain.json"),
                 FixturePath("turing_free_form.json"), FixturePath("corpus3.jsonl")})
                .code,
            kExitOk);
  const CliRun bad = Cli({"validate", FixturePath("invalid_dangling.json")});
  EXPECT_EQ(bad.code, kExitDataError);
  EXPECT_NE(bad.err.find("/relations/"), std::string::npos);
  EXPECT_NE(bad.err.find("DanglingEdge"), std::string::npos);
  EXPECT_EQ(Cli({"validate", FixturePath("missing.json")}).code, kExitIoError);
  EXPECT_EQ(Cli({"validate", FixturePath("corpus_bad_line2.jsonl")}).code, kExitDataError);
}

TEST(CliTest, CheckDaffodil) {
  const CliRun r = Cli({"check", "--format", "json", FixturePath("daffodil_chain.json")});
  EXPECT_EQ(r.code, kExitDataError);  // strong relevance fails
  const json j = json::parse(r.out);
  bool saw_strong = false;
  for (const json& p : j["reports"][0]["properties"]) {
    if (p["property"] == "strong_relevance") {
      saw_strong = true;
      EXPECT_EQ(p["verdict"], "fails");
      EXPECT_EQ(p["witnesses"][0]["ids"], json({"p1"}));
    } else {
      EXPECT_EQ(p["verdict"], "holds") << p["property"];
    }
  }
  EXPECT_TRUE(saw_strong);
}

TEST(CliTest, CheckArgumentativeFixtures) {
  const CliRun cycle = Cli({"check", "--format", "text", FixturePath("cycle_support.json")});
  EXPECT_EQ(cycle.code, kExitDataError);
  EXPECT_NE(cycle.out.find("dialectical_non_circularity: fails [pure_support_cycle:"),
            std::string::npos);
  const CliRun left = Cli({"check", "--format", "text", FixturePath("bridge_top.json")});
  EXPECT_EQ(left.code, kExitOk);
  EXPECT_NE(left.out.find("dialectical_faithfulness: holds"), std::string::npos);
  EXPECT_NE(left.out.find("acceptability: holds"), std::string::npos);
}

TEST(CliTest, ScoreDaffodilAndBridgeRight) {
  const CliRun r = Cli({"score", "--format", "json", FixturePath("daffodil_chain.json"),
                     FixturePath("bridge_low.json")});
  EXPECT_EQ(r.code, kExitOk);
  const json j = json::parse(r.out);
  ASSERT_EQ(j["reports"].size(), 2u);
  const json& right = j["reports"][0];  // sorted by id: bridge-low < daffodil
  EXPECT_EQ(right["id"], "bridge-low");
  EXPECT_EQ(right["metrics"]["scores"]["acc"].get<double>(), 1.0);
  EXPECT_NE(right["metrics"]["band_expectation_flags"].dump().find("Low band expects Acc"),
            std::string::npos);
  const json& t2 = j["reports"][1]["metrics"]["scores"];
  EXPECT_EQ(t2["coh"].get<double>(), 1.0);
  EXPECT_EQ(t2["rel_weak"].get<double>(), 1.0);
  EXPECT_EQ(t2["rel_strong"].get<double>(), 0.5);
  EXPECT_EQ(t2["red"].get<double>(), 0.0);
}

TEST(CliTest, ScoreCorpusTextTable) {
  const CliRun r = Cli({"score", "--format", "text", FixturePath("corpus3.jsonl")});
  EXPECT_EQ(r.code, kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t count = 0;
  std::string last;
  while (std::getline(lines, line)) {
    ++count;
    last = line;
  }
  EXPECT_EQ(count, 5u);
  EXPECT_EQ(last.rfind("mean", 0), 0u);
}

TEST(CliTest, ReportMeanAndEmptyCorpus) {
  std::ifstream in(FixturePath("daffodil_chain.json"));
  json half = json::parse(in);
  half["id"] = "half";
  half["propositions"].push_back({{"id", "p4"}, {"text", "Tulips bloom."}, {"source", "external"}});
  half["relations"] = json::array({{{"from", "p1"}, {"to", "p3"}}});
  std::ifstream in2(FixturePath("daffodil_chain.json"));
  const json full = json::parse(in2);
  // half: p1 and p3 reach the prediction, p2 and p4 do not -> 0.5.
  const TempFile corpus("two.jsonl", full.dump() + "\n" + half.dump() + "\n");
  const CliRun r = Cli({"report", "--format", "json", corpus.path()});
  EXPECT_EQ(r.code, kExitOk);
  const json j = json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["formats"]["deductive"]["metrics"]["rel_weak"]["mean"].get<double>(),
                   0.75);

  const CliRun empty = Cli({"report", FixturePath("empty.jsonl")});
  EXPECT_EQ(empty.code, kExitOk);
  EXPECT_NE(empty.out.find("no documents"), std::string::npos);

  EXPECT_EQ(Cli({"report", FixturePath("corpus_bad_line2.jsonl")}).code, kExitDataError);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(Cli({"score"}).code, kExitIoError);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitIoError);
  EXPECT_EQ(Cli({"--bands", "0.1,0.5,0.9", "score", FixturePath("turing_free_form.json")}).code,
            kExitIoError);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

TEST(CliTest, ConfigFileThenFlagsThenEnvironment) {
  const TempFile config("config.json", R"({"max_subset_size": 5, "format": "json"})");
  const std::string doc = FixturePath("turing_free_form.json");

  const CliRun from_file = Cli({"--config", config.path(), "score", doc});
  ASSERT_EQ(from_file.code, kExitOk) << from_file.err;
  EXPECT_EQ(json::parse(from_file.out)["reports"][0]["metrics"]["provenance"]
                                       ["max_subset_size"],
            5);

  const CliRun flag = Cli({"--config", config.path(), "--max-subset-size", "4", "score", doc});
  EXPECT_EQ(json::parse(flag.out)["reports"][0]["metrics"]["provenance"]["max_subset_size"],
            4);

  const TempFile other("other.json", R"({"max_subset_size": 7, "format": "json"})");
  ::setenv("RATIONALE_CONFIG", other.path().c_str(), 1);
  const CliRun env = Cli({"--config", config.path(), "score", doc});
  ::unsetenv("RATIONALE_CONFIG");
  EXPECT_EQ(json::parse(env.out)["reports"][0]["metrics"]["provenance"]["max_subset_size"], 7);

  const TempFile unknown("unknown.json", R"({"colour": "blue"})");
  EXPECT_EQ(Cli({"--config", unknown.path(), "score", doc}).code, kExitIoError);
}

TEST(CliTest, OracleUrlPrecedence) {
  const std::string doc = FixturePath("turing_free_form.json");
  // Unreachable service: oracle unavailable.
  EXPECT_EQ(Cli({"--oracle", "remote", "--nli-url", "http://127.0.0.1:1", "score", doc}).code,
            kExitOracleUnavailable);
  // The environment wins over the flag; an https URL is a configuration error.
  ::setenv("RATIONALE_NLI_URL", "https://127.0.0.1:1", 1);
  const int code =
      Cli({"--oracle", "remote", "--nli-url", "http://127.0.0.1:1", "score", doc}).code;
  ::unsetenv("RATIONALE_NLI_URL");
  EXPECT_EQ(code, kExitIoError);
}

TEST(CliTest, DeterministicJson) {
  const std::vector<std::string> args = {"score", "--format", "json",
                                         FixturePath("corpus3.jsonl"),
                                         FixturePath("cycle_mixed.json")};
  EXPECT_EQ(Cli(args).out, Cli(args).out);
}

TEST(CliTest, GenProducesValidDocuments) {
  const CliRun r = Cli({"--seed", "3", "gen", "--kind", "deductive", "--count", "4",
                     "--defect", "isolated_node"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const TempFile corpus("gen.jsonl", r.out);
  EXPECT_EQ(Cli({"validate", corpus.path()}).code, kExitOk);
  EXPECT_EQ(Cli({"gen", "--kind", "free_form", "--defect", "cycle"}).code, kExitDataError);
}

}  // namespace
}  // namespace rationale
