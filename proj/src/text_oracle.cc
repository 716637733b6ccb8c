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

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <iterator>
#include <mutex>
#include <unordered_set>

#include "httplib.h"
#include "json.hpp"
#include "rationale/errors.h"

namespace rationale {

namespace {

const std::unordered_set<std::string>& NegationMarkers() {
  static const std::unordered_set<std::string> kMarkers = {
      "not", "no", "never", "none", "cannot"};
  return kMarkers;
}

const std::unordered_set<std::string>& Stopwords() {
  static const std::unordered_set<std::string> kStopwords = {
      "a",     "an",    "the",   "of",    "in",    "on",    "at",    "to",
      "for",   "from",  "by",    "with",  "as",    "and",   "or",    "but",
      "is",    "are",   "was",   "were",  "be",    "been",  "being", "am",
      "has",   "have",  "had",   "do",    "does",  "did",   "it",    "its",
      "this",  "that",  "these", "those", "there", "which", "who",   "whom",
      "what",  "than",  "then",  "so",    "such",  "can",   "could", "will",
      "would", "shall", "should", "may",  "might", "must",  "any",   "some",
      "also",  "into",  "about", "we",    "i",     "you",   "he",    "she",
      "they",  "them",  "his",   "her",   "their", "our",   "my",    "your",
      "if",    "because", "thus", "while", "ca",   "wo"};
  return kStopwords;
}

bool IsTokenChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '\'';
}

// Lowercases ASCII and folds the typographic apostrophe (U+2019) into '.
std::string Normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x80 &&
        static_cast<unsigned char>(text[i + 2]) == 0x99) {
      out.push_back('\'');
      i += 2;
      continue;
    }
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text[i]))));
  }
  return out;
}

std::size_t IntersectionSize(const std::vector<std::string>& a,
                             const std::vector<std::string>& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

LexicalAnalysis AnalyzeText(std::string_view text) {
  LexicalAnalysis out;
  const std::string normalized = Normalize(text);
  std::size_t i = 0;
  while (i < normalized.size()) {
    if (!IsTokenChar(normalized[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < normalized.size() && IsTokenChar(normalized[j])) ++j;
    std::string token = normalized.substr(i, j - i);
    i = j;

    while (!token.empty() && token.front() == '\'') token.erase(0, 1);
    while (!token.empty() && token.back() == '\'') token.pop_back();
    if (token.size() > 3 && token.compare(token.size() - 3, 3, "n't") == 0) {
      ++out.negations;
      token.resize(token.size() - 3);
    } else if (token.size() > 2 &&
               token.compare(token.size() - 2, 2, "'s") == 0) {
      token.resize(token.size() - 2);
    }
    token.erase(std::remove(token.begin(), token.end(), '\''), token.end());
    if (token.empty()) continue;
    if (NegationMarkers().count(token) != 0) {
      ++out.negations;
      continue;
    }
    if (Stopwords().count(token) != 0) continue;
    out.content.push_back(std::move(token));
  }
  std::sort(out.content.begin(), out.content.end());
  out.content.erase(std::unique(out.content.begin(), out.content.end()),
                    out.content.end());
  return out;
}

LexicalOracle::LexicalOracle(const OracleConfig& config)
    : contradiction_threshold_(config.contradiction_threshold),
      implication_threshold_(config.implication_threshold),
      min_overlap_(config.lexical_min_overlap) {}

RelationJudgement LexicalOracle::Judge(std::string_view premise,
                                       std::string_view hypothesis) const {
  const LexicalAnalysis a = AnalyzeText(premise);
  const LexicalAnalysis b = AnalyzeText(hypothesis);
  const std::size_t shared = IntersectionSize(a.content, b.content);
  const std::size_t united = a.content.size() + b.content.size() - shared;
  const double jaccard =
      united == 0 ? 0.0 : static_cast<double>(shared) / static_cast<double>(united);
  const double coverage =
      b.content.empty()
          ? 1.0
          : static_cast<double>(shared) / static_cast<double>(b.content.size());
  const bool odd_parity = (a.negations + b.negations) % 2 == 1;

  RelationJudgement out;
  out.backend = "lexical";
  out.contradiction_score = odd_parity ? jaccard : 0.0;
  out.contradiction = odd_parity && jaccard >= min_overlap_ &&
                      out.contradiction_score >= contradiction_threshold_;
  out.implication_score = odd_parity ? 0.0 : coverage;
  out.implication = !odd_parity && out.implication_score >= implication_threshold_;
  return out;
}

std::string JoinConjunction(std::span<const std::string_view> parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += kConjunctionSeparator;
    out += parts[i];
  }
  return out;
}

bool InternallyContradictory(const TextOracle& oracle,
                             std::span<const std::string_view> texts) {
  for (std::size_t i = 0; i < texts.size(); ++i) {
    for (std::size_t j = i + 1; j < texts.size(); ++j) {
      if (oracle.Judge(texts[i], texts[j]).contradiction ||
          oracle.Judge(texts[j], texts[i]).contradiction) {
        return true;
      }
    }
  }
  return false;
}

RelationJudgement SetContradicts(const TextOracle& oracle,
                                 std::span<const std::string_view> sources,
                                 std::string_view target) {
  if (sources.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "set_contradicts needs sources");
  }
  RelationJudgement out;
  out.backend = std::string(oracle.name());
  auto fold = [&out](const RelationJudgement& j) {
    out.contradiction = out.contradiction || j.contradiction;
    out.contradiction_score = std::max(out.contradiction_score, j.contradiction_score);
  };

  // Internal consistency pre-pass.
  for (std::size_t i = 0; i < sources.size(); ++i) {
    for (std::size_t k = i + 1; k < sources.size(); ++k) {
      fold(oracle.Judge(sources[i], sources[k]));
      fold(oracle.Judge(sources[k], sources[i]));
    }
  }
  for (std::string_view source : sources) fold(oracle.Judge(source, target));

  const RelationJudgement joined =
      sources.size() == 1 ? oracle.Judge(sources.front(), target)
                          : oracle.Judge(JoinConjunction(sources), target);
  fold(joined);
  out.implication = joined.implication;
  out.implication_score = joined.implication_score;
  return out;
}

RelationJudgement ParseNliResponse(std::string_view body,
                                   double contradiction_threshold,
                                   double implication_threshold) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedResponse,
                std::string("NLI response is not JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("label") || !j["label"].is_string()) {
    throw Error(ErrorCode::kMalformedResponse, "NLI response lacks a label");
  }
  const std::string label = j["label"].get<std::string>();
  if (label != "ENTAILMENT" && label != "CONTRADICTION" && label != "NEUTRAL") {
    throw Error(ErrorCode::kMalformedResponse, "unknown NLI label '" + label + "'");
  }
  auto score_of = [&](const char* name) {
    if (j.contains("scores")) {
      const auto& scores = j["scores"];
      if (!scores.is_object()) {
        throw Error(ErrorCode::kMalformedResponse, "NLI scores must be an object");
      }
      if (scores.contains(name)) {
        const auto& value = scores[name];
        if (!value.is_number()) {
          throw Error(ErrorCode::kMalformedResponse,
                      std::string("NLI score for ") + name + " is not a number");
        }
        const double p = value.get<double>();
        if (!(p >= 0.0 && p <= 1.0)) {
          throw Error(ErrorCode::kMalformedResponse,
                      std::string("NLI score for ") + name + " outside [0, 1]");
        }
        return p;
      }
    }
    return label == name ? 1.0 : 0.0;
  };

  RelationJudgement out;
  out.backend = "remote";
  out.contradiction_score = score_of("CONTRADICTION");
  out.implication_score = score_of("ENTAILMENT");
  out.contradiction = out.contradiction_score >= contradiction_threshold &&
                      out.contradiction_score > 0.0;
  out.implication = out.implication_score >= implication_threshold &&
                    out.implication_score > 0.0;
  return out;
}

RemoteOracle::RemoteOracle(const OracleConfig& config)
    : timeout_seconds_(config.remote_timeout_seconds),
      contradiction_threshold_(config.contradiction_threshold),
      implication_threshold_(config.implication_threshold) {
  const std::string& url = config.remote_url;
  if (url.empty()) {
    throw Error(ErrorCode::kConfigError, "remote oracle needs a URL");
  }
  const std::string scheme = "http://";
  if (url.compare(0, scheme.size(), scheme) != 0) {
    throw Error(ErrorCode::kConfigError,
                "only http:// NLI endpoints are supported: " + url);
  }
  const std::size_t path_start = url.find('/', scheme.size());
  if (path_start == std::string::npos) {
    scheme_host_port_ = url;
  } else {
    scheme_host_port_ = url.substr(0, path_start);
    path_prefix_ = url.substr(path_start);
    while (!path_prefix_.empty() && path_prefix_.back() == '/') {
      path_prefix_.pop_back();
    }
  }
  if (scheme_host_port_.size() == scheme.size()) {
    throw Error(ErrorCode::kConfigError, "NLI URL has no host: " + url);
  }
}

RelationJudgement RemoteOracle::Judge(std::string_view premise,
                                      std::string_view hypothesis) const {
  httplib::Client client(scheme_host_port_);
  client.set_connection_timeout(timeout_seconds_, 0);
  client.set_read_timeout(timeout_seconds_, 0);
  const nlohmann::json request = {{"premise", std::string(premise)},
                                  {"hypothesis", std::string(hypothesis)}};
  auto response =
      client.Post(path_prefix_ + "/nli", request.dump(), "application/json");
  if (!response) {
    throw Error(ErrorCode::kRemoteUnavailable,
                "NLI service unreachable: " + httplib::to_string(response.error()));
  }
  if (response->status != 200) {
    throw Error(ErrorCode::kRemoteUnavailable,
                "NLI service returned HTTP " + std::to_string(response->status));
  }
  return ParseNliResponse(response->body, contradiction_threshold_,
                          implication_threshold_);
}

RelationJudgement CachingOracle::Judge(std::string_view premise,
                                       std::string_view hypothesis) const {
  std::string key = std::to_string(premise.size());
  key += ':';
  key += premise;
  key += hypothesis;
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  RelationJudgement judgement = inner_->Judge(premise, hypothesis);
  std::unique_lock lock(mutex_);
  cache_.emplace(std::move(key), judgement);
  return judgement;
}

std::size_t CachingOracle::size() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

std::shared_ptr<const TextOracle> MakeOracle(OracleConfig config) {
  if (const char* url = std::getenv("RATIONALE_NLI_URL"); url && *url) {
    config.remote_url = url;
  }
  auto in_unit = [](double t) { return t >= 0.0 && t <= 1.0; };
  if (!in_unit(config.contradiction_threshold) ||
      !in_unit(config.implication_threshold) ||
      !in_unit(config.lexical_min_overlap)) {
    throw Error(ErrorCode::kConfigError, "oracle thresholds must lie in [0, 1]");
  }
  std::shared_ptr<const TextOracle> oracle;
  if (config.backend == OracleBackend::kRemote) {
    oracle = std::make_shared<RemoteOracle>(config);
  } else {
    oracle = std::make_shared<LexicalOracle>(config);
  }
  if (config.cache_enabled) {
    oracle = std::make_shared<CachingOracle>(std::move(oracle));
  }
  return oracle;
}

}  // namespace rationale
