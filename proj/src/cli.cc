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

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rationale/corpus_io.h"
#include "rationale/errors.h"
#include "rationale/generator.h"
#include "rationale/metrics.h"

namespace rationale {

namespace {

using nlohmann::json;

struct CliOptions {
  EvalConfig eval;
  ReportFormat format = ReportFormat::kJson;
  bool strict = false;
  unsigned threads = 0;
};

// Values given on the command line; unset ones fall back to the config file.
struct FlagValues {
  std::string config_path;
  std::string oracle;
  std::string nli_url;
  std::size_t max_subset_size = 0;
  std::string bands;
  double base_strength = 0.0;
  std::string format;
  bool strict = false;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

Error ConfigError(const std::string& message) {
  return Error(ErrorCode::kConfigError, message);
}

OracleBackend ParseBackend(const std::string& name) {
  if (name == "lexical") return OracleBackend::kLexical;
  if (name == "remote") return OracleBackend::kRemote;
  throw ConfigError("unknown oracle '" + name + "' (expected lexical or remote)");
}

BandThresholds ParseBands(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw ConfigError("bad band threshold '" + part + "'");
    }
  }
  if (values.size() != 3) throw ConfigError("--bands expects three values t,h,l");
  BandThresholds b{values[0], values[1], values[2]};
  if (!(1.0 >= b.top && b.top >= b.high && b.high >= b.medium && b.medium >= 0.0)) {
    throw ConfigError("band thresholds must satisfy 1 >= t >= h >= l >= 0");
  }
  return b;
}

ReportFormat ParseFormatFlag(const std::string& name) {
  const auto f = ParseReportFormat(name);
  if (!f) throw ConfigError("unknown format '" + name + "' (expected json or text)");
  return *f;
}

void ApplyConfigFile(const std::string& path, CliOptions& o) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "oracle") {
        o.eval.oracle.backend = ParseBackend(value.get<std::string>());
      } else if (key == "nli_url") {
        o.eval.oracle.remote_url = value.get<std::string>();
      } else if (key == "contradiction_threshold") {
        o.eval.oracle.contradiction_threshold = value.get<double>();
      } else if (key == "implication_threshold") {
        o.eval.oracle.implication_threshold = value.get<double>();
      } else if (key == "lexical_min_overlap") {
        o.eval.oracle.lexical_min_overlap = value.get<double>();
      } else if (key == "cache") {
        o.eval.oracle.cache_enabled = value.get<bool>();
      } else if (key == "timeout_seconds") {
        o.eval.oracle.remote_timeout_seconds = value.get<int>();
      } else if (key == "max_subset_size") {
        o.eval.max_subset_size = value.get<std::size_t>();
      } else if (key == "bands") {
        o.eval.bands = ParseBands(value.get<std::string>());
      } else if (key == "base_strength") {
        o.eval.base_strength = value.get<double>();
      } else if (key == "weak_threshold") {
        o.eval.weak_threshold = value.get<double>();
      } else if (key == "format") {
        o.format = ParseFormatFlag(value.get<std::string>());
      } else if (key == "strict") {
        o.strict = value.get<bool>();
      } else if (key == "seed") {
        o.eval.seed = value.get<std::uint64_t>();
      } else if (key == "threads") {
        o.threads = value.get<unsigned>();
      } else if (key == "matcher") {
        o.eval.matcher.lowercase = value.value("lowercase", true);
        o.eval.matcher.strip_punctuation = value.value("strip_punctuation", true);
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
}

// Config file < flags < environment.
CliOptions ResolveOptions(const CLI::App& app, const FlagValues& flags) {
  CliOptions o;
  std::string config_path = flags.config_path;
  if (const char* env = std::getenv("RATIONALE_CONFIG"); env && *env) config_path = env;
  if (!config_path.empty()) ApplyConfigFile(config_path, o);

  auto given = [&app](const char* name) { return app.count(name) > 0; };
  if (given("--oracle")) o.eval.oracle.backend = ParseBackend(flags.oracle);
  if (given("--nli-url")) o.eval.oracle.remote_url = flags.nli_url;
  if (given("--max-subset-size")) o.eval.max_subset_size = flags.max_subset_size;
  if (given("--bands")) o.eval.bands = ParseBands(flags.bands);
  if (given("--base-strength")) o.eval.base_strength = flags.base_strength;
  if (given("--format")) o.format = ParseFormatFlag(flags.format);
  if (given("--strict")) o.strict = flags.strict;
  if (given("--seed")) o.eval.seed = flags.seed;
  if (given("--threads")) o.threads = flags.threads;
  if (const char* env = std::getenv("RATIONALE_NLI_URL"); env && *env) {
    o.eval.oracle.remote_url = env;
  }

  if (o.eval.max_subset_size < 1) throw ConfigError("max_subset_size must be >= 1");
  if (!(o.eval.base_strength >= 0.0 && o.eval.base_strength <= 1.0)) {
    throw ConfigError("base_strength must lie in [0, 1]");
  }
  return o;
}

struct Corpus {
  std::vector<ExplanationDocument> documents;
  std::size_t bad_lines = 0;
};

std::string Where(const std::string& path, std::size_t line) {
  return line == 0 ? path : path + ":" + std::to_string(line);
}

// Loads every path, printing unparseable documents to `err`.
Corpus LoadAll(const std::vector<std::string>& paths, const CliOptions& o,
               std::ostream& err) {
  Corpus corpus;
  for (const std::string& path : paths) {
    LoadedCorpus loaded = LoadPath(path, o.strict ? LoadMode::kStrict : LoadMode::kLenient);
    for (const LineError& e : loaded.errors) {
      for (const Violation& v : e.violations) {
        err << Where(path, e.line) << ": " << v.ToString() << '\n';
      }
    }
    corpus.bad_lines += loaded.errors.size();
    for (ExplanationDocument& d : loaded.documents) {
      corpus.documents.push_back(std::move(d));
    }
  }
  return corpus;
}

bool OracleUnavailable(const std::vector<DocumentReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const DocumentReport& r) {
    return std::any_of(r.errors.begin(), r.errors.end(), [](const MetricError& e) {
      return e.code == ErrorCode::kRemoteUnavailable;
    });
  });
}

void PrintInvalid(const std::vector<DocumentReport>& reports, std::ostream& err) {
  for (const DocumentReport& r : reports) {
    for (const Violation& v : r.violations) err << r.id << ": " << v.ToString() << '\n';
    for (const MetricError& e : r.errors) {
      err << r.id << ": " << e.metric << ": " << ErrorCodeName(e.code) << ": "
          << e.message << '\n';
    }
  }
}

std::string PropertyText(const std::vector<DocumentReport>& reports) {
  std::ostringstream out;
  for (const DocumentReport& r : reports) {
    out << r.id << " (" << FormatName(r.format);
    if (r.band) out << ", " << BandName(*r.band);
    out << ")\n";
    if (!r.valid()) out << "  invalid document\n";
    for (const PropertyReport& p : r.properties) {
      out << "  " << p.property << ": " << VerdictName(p.verdict);
      for (const Witness& w : p.witnesses) {
        out << " [" << w.kind << ":";
        for (const std::string& id : w.ids) out << ' ' << id;
        out << ']';
      }
      if (!p.notes.empty()) out << "  (" << p.notes << ')';
      out << '\n';
    }
    for (const MetricError& e : r.errors) {
      out << "  " << e.metric << ": error " << ErrorCodeName(e.code) << '\n';
    }
  }
  return out.str();
}

int CmdValidate(const std::vector<std::string>& paths, const CliOptions& o,
                std::ostream& out, std::ostream& err) {
  const Corpus corpus = LoadAll(paths, o, err);
  std::size_t invalid = corpus.bad_lines;
  for (const ExplanationDocument& doc : corpus.documents) {
    const std::vector<Violation> violations = Validate(doc);
    if (violations.empty()) continue;
    ++invalid;
    for (const Violation& v : violations) err << doc.id << ": " << v.ToString() << '\n';
  }
  out << corpus.documents.size() + corpus.bad_lines << " documents, " << invalid
      << " invalid\n";
  return invalid == 0 ? kExitOk : kExitDataError;
}

int CmdEvaluate(const std::vector<std::string>& paths, const CliOptions& o,
                bool score, std::ostream& out, std::ostream& err) {
  const Corpus corpus = LoadAll(paths, o, err);
  const auto oracle = MakeOracle(o.eval.oracle);
  const std::vector<DocumentReport> reports =
      EvaluateCorpus(corpus.documents, o.eval, *oracle, score, o.threads);
  PrintInvalid(reports, err);

  if (!score && o.format == ReportFormat::kText) {
    out << PropertyText(reports);
  } else {
    out << WriteReport(reports, o.format);
  }
  if (OracleUnavailable(reports)) return kExitOracleUnavailable;
  const bool invalid = corpus.bad_lines > 0 ||
                       std::any_of(reports.begin(), reports.end(),
                                   [](const DocumentReport& r) { return !r.valid(); });
  if (invalid) return kExitDataError;
  if (!score) {
    for (const DocumentReport& r : reports) {
      for (const PropertyReport& p : r.properties) {
        if (p.verdict == Verdict::kFails) return kExitDataError;
      }
    }
  }
  return kExitOk;
}

int CmdReport(const std::vector<std::string>& paths, const CliOptions& o,
              std::ostream& out, std::ostream& err) {
  const Corpus corpus = LoadAll(paths, o, err);
  const auto oracle = MakeOracle(o.eval.oracle);
  std::vector<DocumentReport> scored =
      EvaluateCorpus(corpus.documents, o.eval, *oracle, true, o.threads);
  const std::vector<DocumentReport> checked =
      EvaluateCorpus(corpus.documents, o.eval, *oracle, false, o.threads);
  // Both lists share the same id-sorted order; merge format-specific checks
  // the scorer does not run.
  for (std::size_t i = 0; i < scored.size(); ++i) {
    for (const PropertyReport& p : checked[i].properties) {
      const bool present = std::any_of(
          scored[i].properties.begin(), scored[i].properties.end(),
          [&p](const PropertyReport& q) { return q.property == p.property; });
      if (!present) scored[i].properties.push_back(p);
    }
    for (const MetricError& e : checked[i].errors) {
      const bool present = std::any_of(
          scored[i].errors.begin(), scored[i].errors.end(),
          [&e](const MetricError& f) { return f.metric == e.metric; });
      if (!present) scored[i].errors.push_back(e);
    }
  }
  PrintInvalid(scored, err);
  out << WriteSummary(scored, o.format);
  if (OracleUnavailable(scored)) return kExitOracleUnavailable;
  const bool invalid = corpus.bad_lines > 0 ||
                       std::any_of(scored.begin(), scored.end(),
                                   [](const DocumentReport& r) { return !r.valid(); });
  return invalid ? kExitDataError : kExitOk;
}

struct GenFlags {
  std::string kind = "deductive";
  std::size_t count = 1;
  std::size_t size = 4;
  double edge_probability = 0.2;
  std::vector<std::string> defects;
};

int CmdGen(const GenFlags& g, const CliOptions& o, std::ostream& out) {
  GenSpec spec;
  spec.n_props = spec.n_args = g.size;
  spec.edge_probability = g.edge_probability;
  for (const std::string& name : g.defects) {
    const auto d = ParseDefect(name);
    if (!d) throw ConfigError("unknown defect '" + name + "'");
    spec.defects.insert(*d);
  }
  const auto format = ParseFormat(g.kind);
  if (!format) throw ConfigError("unknown format '" + g.kind + "'");
  for (std::size_t i = 0; i < g.count; ++i) {
    spec.seed = o.eval.seed + i;
    switch (*format) {
      case Format::kFreeForm: out << SerializeDocument(GenFreeForm(spec)); break;
      case Format::kDeductive: out << SerializeDocument(GenDeductive(spec)); break;
      case Format::kArgumentative: out << SerializeDocument(GenArgumentative(spec)); break;
    }
    out << '\n';
  }
  return kExitOk;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIoError:
    case ErrorCode::kConfigError:
      return kExitIoError;
    case ErrorCode::kRemoteUnavailable:
    case ErrorCode::kMalformedResponse:
      return kExitOracleUnavailable;
    default:
      return kExitDataError;
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Evaluate free-form, deductive and argumentative explanations.",
               "rationale"};
  app.fallthrough();
  app.require_subcommand(1);

  FlagValues flags;
  app.add_option("--config", flags.config_path, "JSON config file (env RATIONALE_CONFIG)");
  app.add_option("--oracle", flags.oracle, "lexical | remote");
  app.add_option("--nli-url", flags.nli_url, "NLI service base URL (env RATIONALE_NLI_URL)");
  app.add_option("--max-subset-size", flags.max_subset_size,
                 "subset cap for coherence above 12 propositions");
  app.add_option("--bands", flags.bands, "band thresholds t,h,l (default 0.99,0.70,0.50)");
  app.add_option("--base-strength", flags.base_strength, "base dialectical strength");
  app.add_option("--format", flags.format, "json | text");
  app.add_flag("--strict", flags.strict, "abort on the first malformed line");
  app.add_option("--seed", flags.seed, "seed recorded in provenance and used by gen");
  app.add_option("--threads", flags.threads, "worker threads (0 = all cores)");

  std::vector<std::string> paths;
  CLI::App* validate = app.add_subcommand("validate", "validate documents");
  CLI::App* check = app.add_subcommand("check", "run the property checks");
  CLI::App* score = app.add_subcommand("score", "compute the metrics");
  CLI::App* report = app.add_subcommand("report", "aggregate corpus summary");
  for (CLI::App* sub : {validate, check, score, report}) {
    sub->add_option("paths", paths, "JSON documents or JSONL corpora")->required(sub != report);
  }

  GenFlags gen_flags;
  CLI::App* gen = app.add_subcommand("gen", "generate synthetic documents");
  gen->group("");
  gen->add_option("--kind", gen_flags.kind, "free_form | deductive | argumentative");
  gen->add_option("--count", gen_flags.count, "number of documents");
  gen->add_option("--size", gen_flags.size, "propositions or arguments per document");
  gen->add_option("--edge-probability", gen_flags.edge_probability, "extra edge probability");
  gen->add_option("--defect", gen_flags.defects, "defect to inject (repeatable)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitIoError;
  }

  try {
    const CliOptions options = ResolveOptions(app, flags);
    if (*validate) return CmdValidate(paths, options, out, err);
    if (*check) return CmdEvaluate(paths, options, false, out, err);
    if (*score) return CmdEvaluate(paths, options, true, out, err);
    if (*report) return CmdReport(paths, options, out, err);
    if (*gen) return CmdGen(gen_flags, options, out);
  } catch (const Error& e) {
    err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << '\n';
    return ExitCodeFor(e.code());
  }
  return kExitIoError;
}

}  // namespace rationale
