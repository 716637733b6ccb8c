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

#include "rationale/corpus_io.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace rationale {

using nlohmann::json;

namespace {

// Collects schema violations while walking a JSON document.
class SchemaWalker {
 public:
  std::vector<Violation>& violations() { return violations_; }

  void Fail(const std::string& path, const std::string& message) {
    violations_.push_back({ErrorCode::kSchemaViolation, path, message});
  }

  // Rejects keys outside `allowed`.
  void OnlyKeys(const json& j, const std::string& path,
                std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, value] : j.items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        Fail(path + "/" + key, "unknown key");
      }
    }
  }

  const json* Field(const json& j, const std::string& path, const char* key,
                    bool required = true) {
    const auto it = j.find(key);
    if (it == j.end()) {
      if (required) Fail(path + "/" + key, "missing");
      return nullptr;
    }
    return &*it;
  }

  std::optional<std::string> String(const json& j, const std::string& path,
                                    const char* key, bool required = true) {
    const json* v = Field(j, path, key, required);
    if (!v) return std::nullopt;
    if (!v->is_string()) {
      Fail(path + "/" + key, "expected a string");
      return std::nullopt;
    }
    return v->get<std::string>();
  }

  std::vector<std::string> StringList(const json& j, const std::string& path,
                                      const char* key) {
    std::vector<std::string> out;
    const json* v = Field(j, path, key);
    if (!v) return out;
    if (!v->is_array()) {
      Fail(path + "/" + key, "expected an array");
      return out;
    }
    for (std::size_t i = 0; i < v->size(); ++i) {
      if ((*v)[i].is_string()) {
        out.push_back((*v)[i].get<std::string>());
      } else {
        Fail(path + "/" + key + "/" + std::to_string(i), "expected a string");
      }
    }
    return out;
  }

  // Array of objects; calls fn(element, element_path) for each object.
  template <typename Fn>
  void Objects(const json& j, const std::string& path, const char* key, Fn&& fn) {
    const json* v = Field(j, path, key);
    if (!v) return;
    const std::string base = path + "/" + key;
    if (!v->is_array()) {
      Fail(base, "expected an array");
      return;
    }
    for (std::size_t i = 0; i < v->size(); ++i) {
      const std::string item = base + "/" + std::to_string(i);
      if ((*v)[i].is_object()) {
        fn((*v)[i], item);
      } else {
        Fail(item, "expected an object");
      }
    }
  }

 private:
  std::vector<Violation> violations_;
};

std::string_view SourceName(SourceKind kind) {
  switch (kind) {
    case SourceKind::kClaim: return "claim";
    case SourceKind::kEvidence: return "evidence";
    case SourceKind::kExternal: return "external";
    case SourceKind::kPrediction: return "prediction";
  }
  return "";
}

std::optional<SourceKind> ParseSource(std::string_view name) {
  for (SourceKind k : {SourceKind::kClaim, SourceKind::kEvidence,
                       SourceKind::kExternal, SourceKind::kPrediction}) {
    if (SourceName(k) == name) return k;
  }
  return std::nullopt;
}

template <typename Edge, typename Kind, typename Parse>
void ParseEdges(SchemaWalker& w, const json& j, const char* key, Parse parse,
                std::vector<Edge>& out) {
  w.Objects(j, "", key, [&](const json& e, const std::string& path) {
    w.OnlyKeys(e, path, {"from", "to", "kind"});
    Edge edge;
    edge.from = w.String(e, path, "from").value_or("");
    edge.to = w.String(e, path, "to").value_or("");
    if (const auto kind = w.String(e, path, "kind", false)) {
      if (const std::optional<Kind> parsed = parse(*kind)) {
        edge.kind = *parsed;
      } else {
        w.Fail(path + "/kind", "unknown kind '" + *kind + "'");
      }
    }
    out.push_back(std::move(edge));
  });
}

}  // namespace

ExplanationDocument DocumentFromJson(const json& j) {
  SchemaWalker w;
  ExplanationDocument doc;
  if (!j.is_object()) {
    w.Fail("", "document must be a JSON object");
    throw ValidationError(std::move(w.violations()));
  }
  w.OnlyKeys(j, "", {"id", "format", "input", "prediction", "propositions",
                     "relations", "directed", "arguments", "supports", "attacks",
                     "meta"});
  doc.id = w.String(j, "", "id").value_or("");

  std::optional<Format> format;
  if (const auto name = w.String(j, "", "format")) {
    format = ParseFormat(*name);
    if (!format) w.Fail("/format", "unknown format '" + *name + "'");
  }
  if (format) doc.format = *format;

  if (const json* input = w.Field(j, "", "input")) {
    if (input->is_object()) {
      w.OnlyKeys(*input, "/input", {"claim", "evidence"});
      doc.input.claim = w.String(*input, "/input", "claim").value_or("");
      doc.input.evidence = w.StringList(*input, "/input", "evidence");
    } else {
      w.Fail("/input", "expected an object");
    }
  }

  if (const json* pred = w.Field(j, "", "prediction")) {
    if (pred->is_object()) {
      w.OnlyKeys(*pred, "/prediction", {"label", "confidence", "model_id"});
      doc.prediction.label = w.String(*pred, "/prediction", "label").value_or("");
      doc.prediction.model_id =
          w.String(*pred, "/prediction", "model_id", false).value_or("");
      if (const json* c = w.Field(*pred, "/prediction", "confidence")) {
        if (!c->is_number()) {
          w.Fail("/prediction/confidence", "expected a number");
        } else {
          doc.prediction.confidence = c->get<double>();
          if (!(doc.prediction.confidence >= 0.0 && doc.prediction.confidence <= 1.0)) {
            w.Fail("/prediction/confidence", "out of range [0, 1]");
          }
        }
      }
    } else {
      w.Fail("/prediction", "expected an object");
    }
  }

  w.Objects(j, "", "propositions", [&](const json& p, const std::string& path) {
    w.OnlyKeys(p, path, {"id", "text", "source", "evidence_index", "role"});
    Proposition prop;
    prop.id = w.String(p, path, "id").value_or("");
    prop.text = w.String(p, path, "text").value_or("");
    if (const auto source = w.String(p, path, "source")) {
      if (const auto kind = ParseSource(*source)) {
        prop.source.kind = *kind;
      } else {
        w.Fail(path + "/source", "unknown source '" + *source + "'");
      }
    }
    const json* index = w.Field(p, path, "evidence_index", false);
    if (prop.source.kind == SourceKind::kEvidence) {
      if (!index) {
        w.Fail(path + "/evidence_index", "missing");
      } else if (!index->is_number_integer() || index->get<long long>() < 0) {
        w.Fail(path + "/evidence_index", "expected a non-negative integer");
      } else {
        prop.source.evidence_index = index->get<std::size_t>();
      }
    } else if (index) {
      w.Fail(path + "/evidence_index", "only allowed for evidence propositions");
    }
    if (const auto role = w.String(p, path, "role", false)) {
      if (*role == "prediction") {
        prop.prediction_role = true;
      } else {
        w.Fail(path + "/role", "unknown role '" + *role + "'");
      }
    }
    doc.propositions.push_back(std::move(prop));
  });

  // Format-specific sections must be present exactly for their format.
  const bool deductive = format == Format::kDeductive;
  const bool argumentative = format == Format::kArgumentative;
  if (format) {
    for (const char* key : {"relations", "directed"}) {
      if (!deductive && j.contains(key)) {
        w.Fail(std::string("/") + key, "only allowed for deductive documents");
      }
    }
    for (const char* key : {"arguments", "supports", "attacks"}) {
      if (!argumentative && j.contains(key)) {
        w.Fail(std::string("/") + key, "only allowed for argumentative documents");
      }
    }
  }
  if (deductive) {
    w.Objects(j, "", "relations", [&](const json& e, const std::string& path) {
      w.OnlyKeys(e, path, {"from", "to"});
      doc.relations.push_back({w.String(e, path, "from").value_or(""),
                               w.String(e, path, "to").value_or("")});
    });
    if (const json* directed = w.Field(j, "", "directed", false)) {
      if (directed->is_boolean()) {
        doc.directed = directed->get<bool>();
      } else {
        w.Fail("/directed", "expected a boolean");
      }
    }
  }
  if (argumentative) {
    w.Objects(j, "", "arguments", [&](const json& a, const std::string& path) {
      w.OnlyKeys(a, path, {"id", "premises", "conclusion"});
      Argument arg;
      arg.id = w.String(a, path, "id").value_or("");
      arg.premises = w.StringList(a, path, "premises");
      arg.conclusion = w.String(a, path, "conclusion").value_or("");
      doc.arguments.push_back(std::move(arg));
    });
    ParseEdges<SupportEdge, SupportKind>(w, j, "supports", ParseSupportKind,
                                         doc.supports);
    ParseEdges<AttackEdge, AttackKind>(w, j, "attacks", ParseAttackKind, doc.attacks);
  }

  if (const json* meta = w.Field(j, "", "meta", false)) {
    if (!meta->is_object()) {
      w.Fail("/meta", "expected an object");
    } else {
      for (const auto& [key, value] : meta->items()) {
        if (value.is_string()) {
          doc.meta[key] = value.get<std::string>();
        } else {
          w.Fail("/meta/" + key, "expected a string");
        }
      }
    }
  }

  if (!w.violations().empty()) throw ValidationError(std::move(w.violations()));
  return doc;
}

ExplanationDocument ParseDocument(std::string_view bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ValidationError({{ErrorCode::kMalformedJson, "", e.what()}});
  }
  return DocumentFromJson(j);
}

json DocumentToJson(const ExplanationDocument& doc) {
  json j;
  j["id"] = doc.id;
  j["format"] = FormatName(doc.format);
  j["input"] = {{"claim", doc.input.claim}, {"evidence", doc.input.evidence}};
  j["prediction"] = {{"label", doc.prediction.label},
                     {"confidence", doc.prediction.confidence},
                     {"model_id", doc.prediction.model_id}};
  json props = json::array();
  for (const Proposition& p : doc.propositions) {
    json item = {{"id", p.id}, {"text", p.text}, {"source", SourceName(p.source.kind)}};
    if (p.source.kind == SourceKind::kEvidence) {
      item["evidence_index"] = p.source.evidence_index;
    }
    if (p.prediction_role) item["role"] = "prediction";
    props.push_back(std::move(item));
  }
  j["propositions"] = std::move(props);

  if (doc.format == Format::kDeductive) {
    json relations = json::array();
    for (const RelationEdge& e : doc.relations) {
      relations.push_back({{"from", e.from}, {"to", e.to}});
    }
    j["relations"] = std::move(relations);
    j["directed"] = doc.directed;
  }
  if (doc.format == Format::kArgumentative) {
    json arguments = json::array();
    for (const Argument& a : doc.arguments) {
      arguments.push_back(
          {{"id", a.id}, {"premises", a.premises}, {"conclusion", a.conclusion}});
    }
    json supports = json::array();
    for (const SupportEdge& e : doc.supports) {
      supports.push_back(
          {{"from", e.from}, {"to", e.to}, {"kind", SupportKindName(e.kind)}});
    }
    json attacks = json::array();
    for (const AttackEdge& e : doc.attacks) {
      attacks.push_back(
          {{"from", e.from}, {"to", e.to}, {"kind", AttackKindName(e.kind)}});
    }
    j["arguments"] = std::move(arguments);
    j["supports"] = std::move(supports);
    j["attacks"] = std::move(attacks);
  }
  j["meta"] = doc.meta;
  return j;
}

std::string SerializeDocument(const ExplanationDocument& doc) {
  return DocumentToJson(doc).dump(-1, ' ', false, json::error_handler_t::replace);
}

CorpusReader::CorpusReader(const std::string& path, LoadMode mode)
    : in_(path, std::ios::binary), path_(path), mode_(mode) {
  if (!in_) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
}

std::optional<CorpusReader::Item> CorpusReader::Next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      return Item{ParseDocument(line)};
    } catch (const ValidationError& e) {
      if (mode_ == LoadMode::kStrict) {
        std::vector<Violation> prefixed = e.violations();
        for (Violation& v : prefixed) {
          v.message = path_ + ":" + std::to_string(line_) + ": " + v.message;
        }
        throw ValidationError(std::move(prefixed));
      }
      return Item{LineError{line_, e.violations()}};
    }
  }
  if (in_.bad()) throw Error(ErrorCode::kIoError, "read error on '" + path_ + "'");
  return std::nullopt;
}

LoadedCorpus LoadPath(const std::string& path, LoadMode mode) {
  LoadedCorpus out;
  const bool jsonl = path.size() >= 6 && path.compare(path.size() - 6, 6, ".jsonl") == 0;
  if (jsonl) {
    CorpusReader reader(path, mode);
    while (auto item = reader.Next()) {
      if (auto* doc = std::get_if<ExplanationDocument>(&*item)) {
        out.documents.push_back(std::move(*doc));
      } else {
        out.errors.push_back(std::get<LineError>(std::move(*item)));
      }
    }
    return out;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
  std::ostringstream bytes;
  bytes << in.rdbuf();
  try {
    out.documents.push_back(ParseDocument(bytes.str()));
  } catch (const ValidationError& e) {
    if (mode == LoadMode::kStrict) throw;
    out.errors.push_back({0, e.violations()});
  }
  return out;
}

std::optional<ReportFormat> ParseReportFormat(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "text") return ReportFormat::kText;
  return std::nullopt;
}

namespace {

struct MetricSlot {
  const char* name;
  const char* column;
  std::optional<double> MetricReport::*field;
};

constexpr MetricSlot kMetricSlots[] = {
    {"coh", "coh", &MetricReport::coh},
    {"rel_weak", "rel_weak", &MetricReport::rel_weak},
    {"rel_strong", "rel_strong", &MetricReport::rel_strong},
    {"red", "red", &MetricReport::red},
    {"acc", "acc", &MetricReport::acc},
    {"cir_literal", "cir_lit", &MetricReport::cir_literal},
    {"cir_cycle", "cir_cyc", &MetricReport::cir_cycle},
};

json ProvenanceToJson(const Provenance& p) {
  return {{"oracle_backend", p.oracle_backend},
          {"contradiction_threshold", p.contradiction_threshold},
          {"implication_threshold", p.implication_threshold},
          {"lexical_min_overlap", p.lexical_min_overlap},
          {"max_subset_size", p.max_subset_size},
          {"bands", {{"top", p.bands.top}, {"high", p.bands.high}, {"medium", p.bands.medium}}},
          {"base_strength", p.base_strength},
          {"weak_threshold", p.weak_threshold},
          {"seed", p.seed},
          {"conventions", p.conventions}};
}

json PropertyToJson(const PropertyReport& r) {
  json witnesses = json::array();
  for (const Witness& w : r.witnesses) {
    witnesses.push_back({{"kind", w.kind}, {"ids", w.ids}});
  }
  return {{"property", r.property},
          {"verdict", VerdictName(r.verdict)},
          {"holds", r.holds()},
          {"witnesses", std::move(witnesses)},
          {"notes", r.notes}};
}

std::string FormatFixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
  return buf;
}

void DumpTo(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out.push_back('{');
      bool first = true;
      for (const auto& [key, value] : j.items()) {  // std::map: sorted keys
        if (!first) out.push_back(',');
        first = false;
        out += json(key).dump(-1, ' ', false, json::error_handler_t::replace);
        out.push_back(':');
        DumpTo(value, out);
      }
      out.push_back('}');
      break;
    }
    case json::value_t::array: {
      out.push_back('[');
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out.push_back(',');
        DumpTo(j[i], out);
      }
      out.push_back(']');
      break;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? FormatFixed(v) : "null";
      break;
    }
    default:
      out += j.dump(-1, ' ', false, json::error_handler_t::replace);
  }
}

struct Stats {
  std::size_t count = 0;
  double sum = 0.0;
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();

  void Add(double v) {
    ++count;
    sum += v;
    min = std::min(min, v);
    max = std::max(max, v);
  }
  double mean() const { return sum / static_cast<double>(count); }
};

std::map<std::string, Stats> MetricStats(const std::vector<const DocumentReport*>& reports) {
  std::map<std::string, Stats> out;
  for (const DocumentReport* r : reports) {
    if (!r->metrics) continue;
    for (const MetricSlot& slot : kMetricSlots) {
      if (const auto& v = (*r->metrics).*slot.field) out[slot.name].Add(*v);
    }
  }
  return out;
}

json Aggregate(const std::vector<DocumentReport>& reports) {
  std::vector<const DocumentReport*> all;
  for (const DocumentReport& r : reports) all.push_back(&r);
  json mean = json::object();
  json count = json::object();
  for (const auto& [name, stats] : MetricStats(all)) {
    mean[name] = stats.mean();
    count[name] = stats.count;
  }
  const auto invalid = std::count_if(reports.begin(), reports.end(),
                                     [](const DocumentReport& r) { return !r.valid(); });
  return {{"documents", reports.size()},
          {"invalid", invalid},
          {"mean", std::move(mean)},
          {"count", std::move(count)}};
}

std::vector<std::string> Flags(const DocumentReport& r) {
  std::vector<std::string> flags;
  if (!r.valid()) flags.push_back("invalid");
  if (r.metrics) {
    flags.insert(flags.end(), r.metrics->band_expectation_flags.begin(),
                 r.metrics->band_expectation_flags.end());
  }
  for (const MetricError& e : r.errors) {
    flags.push_back(e.metric + " error: " + std::string(ErrorCodeName(e.code)));
  }
  return flags;
}

std::string Join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string RenderTable(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

}  // namespace

json ReportToJson(const DocumentReport& r) {
  json j;
  j["id"] = r.id;
  j["format"] = FormatName(r.format);
  j["valid"] = r.valid();
  j["band"] = r.band ? json(BandName(*r.band)) : json(nullptr);
  json violations = json::array();
  for (const Violation& v : r.violations) {
    violations.push_back(
        {{"code", ErrorCodeName(v.code)}, {"path", v.path}, {"message", v.message}});
  }
  j["violations"] = std::move(violations);
  if (r.metrics) {
    json scores = json::object();
    for (const MetricSlot& slot : kMetricSlots) {
      if (const auto& v = (*r.metrics).*slot.field) scores[slot.name] = *v;
    }
    j["metrics"] = {{"scores", std::move(scores)},
                    {"band_expectation_flags", r.metrics->band_expectation_flags},
                    {"notes", r.metrics->notes},
                    {"provenance", ProvenanceToJson(r.metrics->provenance)}};
  } else {
    j["metrics"] = nullptr;
  }
  json properties = json::array();
  for (const PropertyReport& p : r.properties) properties.push_back(PropertyToJson(p));
  j["properties"] = std::move(properties);
  json errors = json::array();
  for (const MetricError& e : r.errors) {
    errors.push_back(
        {{"metric", e.metric}, {"code", ErrorCodeName(e.code)}, {"message", e.message}});
  }
  j["errors"] = std::move(errors);
  return j;
}

std::string DumpCanonical(const json& j) {
  std::string out;
  DumpTo(j, out);
  return out;
}

std::string WriteReport(const std::vector<DocumentReport>& reports,
                        ReportFormat format) {
  if (format == ReportFormat::kJson) {
    json out;
    out["aggregate"] = Aggregate(reports);
    json items = json::array();
    for (const DocumentReport& r : reports) items.push_back(ReportToJson(r));
    out["reports"] = std::move(items);
    return DumpCanonical(out) + "\n";
  }

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {"id", "format", "band"};
  for (const MetricSlot& slot : kMetricSlots) header.push_back(slot.column);
  header.push_back("flags");
  rows.push_back(header);
  for (const DocumentReport& r : reports) {
    std::vector<std::string> row = {r.id, std::string(FormatName(r.format)),
                                    r.band ? std::string(BandName(*r.band)) : "-"};
    for (const MetricSlot& slot : kMetricSlots) {
      const std::optional<double> v =
          r.metrics ? (*r.metrics).*slot.field : std::nullopt;
      row.push_back(v ? FormatFixed(*v) : "-");
    }
    const std::vector<std::string> flags = Flags(r);
    row.push_back(flags.empty() ? "-" : Join(flags, "; "));
    rows.push_back(std::move(row));
  }
  std::vector<const DocumentReport*> all;
  for (const DocumentReport& r : reports) all.push_back(&r);
  const auto stats = MetricStats(all);
  std::vector<std::string> mean_row = {"mean", "", ""};
  for (const MetricSlot& slot : kMetricSlots) {
    const auto it = stats.find(slot.name);
    mean_row.push_back(it == stats.end() ? "-" : FormatFixed(it->second.mean()));
  }
  mean_row.push_back("");
  rows.push_back(std::move(mean_row));
  return RenderTable(rows);
}

json SummarizeCorpus(const std::vector<DocumentReport>& reports) {
  if (reports.empty()) {
    return {{"documents", 0}, {"message", "no documents"}, {"formats", json::object()}};
  }
  std::map<std::string, std::vector<const DocumentReport*>> by_format;
  for (const DocumentReport& r : reports) {
    by_format[std::string(FormatName(r.format))].push_back(&r);
  }
  json formats = json::object();
  for (const auto& [name, group] : by_format) {
    json metrics = json::object();
    for (const auto& [metric, s] : MetricStats(group)) {
      metrics[metric] = {{"mean", s.mean()}, {"min", s.min}, {"max", s.max}, {"count", s.count}};
    }
    std::map<std::string, std::pair<std::size_t, std::size_t>> pass;  // holds, assessed
    std::map<std::string, std::size_t> flags;
    std::size_t invalid = 0;
    std::size_t errors = 0;
    for (const DocumentReport* r : group) {
      if (!r->valid()) ++invalid;
      errors += r->errors.size();
      for (const PropertyReport& p : r->properties) {
        auto& [holds, assessed] = pass[p.property];
        if (p.verdict == Verdict::kNotAssessed) continue;
        ++assessed;
        if (p.holds()) ++holds;
      }
      if (r->metrics) {
        for (const std::string& f : r->metrics->band_expectation_flags) ++flags[f];
      }
    }
    json properties = json::object();
    for (const auto& [property, counts] : pass) {
      const auto [holds, assessed] = counts;
      properties[property] = {
          {"holds", holds},
          {"assessed", assessed},
          {"pass_rate", assessed ? json(static_cast<double>(holds) /
                                        static_cast<double>(assessed))
                                 : json(nullptr)}};
    }
    formats[name] = {{"documents", group.size()},
                     {"invalid", invalid},
                     {"errors", errors},
                     {"metrics", std::move(metrics)},
                     {"properties", std::move(properties)},
                     {"flags", flags}};
  }
  return {{"documents", reports.size()}, {"formats", std::move(formats)}};
}

std::string WriteSummary(const std::vector<DocumentReport>& reports,
                         ReportFormat format) {
  const json summary = SummarizeCorpus(reports);
  if (format == ReportFormat::kJson) return DumpCanonical(summary) + "\n";
  if (reports.empty()) return "no documents\n";

  std::ostringstream out;
  out << "documents: " << reports.size() << '\n';
  for (const auto& [name, section] : summary["formats"].items()) {
    out << '\n'
        << "[" << name << "] documents: " << section["documents"].get<std::size_t>()
        << ", invalid: " << section["invalid"].get<std::size_t>()
        << ", errors: " << section["errors"].get<std::size_t>() << '\n';
    std::vector<std::vector<std::string>> rows = {{"metric", "mean", "min", "max", "n"}};
    for (const auto& [metric, s] : section["metrics"].items()) {
      rows.push_back({metric, FormatFixed(s["mean"].get<double>()),
                      FormatFixed(s["min"].get<double>()),
                      FormatFixed(s["max"].get<double>()),
                      std::to_string(s["count"].get<std::size_t>())});
    }
    if (rows.size() > 1) out << RenderTable(rows);
    std::vector<std::vector<std::string>> props = {{"property", "pass_rate", "holds/assessed"}};
    for (const auto& [property, p] : section["properties"].items()) {
      props.push_back({property,
                       p["pass_rate"].is_null() ? "-" : FormatFixed(p["pass_rate"].get<double>()),
                       std::to_string(p["holds"].get<std::size_t>()) + "/" +
                           std::to_string(p["assessed"].get<std::size_t>())});
    }
    if (props.size() > 1) out << RenderTable(props);
    for (const auto& [flag, count] : section["flags"].items()) {
      out << "flag " << flag << ": " << count.get<std::size_t>() << '\n';
    }
  }
  return out.str();
}

}  // namespace rationale
