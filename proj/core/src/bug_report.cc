// Copyright 2026 The cypherdiff Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cypherdiff/bug_report.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "cypherdiff/parser.h"
#include "cypherdiff/render.h"
#include "cypherdiff/scripts.h"
#include "json.hpp"

namespace cypherdiff {

const char* toolkit_version() { return "cypherdiff " CYPHERDIFF_VERSION; }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BundleError("cannot read " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  out.flush();
  if (!out) throw BundleError("cannot write " + path.string());
}

namespace {

using nlohmann::json;

std::string quote(const std::string& s) { return json(s).dump(); }

void write_cell(const Value& v, std::string& out) {
  switch (v.kind()) {
    case ValueKind::kNull: out += "null"; return;
    case ValueKind::kBoolean: out += v.as_bool() ? "true" : "false"; return;
    case ValueKind::kInteger: out += std::to_string(v.as_int()); return;
    case ValueKind::kFloat: {
      const double d = v.as_float();
      if (std::isfinite(d)) {
        out += format_float_17(d);
      } else {
        out += "{\"float\": " + quote(std::isnan(d) ? "nan" : (d > 0 ? "inf" : "-inf")) + "}";
      }
      return;
    }
    case ValueKind::kText: out += quote(v.as_text()); return;
    case ValueKind::kList: {
      out += '[';
      const auto& items = v.as_list();
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ", ";
        write_cell(items[i], out);
      }
      out += ']';
      return;
    }
    case ValueKind::kNode: out += "{\"node\": " + std::to_string(v.entity_id()) + "}"; return;
    case ValueKind::kRelationship:
      out += "{\"relationship\": " + std::to_string(v.entity_id()) + "}";
      return;
  }
}

Value read_cell(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return Value::null();
    case json::value_t::boolean: return Value::boolean(j.get<bool>());
    case json::value_t::number_integer:
    case json::value_t::number_unsigned: return Value::integer(j.get<std::int64_t>());
    case json::value_t::number_float: return Value::floating(j.get<double>());
    case json::value_t::string: return Value::text(j.get<std::string>());
    case json::value_t::array: {
      ValueList items;
      for (const auto& e : j) items.push_back(read_cell(e));
      return Value::list(std::move(items));
    }
    case json::value_t::object:
      if (j.contains("node")) return Value::node(j["node"].get<std::int64_t>());
      if (j.contains("relationship")) return Value::relationship(j["relationship"].get<std::int64_t>());
      if (j.contains("float")) {
        const std::string s = j["float"].get<std::string>();
        if (s == "nan") return Value::floating(std::nan(""));
        return Value::floating(s == "inf" ? HUGE_VAL : -HUGE_VAL);
      }
      break;
    default:
      break;
  }
  throw BundleError("unrecognized result cell " + j.dump());
}

}  // namespace

std::string outcomes_json(std::span<const TargetRecord> records) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const TargetRecord& r = records[i];
    const ExecOutcome& o = r.outcome;
    out += "  {\n    \"target\": " + quote(r.descriptor) + ",\n";
    out += "    \"version\": " + quote(r.version) + ",\n";
    out += "    \"kind\": " + quote(to_string(o.kind));
    if (o.ok()) {
      out += ",\n    \"columns\": [";
      for (std::size_t c = 0; c < o.result.columns.size(); ++c) {
        if (c) out += ", ";
        out += quote(o.result.columns[c]);
      }
      out += "],\n    \"ordered\": ";
      out += o.result.ordered ? "true" : "false";
      out += ",\n    \"rows\": [";
      for (std::size_t k = 0; k < o.result.rows.size(); ++k) {
        out += k ? ",\n      " : "\n      ";
        write_cell(Value::list(o.result.rows[k]), out);
      }
      out += o.result.rows.empty() ? "]" : "\n    ]";
    } else {
      out += ",\n    \"message\": " + quote(o.message);
    }
    out += "\n  }";
    out += i + 1 < records.size() ? ",\n" : "\n";
  }
  return out + "]\n";
}

std::vector<TargetRecord> parse_outcomes_json(std::string_view text) {
  std::vector<TargetRecord> records;
  try {
    const json j = json::parse(text);
    for (const auto& e : j) {
      TargetRecord r;
      r.descriptor = e.at("target").get<std::string>();
      r.version = e.value("version", r.descriptor);
      const OutcomeKind kind = outcome_kind_from_string(e.at("kind").get<std::string>());
      if (kind == OutcomeKind::kSuccess) {
        ResultSet rs;
        rs.columns = e.at("columns").get<std::vector<std::string>>();
        rs.ordered = e.at("ordered").get<bool>();
        for (const auto& row : e.at("rows")) rs.rows.push_back(read_cell(row).as_list());
        r.outcome = ExecOutcome::success(std::move(rs));
      } else {
        r.outcome = ExecOutcome::failure(kind, e.value("message", ""));
      }
      records.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw BundleError(std::string("malformed outcomes.json: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw BundleError(std::string("malformed outcomes.json: ") + e.what());
  }
  return records;
}

std::string manifest_json(const BugReport& report) {
  nlohmann::ordered_json j;
  j["toolkit_version"] = report.toolkit_version;
  j["seed"] = report.seed;
  j["iteration"] = report.iteration;
  j["query_index"] = report.query_index;
  j["verdict"] = to_string(report.verdict.kind);
  j["details"] = report.verdict.details;
  j["disagreeing_pair"] = {report.verdict.first, report.verdict.second};
  j["self_check_failure"] = report.verdict.self_check_failure;
  auto targets = nlohmann::ordered_json::array();
  auto versions = nlohmann::ordered_json::array();
  for (const auto& r : report.outcomes) {
    targets.push_back(r.descriptor);
    versions.push_back(r.version);
  }
  j["targets"] = targets;
  j["target_versions"] = versions;
  j["reduced"] = report.original_query.has_value();
  if (report.original_query) j["original_query"] = *report.original_query;
  return j.dump(2) + "\n";
}

void emit_bug_report(const BugReport& report, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw BundleError("cannot create " + dir.string() + ": " + ec.message());
  write_file(dir / "manifest.json", manifest_json(report));
  write_file(dir / "schema.cypher", schema_script(report.schema, report.indexes));
  write_file(dir / "graph.cypher", graph_script(report.graph));
  write_file(dir / "query.cypher", render(report.query) + "\n");
  write_file(dir / "outcomes.json", outcomes_json(report.outcomes));
}

BugReport load_bug_report(const std::filesystem::path& dir) {
  BugReport r;
  try {
    const json m = json::parse(read_file(dir / "manifest.json"));
    r.toolkit_version = m.at("toolkit_version").get<std::string>();
    r.seed = m.at("seed").get<std::uint64_t>();
    r.iteration = m.at("iteration").get<int>();
    r.query_index = m.at("query_index").get<int>();
    r.verdict.kind = verdict_kind_from_string(m.at("verdict").get<std::string>());
    r.verdict.details = m.value("details", "");
    if (m.contains("disagreeing_pair")) {
      r.verdict.first = m["disagreeing_pair"].at(0).get<std::size_t>();
      r.verdict.second = m["disagreeing_pair"].at(1).get<std::size_t>();
    }
    r.verdict.self_check_failure = m.value("self_check_failure", false);
    if (m.contains("original_query")) r.original_query = m["original_query"].get<std::string>();
  } catch (const json::exception& e) {
    throw BundleError(std::string("malformed manifest.json: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw BundleError(std::string("malformed manifest.json: ") + e.what());
  }
  try {
    SchemaScript s = parse_schema_script(read_file(dir / "schema.cypher"));
    r.schema = std::move(s.schema);
    r.indexes = std::move(s.indexes);
    r.graph = parse_graph_script(read_file(dir / "graph.cypher"), r.schema);
    r.query = parse_query(read_file(dir / "query.cypher"));
  } catch (const BundleError&) {
    throw;
  } catch (const std::exception& e) {
    throw BundleError(dir.string() + ": " + e.what());
  }
  r.outcomes = parse_outcomes_json(read_file(dir / "outcomes.json"));
  return r;
}

void emit_corpus_iteration(const CorpusIteration& it, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw BundleError("cannot create " + dir.string() + ": " + ec.message());
  write_file(dir / "schema.cypher", schema_script(it.schema, it.indexes));
  write_file(dir / "graph.cypher", graph_script(it.graph));
  std::string queries;
  std::string outcomes;
  for (std::size_t i = 0; i < it.queries.size(); ++i) {
    queries += render(it.queries[i]) + "\n";
    outcomes += json::parse(outcomes_json(it.outcomes.at(i))).dump() + "\n";
  }
  write_file(dir / "queries.cypher", queries);
  write_file(dir / "outcomes.jsonl", outcomes);
}

CorpusIteration load_corpus_iteration(const std::filesystem::path& dir) {
  CorpusIteration it;
  try {
    SchemaScript s = parse_schema_script(read_file(dir / "schema.cypher"));
    it.schema = std::move(s.schema);
    it.indexes = std::move(s.indexes);
    it.graph = parse_graph_script(read_file(dir / "graph.cypher"), it.schema);
    std::istringstream queries(read_file(dir / "queries.cypher"));
    for (std::string line; std::getline(queries, line);) {
      if (!line.empty()) it.queries.push_back(parse_query(line));
    }
  } catch (const BundleError&) {
    throw;
  } catch (const std::exception& e) {
    throw BundleError(dir.string() + ": " + e.what());
  }
  std::istringstream outcomes(read_file(dir / "outcomes.jsonl"));
  for (std::string line; std::getline(outcomes, line);) {
    if (!line.empty()) it.outcomes.push_back(parse_outcomes_json(line));
  }
  if (it.outcomes.size() != it.queries.size()) {
    throw BundleError(dir.string() + ": queries and outcomes differ in count");
  }
  return it;
}

}  // namespace cypherdiff
