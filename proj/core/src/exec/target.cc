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

#include "cypherdiff/exec/target.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <optional>

#include "cypherdiff/errors.h"
#include "cypherdiff/exec/bolt.h"
#include "cypherdiff/exec/resp.h"
#include "cypherdiff/render.h"
#include "cypherdiff/scripts.h"

namespace cypherdiff {

const char* to_string(TargetKind kind) {
  switch (kind) {
    case TargetKind::kReference: return "reference";
    case TargetKind::kNeo4j: return "neo4j";
    case TargetKind::kMemgraph: return "memgraph";
    case TargetKind::kRedisGraph: return "redisgraph";
  }
  return "?";
}

EngineTarget parse_target(const std::string& descriptor) {
  EngineTarget t;
  t.descriptor = descriptor;
  t.label = descriptor;
  if (descriptor == "reference") return t;
  if (descriptor == "reference:count-empty-no-row") {
    t.faults.count_over_empty_drops_row = true;
    return t;
  }
  if (descriptor == "reference:optional-where-drops-matched") {
    t.faults.optional_where_drops_matched = true;
    return t;
  }
  const auto scheme_end = descriptor.find("://");
  if (scheme_end == std::string::npos) throw ConfigError("unknown target '" + descriptor + "'");
  const std::string scheme = descriptor.substr(0, scheme_end);
  std::string rest = descriptor.substr(scheme_end + 3);
  if (scheme == "neo4j") {
    t.kind = TargetKind::kNeo4j;
    t.port = 7687;
  } else if (scheme == "memgraph") {
    t.kind = TargetKind::kMemgraph;
    t.port = 7687;
  } else if (scheme == "redisgraph") {
    t.kind = TargetKind::kRedisGraph;
    t.port = 6379;
    t.graph = "cypherdiff";
    t.caps.allows_match_after_optional_match = false;
  } else {
    throw ConfigError("unknown target scheme '" + scheme + "'");
  }
  if (const auto at = rest.rfind('@'); at != std::string::npos) {
    if (t.kind == TargetKind::kRedisGraph) throw ConfigError("redisgraph targets take no credentials");
    const std::string cred = rest.substr(0, at);
    rest = rest.substr(at + 1);
    const auto colon = cred.find(':');
    t.user = cred.substr(0, colon);
    if (colon != std::string::npos) t.password = cred.substr(colon + 1);
  }
  if (const auto slash = rest.find('/'); slash != std::string::npos) {
    if (t.kind != TargetKind::kRedisGraph) throw ConfigError("unexpected path in '" + descriptor + "'");
    t.graph = rest.substr(slash + 1);
    if (t.graph.empty()) throw ConfigError("empty graph name in '" + descriptor + "'");
    rest = rest.substr(0, slash);
  }
  if (const auto colon = rest.rfind(':'); colon != std::string::npos) {
    const std::string port = rest.substr(colon + 1);
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(port.data(), port.data() + port.size(), value);
    if (ec != std::errc() || ptr != port.data() + port.size() || value == 0 || value > 65535) {
      throw ConfigError("bad port in '" + descriptor + "'");
    }
    t.port = static_cast<std::uint16_t>(value);
    rest = rest.substr(0, colon);
  }
  if (rest.empty()) throw ConfigError("missing host in '" + descriptor + "'");
  t.host = rest;
  return t;
}

EngineCaps common_caps(std::span<const EngineTarget> targets) {
  EngineCaps caps;
  for (const auto& t : targets) caps = caps.intersect(t.caps);
  return caps;
}

namespace {

bool contains(const std::string& s, const char* needle) {
  return s.find(needle) != std::string::npos;
}

bool contains_any(const std::string& s, std::initializer_list<const char*> needles) {
  return std::any_of(needles.begin(), needles.end(),
                     [&](const char* n) { return contains(s, n); });
}

}  // namespace

OutcomeKind classify_neo4j_failure(const std::string& code, const std::string& message) {
  if (contains_any(code, {"Statement.SyntaxError", "Statement.SemanticError",
                          "Statement.ParameterMissing", "Procedure.ProcedureNotFound"})) {
    return OutcomeKind::kSemanticRejection;
  }
  if (contains_any(code, {"TransactionTimedOut", "Transaction.TransactionTimedOutClientConfiguration"}) ||
      contains(message, "terminated")) {
    return OutcomeKind::kTimeout;
  }
  return OutcomeKind::kRuntimeError;
}

OutcomeKind classify_memgraph_failure(const std::string& /*code*/, const std::string& message) {
  if (contains_any(message, {"Unbound variable", "Redeclaring variable", "mismatched input",
                             "no viable alternative", "extraneous input", "Invalid input",
                             "SyntaxException", "SemanticException", "doesn't exist",
                             "Aggregation functions are only allowed", "not defined"})) {
    return OutcomeKind::kSemanticRejection;
  }
  if (contains_any(message, {"transaction timeout", "Transaction was asked to abort",
                             "Query execution timeout"})) {
    return OutcomeKind::kTimeout;
  }
  return OutcomeKind::kRuntimeError;
}

OutcomeKind classify_redisgraph_error(const std::string& message) {
  if (contains_any(message, {"Invalid input", "not defined", "Unknown function",
                             "syntax error"})) {
    return OutcomeKind::kSemanticRejection;
  }
  if (contains_any(message, {"Query timed out", "timed out"})) return OutcomeKind::kTimeout;
  return OutcomeKind::kRuntimeError;
}

namespace {

Deadline after(std::chrono::milliseconds ms) { return std::chrono::steady_clock::now() + ms; }

constexpr std::chrono::milliseconds kSetupTimeout{60'000};
constexpr std::chrono::milliseconds kConnectTimeout{5'000};
constexpr std::chrono::milliseconds kGrace{2'000};

class ReferenceSession : public TargetSession {
 public:
  using TargetSession::TargetSession;

  void setup(const PropertyGraph& graph, const std::vector<IndexSpec>&) override {
    if (const auto report = validate_graph(graph); !report.ok()) {
      const auto& v = report.violations.front();
      throw SetupError(target_.label + ": invalid graph: " + v.kind + " at " + v.entity);
    }
    graph_ = graph;
  }

  ExecOutcome execute(const Query& query, std::chrono::milliseconds time_limit) override {
    EvalOptions options;
    options.deadline = after(time_limit);
    options.faults = target_.faults;
    return reference_eval(graph_, query, options);
  }

 private:
  PropertyGraph graph_;
};

// Shared connection handling for the two Bolt engines.
class BoltSession : public TargetSession {
 public:
  explicit BoltSession(EngineTarget target)
      : TargetSession(std::move(target)),
        client_(BoltClient::Options{target_.host, target_.port, target_.user, target_.password,
                                    "cypherdiff/" CYPHERDIFF_VERSION}) {}

  ~BoltSession() override { client_.close(); }

  std::string version() const override {
    return client_.server_agent().empty() ? target_.label : client_.server_agent();
  }

  void setup(const PropertyGraph& graph, const std::vector<IndexSpec>& indexes) override {
    const Deadline deadline = after(kSetupTimeout);
    try {
      if (!client_.connected()) client_.connect(after(kConnectTimeout));
      must_run("MATCH (n) DETACH DELETE n", deadline);
      drop_indexes(deadline);
      const Dialect dialect =
          target_.kind == TargetKind::kNeo4j ? Dialect::kNeo4j : Dialect::kMemgraph;
      for (std::size_t i = 0; i < indexes.size(); ++i) {
        must_run(index_statement(indexes[i], dialect, static_cast<int>(i)), deadline);
      }
      if (!graph.nodes.empty()) must_run(graph_script(graph, true), deadline);
    } catch (const SetupError&) {
      throw;
    } catch (const std::exception& e) {
      client_.close();
      throw SetupError(target_.label + ": " + e.what());
    }
  }

  ExecOutcome execute(const Query& query, std::chrono::milliseconds time_limit) override {
    try {
      if (!client_.connected()) client_.connect(after(kConnectTimeout));
      const BoltResult r = client_.run(render(query), after(time_limit + kGrace),
                                       target_.kind == TargetKind::kNeo4j ? time_limit.count() : 0);
      if (r.failure) {
        const OutcomeKind kind = target_.kind == TargetKind::kNeo4j
                                     ? classify_neo4j_failure(r.failure->code, r.failure->message)
                                     : classify_memgraph_failure(r.failure->code, r.failure->message);
        return ExecOutcome::failure(kind, r.failure->code + ": " + r.failure->message);
      }
      ResultSet result;
      result.columns = r.fields;
      result.ordered = !query.final_return().order_by.empty();
      for (const auto& rec : r.records) {
        Row row;
        for (const auto& cell : rec) row.push_back(to_value(cell));
        result.rows.push_back(std::move(row));
      }
      return ExecOutcome::success(std::move(result));
    } catch (const DeadlineExceeded&) {
      client_.close();  // protocol state unknown
      return ExecOutcome::failure(OutcomeKind::kTimeout, "client deadline exceeded");
    } catch (const ConnectionError& e) {
      client_.close();
      return ExecOutcome::failure(OutcomeKind::kConnectionLost, e.what());
    } catch (const std::exception& e) {
      client_.close();
      return ExecOutcome::failure(OutcomeKind::kConnectionLost,
                                  std::string("protocol error: ") + e.what());
    }
  }

 private:
  BoltResult must_run(const std::string& statement, Deadline deadline) {
    BoltResult r = client_.run(statement, deadline);
    if (r.failure) {
      throw SetupError(target_.label + ": '" + statement + "' failed: " + r.failure->code +
                       ": " + r.failure->message);
    }
    return r;
  }

  void drop_indexes(Deadline deadline) {
    if (target_.kind == TargetKind::kNeo4j) {
      const BoltResult r = must_run(
          "SHOW INDEXES YIELD name WHERE name STARTS WITH 'cd_idx' RETURN name", deadline);
      for (const auto& rec : r.records) {
        if (!rec.empty() && rec[0].text()) must_run("DROP INDEX " + *rec[0].text(), deadline);
      }
      return;
    }
    // Memgraph: index_type, label, property(, count)
    const BoltResult r = must_run("SHOW INDEX INFO", deadline);
    for (const auto& rec : r.records) {
      if (rec.size() < 3 || !rec[0].text() || !rec[1].text() || !rec[2].text()) continue;
      const std::string& type = *rec[0].text();
      const std::string prefix = type.rfind("edge", 0) == 0 ? "DROP EDGE INDEX ON :" : "DROP INDEX ON :";
      must_run(prefix + *rec[1].text() + "(" + *rec[2].text() + ")", deadline);
    }
  }

  BoltClient client_;
};

class RedisSession : public TargetSession {
 public:
  using TargetSession::TargetSession;
  ~RedisSession() override { client_.close(); }

  void setup(const PropertyGraph& graph, const std::vector<IndexSpec>& indexes) override {
    const Deadline deadline = after(kSetupTimeout);
    try {
      if (!client_.connected()) client_.connect(target_.host, target_.port, after(kConnectTimeout));
      client_.command({"GRAPH.DELETE", target_.graph}, deadline);  // missing key is fine
      for (const auto& index : indexes) {
        must_query(index_statement(index, Dialect::kRedisGraph), deadline);
      }
      if (!graph.nodes.empty()) must_query(graph_script(graph, true), deadline);
      property_keys_.clear();
      const GraphReply keys = must_query("CALL db.propertyKeys()", deadline);
      for (const auto& row : keys.result.rows) {
        if (!row.empty() && row[0].kind() == ValueKind::kText) property_keys_.push_back(row[0].as_text());
      }
    } catch (const SetupError&) {
      throw;
    } catch (const std::exception& e) {
      client_.close();
      throw SetupError(target_.label + ": " + e.what());
    }
  }

  ExecOutcome execute(const Query& query, std::chrono::milliseconds time_limit) override {
    try {
      if (!client_.connected()) client_.connect(target_.host, target_.port, after(kConnectTimeout));
      const RespValue reply =
          client_.command({"GRAPH.QUERY", target_.graph, render(query), "--compact", "TIMEOUT",
                           std::to_string(time_limit.count())},
                          after(time_limit + kGrace));
      GraphReply r = parse_compact_reply(reply, property_keys_);
      if (r.error) return ExecOutcome::failure(classify_redisgraph_error(*r.error), *r.error);
      r.result.ordered = !query.final_return().order_by.empty();
      return ExecOutcome::success(std::move(r.result));
    } catch (const DeadlineExceeded&) {
      client_.close();
      return ExecOutcome::failure(OutcomeKind::kTimeout, "client deadline exceeded");
    } catch (const ConnectionError& e) {
      client_.close();
      return ExecOutcome::failure(OutcomeKind::kConnectionLost, e.what());
    } catch (const std::exception& e) {
      client_.close();
      return ExecOutcome::failure(OutcomeKind::kConnectionLost,
                                  std::string("protocol error: ") + e.what());
    }
  }

 private:
  GraphReply must_query(const std::string& statement, Deadline deadline) {
    GraphReply r = parse_compact_reply(
        client_.command({"GRAPH.QUERY", target_.graph, statement, "--compact"}, deadline), {});
    if (r.error) throw SetupError(target_.label + ": '" + statement + "' failed: " + *r.error);
    return r;
  }

  RespClient client_;
  std::vector<std::string> property_keys_;
};

}  // namespace

std::unique_ptr<TargetSession> open_session(const EngineTarget& target) {
  switch (target.kind) {
    case TargetKind::kReference: return std::make_unique<ReferenceSession>(target);
    case TargetKind::kNeo4j:
    case TargetKind::kMemgraph: return std::make_unique<BoltSession>(target);
    case TargetKind::kRedisGraph: return std::make_unique<RedisSession>(target);
  }
  throw ConfigError("unknown target kind");
}

}  // namespace cypherdiff
