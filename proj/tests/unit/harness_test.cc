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


#include <cmath>
#include <filesystem>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cypherdiff/bug_report.h"
#include "cypherdiff/campaign.h"
#include "cypherdiff/config.h"
#include "cypherdiff/errors.h"
#include "cypherdiff/exec/reference.h"
#include "cypherdiff/oracle.h"
#include "cypherdiff/parser.h"
#include "cypherdiff/reducer.h"
#include "cypherdiff/render.h"
#include "cypherdiff/scripts.h"
#include "cypherdiff/semantics.h"
#include "test_util.h"

namespace cypherdiff {
namespace {

namespace fs = std::filesystem;

// Fresh scratch directory per test.
fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "cypherdiff-unit" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST(Config, Defaults) {
  const CampaignConfig c = parse_config("{}");
  EXPECT_EQ(c.targets, std::vector<std::string>{"reference"});
  EXPECT_EQ(c.num_generated, 100);
  EXPECT_EQ(c.min_len, 3);
  EXPECT_EQ(c.max_len, 6);
  EXPECT_TRUE(c.frequency_feedback);
}

TEST(Config, ParsesFields) {
  const CampaignConfig c = parse_config(R"({
    "targets": ["reference", "reference:count-empty-no-row"],
    "seed": 42, "num_generated": 10, "num_mutated": 0, "max_iterations": 2,
    "limits": {"node_count": 7, "text_alphabet": "xyz"},
    "frequency_feedback": false
  })");
  EXPECT_EQ(c.targets.size(), 2u);
  EXPECT_EQ(c.seed, 42u);
  EXPECT_EQ(c.num_mutated, 0);
  EXPECT_EQ(c.max_iterations, 2);
  EXPECT_EQ(c.limits.node_count, 7);
  EXPECT_EQ(c.limits.text_alphabet, "xyz");
  EXPECT_FALSE(c.frequency_feedback);
}

TEST(Config, RoundTripsThroughJson) {
  CampaignConfig c;
  c.seed = 9;
  c.max_iterations = 4;
  c.limits.int_max = 7;
  EXPECT_EQ(to_json(parse_config(to_json(c))), to_json(c));
}

TEST(Config, Rejections) {
  const char* bad[] = {
      R"({"sed": 1})",
      R"({"limits": {"nodes": 3}})",
      R"({"seed": "one"})",
      R"({"min_len": 5, "max_len": 4})",
      R"({"targets": []})",
      R"({"targets": ["mysql://x"]})",
      R"({"num_generated": -1})",
      R"({"limits": {"int_min": 3, "int_max": 1}})",
      R"([1, 2])",
      R"({"seed": 1)",
  };
  for (const char* text : bad) EXPECT_THROW(parse_config(text), ConfigError) << text;
}

TEST(Scripts, SchemaRoundTrip) {
  const GraphSchema s = testing::small_schema();
  const std::vector<IndexSpec> idx = {{"L0", false, "k0"}, {"T0", true, "k4"}};
  const SchemaScript parsed = parse_schema_script(schema_script(s, idx));
  EXPECT_EQ(parsed.schema, s);
  EXPECT_EQ(parsed.indexes, idx);
}

TEST(Scripts, GraphRoundTrip) {
  const PropertyGraph g = testing::small_graph();
  EXPECT_EQ(parse_graph_script(graph_script(g), g.schema), g);
  EXPECT_NE(graph_script(g, true).find(kEntityIdKey), std::string::npos);
  PropertyGraph empty;
  empty.schema = g.schema;
  EXPECT_EQ(parse_graph_script(graph_script(empty), g.schema), empty);
}

TEST(Scripts, IndexDialects) {
  const IndexSpec node{"L0", false, "k0"};
  EXPECT_EQ(index_statement(node, Dialect::kGeneric), "CREATE INDEX FOR (n:L0) ON (n.k0)");
  EXPECT_EQ(index_statement(node, Dialect::kMemgraph), "CREATE INDEX ON :L0(k0)");
  EXPECT_NE(index_statement(node, Dialect::kNeo4j, 2).find("cd_idx"), std::string::npos);
}

TEST(Scripts, MalformedSchemaThrows) {
  EXPECT_THROW(parse_schema_script("// key k0 COLOUR\n"), ConfigError);
}

BugReport sample_report() {
  BugReport r;
  r.seed = 7;
  r.iteration = 1;
  r.query_index = 12;
  r.verdict.kind = VerdictKind::kWrongResultBug;
  r.verdict.details = "row counts differ";
  r.verdict.second = 1;
  r.toolkit_version = toolkit_version();
  r.graph = testing::small_graph();
  r.schema = r.graph.schema;
  r.indexes = {{"L0", false, "k1"}};
  r.query = parse_query("MATCH (n:L0) RETURN n, n.k2 AS t, 0.1 AS f;");
  r.original_query = "MATCH (n:L0) WITH n RETURN n, n.k2 AS t, 0.1 AS f;";
  ResultSet rs;
  rs.columns = {"n", "t", "f"};
  rs.rows = {{Value::node(0), Value::text("ab\"c"), Value::floating(0.1)},
             {Value::relationship(1), Value::null(),
              Value::floating(std::numeric_limits<double>::infinity())}};
  r.outcomes = {{"reference", "reference", ExecOutcome::success(rs)},
                {"reference:count-empty-no-row", "reference",
                 ExecOutcome::failure(OutcomeKind::kRuntimeError, "boom")}};
  return r;
}

TEST(BugReport, OutcomesJsonRoundTrip) {
  const BugReport r = sample_report();
  const std::string json = outcomes_json(r.outcomes);
  EXPECT_NE(json.find("0.10000000000000001"), std::string::npos);
  EXPECT_NE(json.find("{\"node\": 0}"), std::string::npos);
  const auto parsed = parse_outcomes_json(json);
  ASSERT_EQ(parsed.size(), 2u);
  EXPECT_EQ(parsed[0].outcome, r.outcomes[0].outcome);
  EXPECT_EQ(parsed[1].outcome, r.outcomes[1].outcome);
  EXPECT_EQ(parsed[1].descriptor, "reference:count-empty-no-row");
}

TEST(BugReport, BundleRoundTrip) {
  const fs::path dir = scratch("bundle") / "0001";
  const BugReport r = sample_report();
  emit_bug_report(r, dir);
  for (const char* f : {"manifest.json", "schema.cypher", "graph.cypher", "query.cypher", "outcomes.json"}) {
    EXPECT_TRUE(fs::exists(dir / f)) << f;
  }
  const BugReport back = load_bug_report(dir);
  EXPECT_EQ(back.seed, r.seed);
  EXPECT_EQ(back.query_index, r.query_index);
  EXPECT_EQ(back.verdict.kind, r.verdict.kind);
  EXPECT_EQ(back.schema, r.schema);
  EXPECT_EQ(back.indexes, r.indexes);
  EXPECT_EQ(back.graph, r.graph);
  EXPECT_EQ(render(back.query), render(r.query));
  EXPECT_EQ(back.original_query, r.original_query);
  ASSERT_EQ(back.outcomes.size(), 2u);
  EXPECT_EQ(back.outcomes[0].outcome, r.outcomes[0].outcome);
  EXPECT_EQ(manifest_json(back), manifest_json(r));
}

TEST(BugReport, MissingBundleThrows) {
  EXPECT_THROW(load_bug_report(scratch("missing") / "nope"), BundleError);
}

TEST(BugReport, CorpusRoundTrip) {
  const fs::path dir = scratch("corpus") / "0000";
  CorpusIteration it;
  it.graph = testing::small_graph();
  it.schema = it.graph.schema;
  it.queries = {parse_query("RETURN 1 AS a;"), parse_query("MATCH (n) RETURN n;")};
  ResultSet one;
  one.columns = {"a"};
  one.rows = {{Value::integer(1)}};
  it.outcomes = {{{"reference", "reference", ExecOutcome::success(one)}},
                 {{"reference", "reference", ExecOutcome::failure(OutcomeKind::kTimeout, "slow")}}};
  emit_corpus_iteration(it, dir);
  const CorpusIteration back = load_corpus_iteration(dir);
  EXPECT_EQ(back.graph, it.graph);
  ASSERT_EQ(back.queries.size(), 2u);
  EXPECT_EQ(render(back.queries[1]), "MATCH (n) RETURN n;");
  EXPECT_EQ(back.outcomes[1][0].outcome.kind, OutcomeKind::kTimeout);
}

// Reference and faulty reference disagree on the query over `graph`.
std::function<bool(const Query&)> disagrees(const PropertyGraph& graph, FaultSet faults) {
  return [graph, faults](const Query& q) {
    EvalOptions faulty;
    faulty.faults = faults;
    const ExecOutcome outcomes[] = {reference_eval(graph, q), reference_eval(graph, q, faulty)};
    return compare(outcomes).is_bug();
  };
}

TEST(Reducer, DropsIrrelevantTrailingWith) {
  PropertyGraph g;
  g.nodes = {{0, {}, {}}};
  FaultSet f;
  f.optional_where_drops_matched = true;
  const Query q = parse_query("MATCH (n) OPTIONAL MATCH (n) WHERE true WITH n RETURN n;");
  const auto still_fails = disagrees(g, f);
  ASSERT_TRUE(still_fails(q));
  const Query reduced = reduce_query(q, g.schema, still_fails);
  EXPECT_LT(reduced.length(), q.length());
  for (const Clause& c : reduced.clauses) EXPECT_FALSE(std::holds_alternative<WithClause>(c));
  EXPECT_TRUE(still_fails(reduced));
  EXPECT_TRUE(validate_semantics(reduced, g.schema).ok());
}

TEST(Reducer, MinimalQueryIsAFixpoint) {
  const Query q = parse_query("RETURN 1 AS a;");
  const Query reduced = reduce_query(q, GraphSchema{}, [](const Query&) { return true; });
  EXPECT_EQ(render(reduced), render(q));
}

TEST(Reducer, CandidatesCoverSubClauses) {
  const Query q = parse_query(
      "MATCH (n:L0 {k0: 1})-[r:T0]->(m) WHERE (n.k0 > 0) AND (m.k3) RETURN n.k0 AS a, m ORDER BY a SKIP 1 LIMIT 2;");
  std::set<std::string> texts;
  for (const Query& c : reduction_candidates(q)) texts.insert(render(c));
  EXPECT_TRUE(texts.contains("MATCH (n:L0 {k0: 1})-[r:T0]->(m) RETURN n.k0 AS a, m ORDER BY a SKIP 1 LIMIT 2;"));
  EXPECT_TRUE(texts.contains("MATCH (n:L0 {k0: 1})-[r:T0]->(m) WHERE n.k0 > 0 RETURN n.k0 AS a, m ORDER BY a SKIP 1 LIMIT 2;"));
  EXPECT_TRUE(texts.contains("MATCH (n:L0 {k0: 1})-[r:T0]->(m) WHERE (n.k0 > 0) AND m.k3 RETURN n.k0 AS a, m ORDER BY a LIMIT 2;"));
  EXPECT_TRUE(texts.contains("MATCH (n:L0)-[r:T0]->(m) WHERE (n.k0 > 0) AND m.k3 RETURN n.k0 AS a, m ORDER BY a SKIP 1 LIMIT 2;"));
}

CampaignConfig fault_config(const fs::path& out) {
  CampaignConfig c;
  c.targets = {"reference", "reference:count-empty-no-row"};
  c.seed = 3;
  c.max_iterations = 2;
  c.num_generated = 60;
  c.num_mutated = 60;
  c.graph_mutants = 0;
  c.limits = GenLimits::desk_small();
  c.output_dir = out.string();
  return c;
}

TEST(Campaign, FindsInjectedFaultAndReplays) {
  const fs::path out = scratch("campaign");
  const CampaignResult r = run_campaign(fault_config(out));
  ASSERT_GE(r.bugs.size(), 2u);
  ASSERT_EQ(r.bundle_dirs.size(), r.bugs.size());
  EXPECT_EQ(std::set<fs::path>(r.bundle_dirs.begin(), r.bundle_dirs.end()).size(), r.bundle_dirs.size());
  EXPECT_TRUE(fs::exists(out / "summary.json"));
  for (const auto& dir : r.bundle_dirs) {
    const BugReport b = load_bug_report(dir);
    const ReplayResult replayed = replay(b);
    EXPECT_TRUE(replayed.reproduced) << dir;
    EXPECT_EQ(replayed.verdict.kind, b.verdict.kind);
  }
  EXPECT_THROW(run_campaign(fault_config(out)), ConfigError);
}

TEST(Campaign, Deterministic) {
  CampaignConfig c = fault_config("unused");
  c.reduce = false;
  CampaignOptions o;
  o.write_output = false;
  o.keep_corpus = true;
  const CampaignResult a = run_campaign(c, o);
  const CampaignResult b = run_campaign(c, o);
  ASSERT_EQ(a.corpus.size(), b.corpus.size());
  for (std::size_t i = 0; i < a.corpus.size(); ++i) {
    EXPECT_EQ(render(a.corpus[i].query), render(b.corpus[i].query));
  }
  EXPECT_EQ(a.bugs.size(), b.bugs.size());
}

TEST(Campaign, NoMutationArm) {
  CampaignConfig c = fault_config("unused");
  c.num_mutated = 0;
  CampaignOptions o;
  o.write_output = false;
  const CampaignResult r = run_campaign(c, o);
  EXPECT_EQ(r.mutated, 0u);
  EXPECT_EQ(r.generated + r.generation_failures, 120u);
}

TEST(Campaign, ReductionKeepsVerdict) {
  CampaignConfig c = fault_config("unused");
  c.stop_on_first_bug = true;
  CampaignOptions o;
  o.write_output = false;
  const CampaignResult r = run_campaign(c, o);
  ASSERT_EQ(r.bugs.size(), 1u);
  const BugReport& b = r.bugs[0];
  const ReplayResult again = replay(b);
  EXPECT_TRUE(again.reproduced);
  if (b.original_query) EXPECT_LE(b.query.length(), parse_query(*b.original_query).length());
}

}  // namespace
}  // namespace cypherdiff
