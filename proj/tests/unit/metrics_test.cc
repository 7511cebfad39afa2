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


#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "cypherdiff/errors.h"
#include "cypherdiff/exec/reference.h"
#include "cypherdiff/graph_gen.h"
#include "cypherdiff/metrics.h"
#include "cypherdiff/parser.h"
#include "test_util.h"

namespace cypherdiff {
namespace {

CorpusEntry entry(const char* text, std::vector<ExecOutcome> outcomes) {
  return {parse_query(text), std::move(outcomes)};
}

ExecOutcome rows(std::size_t n) {
  ResultSet rs;
  rs.columns = {"a"};
  for (std::size_t i = 0; i < n; ++i) rs.rows.push_back({Value::integer(static_cast<std::int64_t>(i))});
  return ExecOutcome::success(rs);
}

ExecOutcome rejected() { return ExecOutcome::failure(OutcomeKind::kSemanticRejection, "bad"); }

TEST(ValidityRate, AllValid) {
  std::vector<CorpusEntry> c = {entry("RETURN 1 AS a;", {rows(1)}), entry("RETURN 2 AS a;", {rows(0)})};
  EXPECT_DOUBLE_EQ(semantic_validity_rate(c), 1.0);
}

TEST(ValidityRate, SixteenOfHundred) {
  std::vector<CorpusEntry> c;
  for (int i = 0; i < 100; ++i) c.push_back(entry("RETURN 1 AS a;", {i < 16 ? rows(1) : rejected()}));
  EXPECT_DOUBLE_EQ(semantic_validity_rate(c), 0.16);
}

TEST(ValidityRate, NoneValidAndEmpty) {
  std::vector<CorpusEntry> c;
  for (int i = 0; i < 10; ++i) c.push_back(entry("RETURN 1 AS a;", {rows(1), rejected()}));
  EXPECT_DOUBLE_EQ(semantic_validity_rate(c), 0.0);
  EXPECT_THROW(semantic_validity_rate(std::vector<CorpusEntry>{}), UndefinedMetric);
}

TEST(GrammarCoverage, SingleQuery) {
  const std::vector<Query> c = {parse_query("RETURN 1 AS a;")};
  const Coverage cov = grammar_coverage(c);
  EXPECT_EQ(cov.productions, productions_covered(c[0]));
  EXPECT_EQ(cov.covered, cov.productions.size());
  EXPECT_EQ(cov.registry_size, production_count());
  EXPECT_DOUBLE_EQ(cov.fraction, double(cov.covered) / double(production_count()));
}

TEST(GrammarCoverage, CurveIsMonotone) {
  const std::vector<Query> c = {
      parse_query("RETURN 1 AS a;"), parse_query("MATCH (n) RETURN n;"),
      parse_query("RETURN 2 AS a;"),
      parse_query("MATCH (n)-[r:T]->(m) WHERE n.k > 1 WITH n RETURN n ORDER BY n.k DESC;")};
  const auto curve = coverage_curve(c);
  ASSERT_EQ(curve.size(), c.size());
  for (std::size_t i = 1; i < curve.size(); ++i) EXPECT_GE(curve[i], curve[i - 1]);
  EXPECT_DOUBLE_EQ(curve[1], curve[2]);
  EXPECT_DOUBLE_EQ(curve.back(), grammar_coverage(c).fraction);
}

TEST(NonEmptyRate, ByLength) {
  std::vector<CorpusEntry> c = {
      entry("RETURN 1 AS a;", {rows(0)}),
      entry("MATCH (n) RETURN n;", {rows(0), rows(2)}),
      entry("MATCH (n) RETURN n;", {rows(0), rows(0)}),
  };
  const NonEmptyRate r = non_empty_rate(c);
  EXPECT_NEAR(r.overall, 1.0 / 3.0, 1e-12);
  EXPECT_DOUBLE_EQ(r.by_length.at(1), 0.0);
  EXPECT_DOUBLE_EQ(r.by_length.at(2), 0.5);
  EXPECT_EQ(r.counts.at(2), 2u);
}

TEST(NonEmptyRate, AllEmpty) {
  std::vector<CorpusEntry> c = {entry("RETURN 1 AS a;", {rows(0)})};
  EXPECT_DOUBLE_EQ(non_empty_rate(c).overall, 0.0);
}

TEST(MutationScore, WorkedExample) {
  // q1 kills {m1, m2}; q2 and q3 each kill {m1, m3}.
  const std::vector<std::set<std::size_t>> kills = {{1, 2}, {1, 3}, {1, 3}};
  EXPECT_EQ(count_distinct_kill_sets(kills), 2u);
}

TEST(MutationScore, Degenerate) {
  EXPECT_EQ(count_distinct_kill_sets(std::vector<std::set<std::size_t>>{{}, {}}), 0u);
  EXPECT_EQ(count_distinct_kill_sets(std::vector<std::set<std::size_t>>{{4}}), 1u);
}

TEST(MutationScore, KillSetsOnARealGraph) {
  const PropertyGraph g = testing::small_graph();
  Rng rng(1);
  const auto mutants = generate_graph_mutants(g, 50, rng);
  ASSERT_EQ(mutants.size(), g.property_count());
  const Evaluator eval = [](const PropertyGraph& graph, const Query& q) {
    return reference_eval(graph, q);
  };
  const Query q = parse_query("MATCH (n:L0) RETURN n.k0 AS a;");
  const auto kills = kill_set(q, eval(g, q), mutants, eval);
  // Exactly the two mutants that drop k0.
  ASSERT_EQ(kills.size(), 2u);
  for (std::size_t i : kills) EXPECT_EQ(mutants[i].key, "k0");
  const std::vector<Query> qs = {q, parse_query("MATCH (n:L0) RETURN n.k0 + 1 AS a;"),
                                 parse_query("MATCH (n) RETURN n;")};
  EXPECT_EQ(graph_mutation_score(qs, g, mutants, eval), 1u);
}

TEST(ComputeMetrics, MatchesAccumulator) {
  std::vector<CorpusEntry> c = {entry("RETURN 1 AS a;", {rows(1)}),
                                entry("MATCH (n) RETURN n;", {rejected()})};
  const MetricsReport batch = compute_metrics(c);
  MetricsAccumulator acc;
  for (const auto& e : c) acc.add(e.query, e.outcomes);
  const MetricsReport streamed = acc.report();
  EXPECT_EQ(batch.queries, 2u);
  EXPECT_EQ(streamed.queries, 2u);
  EXPECT_EQ(batch.semantic_validity_rate, streamed.semantic_validity_rate);
  EXPECT_DOUBLE_EQ(*batch.semantic_validity_rate, 0.5);
  EXPECT_EQ(to_json(batch), to_json(streamed));
}

TEST(ComputeMetrics, MutationScoresAdd) {
  MetricsAccumulator acc;
  acc.add(parse_query("RETURN 1 AS a;"), std::vector<ExecOutcome>{rows(1)});
  acc.add_mutation_score(3);
  acc.add_mutation_score(4);
  EXPECT_EQ(acc.report().graph_mutation_score, 7u);
}

}  // namespace
}  // namespace cypherdiff
