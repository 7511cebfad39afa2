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
#include <map>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cypherdiff/completion.h"
#include "cypherdiff/frequency.h"
#include "cypherdiff/graph_gen.h"
#include "cypherdiff/parser.h"
#include "cypherdiff/render.h"
#include "cypherdiff/rng.h"
#include "cypherdiff/semantics.h"
#include "cypherdiff/skeleton.h"
#include "test_util.h"

namespace cypherdiff {
namespace {

using testing::small_schema;

FrequencyList frequencies(const std::vector<std::string>& keys,
                          const std::vector<std::int64_t>& counts) {
  FrequencyList f;
  for (std::size_t i = 0; i < keys.size(); ++i) f.add(keys[i], counts[i]);
  return f;
}

// Independent evaluation of the selection rule, written from the formula.
std::vector<double> expected_probabilities(const std::vector<std::int64_t>& counts) {
  const double n = static_cast<double>(counts.size());
  double s = 0;
  for (auto c : counts) s += static_cast<double>(c);
  std::vector<double> out;
  for (auto c : counts) {
    out.push_back(s == 0 ? 1.0 / n : (s - static_cast<double>(c)) / ((n - 1) * s));
  }
  return out;
}

TEST(SelectionProbabilities, OneOneTwo) {
  const std::vector<std::string> keys = {"a", "b", "c"};
  const auto p = selection_probabilities(keys, frequencies(keys, {1, 1, 2}));
  const auto want = expected_probabilities({1, 1, 2});
  ASSERT_EQ(p.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(p[i], want[i], 1e-15);
  EXPECT_DOUBLE_EQ(p[0], 0.375);
  EXPECT_DOUBLE_EQ(p[1], 0.375);
  EXPECT_DOUBLE_EQ(p[2], 0.25);
}

TEST(SelectionProbabilities, EqualCountsAreUniform) {
  const std::vector<std::string> keys = {"a", "b", "c", "d"};
  for (const auto& p : {selection_probabilities(keys, frequencies(keys, {5, 5, 5, 5})),
                        selection_probabilities(keys, frequencies(keys, {0, 0, 0, 0}))}) {
    for (double x : p) EXPECT_DOUBLE_EQ(x, 0.25);
  }
}

TEST(SelectionProbabilities, SingleCandidate) {
  const std::vector<std::string> keys = {"a"};
  EXPECT_EQ(selection_probabilities(keys, frequencies(keys, {9})), std::vector<double>{1.0});
}

TEST(SelectionProbabilities, NoCandidatesThrows) {
  EXPECT_THROW(selection_probabilities({}, FrequencyList{}), std::invalid_argument);
}

TEST(SelectionProbabilities, SumToOne) {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(2, 12));
    std::vector<std::string> keys;
    std::vector<std::int64_t> counts;
    for (std::size_t i = 0; i < n; ++i) {
      keys.push_back("k" + std::to_string(i));
      counts.push_back(rng.uniform_int(0, 50));
    }
    const auto p = selection_probabilities(keys, frequencies(keys, counts));
    double sum = 0;
    for (double x : p) sum += x;
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

TEST(SelectPropertyKey, EmpiricalMatchesFormula) {
  const std::vector<std::string> keys = {"a", "b", "c"};
  const FrequencyList f = frequencies(keys, {1, 1, 2});
  Rng rng(5);
  std::map<std::string, int> hits;
  constexpr int kSamples = 100'000;
  for (int i = 0; i < kSamples; ++i) ++hits[select_property_key(keys, f, rng)];
  EXPECT_NEAR(hits["a"] / double(kSamples), 0.375, 0.01);
  EXPECT_NEAR(hits["b"] / double(kSamples), 0.375, 0.01);
  EXPECT_NEAR(hits["c"] / double(kSamples), 0.25, 0.01);
}

TEST(Frequencies, OccurrenceCounting) {
  const Query q = parse_query("MATCH (n {k0: 1}) WHERE n.k1 > 0 RETURN n.k1;");
  const auto occ = key_occurrences(q);
  EXPECT_EQ(occ.at("k0"), 1);
  EXPECT_EQ(occ.at("k1"), 2);
  const FrequencyList after = update_frequencies(FrequencyList(small_schema()), q, true);
  EXPECT_EQ(after.count("k0"), 1);
  EXPECT_EQ(after.count("k1"), 2);
  EXPECT_EQ(after.count("k2"), 0);
}

TEST(Frequencies, EmptyResultLeavesCountsAlone) {
  const FrequencyList base(small_schema());
  const Query q = parse_query("MATCH (n:L0) RETURN n.k0;");
  EXPECT_EQ(update_frequencies(base, q, false), base);
}

TEST(Frequencies, QueryWithoutKeys) {
  const FrequencyList base(small_schema());
  EXPECT_EQ(update_frequencies(base, parse_query("MATCH (n) RETURN n;")), base);
}

Skeleton skeleton(std::vector<SkeletonClause> clauses) { return Skeleton{std::move(clauses)}; }

TEST(Completer, ReturnOnlyUsesLiterals) {
  const GraphSchema s = small_schema();
  const Completer completer(s);
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    const Query q = completer.fill_skeleton(skeleton({{ClauseKind::kReturn, false}}), FrequencyList(s), rng);
    ASSERT_EQ(q.length(), 1u);
    // ORDER BY may name the aliases; the items themselves read nothing.
    for (const ReturnItem& item : q.final_return().items.items) {
      visit(*item.expr, [](const Expression& e) {
        EXPECT_NE(e.op, ExprOp::kVariable);
        EXPECT_NE(e.op, ExprOp::kProperty);
      });
    }
    EXPECT_TRUE(validate_semantics(q, s).ok()) << render(q);
  }
}

TEST(Completer, MatchWhereReturnShape) {
  const GraphSchema s = testing::social_schema();
  const Completer completer(s);
  Rng rng(2);
  const Query q = completer.fill_skeleton(
      skeleton({{ClauseKind::kMatch, true}, {ClauseKind::kReturn, false}}), FrequencyList(s), rng);
  ASSERT_EQ(q.length(), 2u);
  const auto& m = std::get<MatchClause>(q.clauses[0]);
  EXPECT_FALSE(m.optional);
  EXPECT_TRUE(m.where != nullptr);
  EXPECT_TRUE(validate_semantics(q, s).ok());
}

TEST(Completer, PropertyMapsUseLabelKeysWithMatchingKinds) {
  const GraphSchema s = small_schema();
  const Completer completer(s);
  const FrequencyList freq(s);
  Rng rng(3);
  int maps = 0;
  for (int i = 0; i < 500; ++i) {
    const Query q = completer.fill_skeleton(generate_skeleton(rng, 4, {}), freq, rng);
    for (const Clause& c : q.clauses) {
      const auto* m = std::get_if<MatchClause>(&c);
      if (!m) continue;
      for (const Pattern& p : m->patterns) {
        for (const NodePattern& n : p.nodes) {
          if (n.properties.empty()) continue;
          ++maps;
          const auto allowed = s.keys_for_labels(n.labels);
          for (const auto& [key, value] : n.properties) {
            EXPECT_NE(std::find(allowed.begin(), allowed.end(), key), allowed.end()) << render(q);
            EXPECT_EQ(value.kind(), to_value_kind(s.find_key(key)->kind)) << render(q);
          }
        }
      }
    }
  }
  EXPECT_GT(maps, 0);
}

TEST(Completer, DepthOneIsALeaf) {
  const GraphSchema s = small_schema();
  const Completer completer(s);
  ClauseContext ctx;
  TypeInfo n = TypeInfo::of(TypeKind::kNode);
  n.labels = {"L0"};
  ctx.local_env["n"] = n;
  Rng rng(4);
  for (TypeKind kind : {TypeKind::kInteger, TypeKind::kFloat, TypeKind::kText, TypeKind::kBoolean}) {
    for (int i = 0; i < 100; ++i) {
      const ExprPtr e = completer.generate_expression(TypeInfo::of(kind), ctx, FrequencyList(s), rng, 1);
      EXPECT_EQ(expr_depth(*e), 1) << render(*e);
    }
  }
}

TEST(Completer, IntegerFromNodeMayReadItsKeys) {
  const GraphSchema s = small_schema();
  const Completer completer(s);
  ClauseContext ctx;
  TypeInfo n = TypeInfo::of(TypeKind::kNode);
  n.labels = {"L0"};
  ctx.local_env["n"] = n;
  Rng rng(5);
  std::set<std::string> seen;
  for (int i = 0; i < 200; ++i) {
    const ExprPtr e =
        completer.generate_expression(TypeInfo::of(TypeKind::kInteger), ctx, FrequencyList(s), rng, 1);
    const auto t = infer_type(*e, ctx, s);
    ASSERT_TRUE(t.has_value());
    EXPECT_EQ(t->kind, TypeKind::kInteger);
    if (e->op == ExprOp::kProperty) seen.insert(render(*e));
  }
  EXPECT_EQ(seen, (std::set<std::string>{"n.k0", "n.k1"}));
}

TEST(Completer, BooleanWithoutVariables) {
  const GraphSchema s = small_schema();
  const Completer completer(s);
  Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    const ExprPtr e =
        completer.generate_expression(TypeInfo::of(TypeKind::kBoolean), {}, FrequencyList(s), rng, 3);
    visit(*e, [](const Expression& x) {
      EXPECT_NE(x.op, ExprOp::kVariable);
      EXPECT_NE(x.op, ExprOp::kProperty);
    });
  }
}

TEST(Completer, GeneratedQueriesAreValid) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const GenLimits limits = GenLimits::desk_small();
    const GraphSchema s = generate_schema(rng, limits);
    const Completer completer(s);
    const FrequencyList freq(s);
    for (int i = 0; i < 100; ++i) {
      const Query q = completer.fill_skeleton(
          generate_skeleton(rng, static_cast<int>(rng.uniform_int(1, 6)), {}), freq, rng);
      const auto report = validate_semantics(q, s);
      EXPECT_TRUE(report.ok()) << render(q) << ": " << report.summary();
      EXPECT_TRUE(check_well_formed(q).empty()) << render(q);
    }
  }
}

TEST(Completer, PatternFactorGrowsWithHops) {
  const Query one = parse_query("MATCH (a) RETURN a;");
  const Query two = parse_query("MATCH (a)--(b)--(c) RETURN a;");
  const CompletionOptions options;
  EXPECT_LT(pattern_factor(std::get<MatchClause>(one.clauses[0]).patterns[0], {}, options),
            pattern_factor(std::get<MatchClause>(two.clauses[0]).patterns[0], {}, options));
}

}  // namespace
}  // namespace cypherdiff
