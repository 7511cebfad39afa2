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


#include <algorithm>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cypherdiff/errors.h"
#include "cypherdiff/parser.h"
#include "cypherdiff/semantics.h"
#include "cypherdiff/types.h"
#include "test_util.h"

namespace cypherdiff {
namespace {

using testing::small_schema;
using testing::social_schema;

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

TEST(Context, FriendsOfFriendsMatch) {
  const Query q = parse_query(
      "MATCH (user:User)-[r1:FRIEND]-()-[r2:FRIEND]-(fof:User) RETURN fof;");
  const ClauseContext ctx = calculate_new_context(q.clauses[0], {}, social_schema());
  EXPECT_EQ(ctx.variables(), (std::vector<std::string>{"fof", "r1", "r2", "user"}));
  const auto facts = ctx.facts();
  EXPECT_TRUE(contains(facts, "label(user)==[User]"));
  EXPECT_TRUE(contains(facts, "type(r1)==[FRIEND]"));
  EXPECT_TRUE(contains(facts, "type(r2)==[FRIEND]"));
  EXPECT_TRUE(contains(facts, "label(fof)==[User]"));
}

TEST(Context, WithReplacesEnvironment) {
  const Query q = parse_query("MATCH (n:L0) WITH n.k0 AS a RETURN a;");
  const GraphSchema s = small_schema();
  const ClauseContext after_match = calculate_new_context(q.clauses[0], {}, s);
  const ClauseContext after_with = calculate_new_context(q.clauses[1], after_match, s);
  EXPECT_EQ(after_with.variables(), std::vector<std::string>{"a"});
  EXPECT_EQ(after_with.find("a")->kind, TypeKind::kInteger);
}

TEST(Context, UnboundVariableThrows) {
  const Query q = parse_query("MATCH (n) WITH m AS a RETURN a;");
  const GraphSchema s = small_schema();
  const ClauseContext after_match = calculate_new_context(q.clauses[0], {}, s);
  EXPECT_THROW(calculate_new_context(q.clauses[1], after_match, s), ScopeError);
}

TEST(Context, AccessibleKeysFollowLabels) {
  const GraphSchema s = small_schema();
  TypeInfo n = TypeInfo::of(TypeKind::kNode);
  n.labels = {"L1"};
  EXPECT_EQ(accessible_keys(n, s), std::vector<std::string>{"k3"});
  TypeInfo r = TypeInfo::of(TypeKind::kRelationship);
  r.rel_types = {"T0"};
  EXPECT_EQ(accessible_keys(r, s), std::vector<std::string>{"k4"});
}

TEST(Validate, ScopeError) {
  const auto report = validate_semantics(parse_query("MATCH (n) RETURN m;"), small_schema());
  EXPECT_TRUE(report.has(SemanticCategory::kScope));
}

TEST(Validate, OperandTypeError) {
  const auto report = validate_semantics(parse_query("RETURN 1 + 'a' AS x;"), small_schema());
  EXPECT_TRUE(report.has(SemanticCategory::kOperandType));
}

TEST(Validate, UnknownPropertyKey) {
  const auto report =
      validate_semantics(parse_query("MATCH (n:L0) RETURN n.unknownKey;"), small_schema());
  EXPECT_TRUE(report.has(SemanticCategory::kPropertyKey));
}

TEST(Validate, KeyOfAnotherLabel) {
  const auto report = validate_semantics(parse_query("MATCH (n:L1) RETURN n.k0;"), small_schema());
  EXPECT_TRUE(report.has(SemanticCategory::kPropertyKey));
}

TEST(Validate, UnknownLabel) {
  const auto report = validate_semantics(parse_query("MATCH (n:Nope) RETURN n;"), small_schema());
  EXPECT_TRUE(report.has(SemanticCategory::kSchema));
}

TEST(Validate, NestedAggregate) {
  const auto report =
      validate_semantics(parse_query("MATCH (n:L0) RETURN count(max(n.k0)) AS a;"), small_schema());
  EXPECT_TRUE(report.has(SemanticCategory::kStructure));
}

TEST(Validate, ReusedRelationshipVariable) {
  const auto report = validate_semantics(
      parse_query("MATCH (a)-[r]->(b)-[r]->(c) RETURN a;"), small_schema());
  EXPECT_TRUE(report.has(SemanticCategory::kStructure));
}

TEST(Validate, ValidQueries) {
  const char* queries[] = {
      "MATCH (n) RETURN n;",
      "RETURN 1 AS a;",
      "MATCH (n:L0)-[r:T0]->(m:L1) WHERE (n.k0 > 1) AND m.k3 RETURN n.k2 AS a, r.k4 AS b;",
      "MATCH (n:L0) WITH n, n.k1 AS x WHERE x IS NOT NULL RETURN n.k0 + x AS s ORDER BY s;",
      "UNWIND [1, 2] AS x OPTIONAL MATCH (n:L0 {k0: 1}) RETURN x, n;",
  };
  for (const char* text : queries) {
    const auto report = validate_semantics(parse_query(text), small_schema());
    EXPECT_TRUE(report.ok()) << text << ": " << report.summary();
  }
}

TEST(InferType, PropertyAccess) {
  const GraphSchema s = small_schema();
  ClauseContext ctx;
  TypeInfo n = TypeInfo::of(TypeKind::kNode);
  n.labels = {"L0"};
  ctx.local_env["n"] = n;
  const auto t = infer_type(*Expression::prop("n", "k2"), ctx, s);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->kind, TypeKind::kText);
  EXPECT_FALSE(infer_type(*Expression::var("m"), ctx, s).has_value());
}

}  // namespace
}  // namespace cypherdiff
