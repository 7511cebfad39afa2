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


#include <string>

#include <gtest/gtest.h>

#include "cypherdiff/ast.h"
#include "cypherdiff/errors.h"
#include "cypherdiff/parser.h"
#include "cypherdiff/productions.h"
#include "cypherdiff/render.h"

namespace cypherdiff {
namespace {

constexpr const char* kFriendsOfBob =
    "MATCH (user:User)-[r1:FRIEND]-()-[r2:FRIEND]-(fof:User) "
    "WHERE user.name = 'Bob' RETURN fof.name AS fofName;";

Query friends_of_bob() {
  NodePattern user{"user", {"User"}, {}};
  NodePattern middle{std::nullopt, {}, {}};
  NodePattern fof{"fof", {"User"}, {}};
  RelPattern r1{"r1", {"FRIEND"}, Direction::kUndirected, {}};
  RelPattern r2{"r2", {"FRIEND"}, Direction::kUndirected, {}};
  MatchClause match;
  match.patterns = {Pattern{{user, middle, fof}, {r1, r2}}};
  match.where = Expression::binary(ExprOp::kEq, Expression::prop("user", "name"),
                                   Expression::lit(Value::text("Bob")));
  ReturnClause ret;
  ret.items.items = {{Expression::prop("fof", "name"), "fofName"}};
  return Query{{match, ret}};
}

TEST(Render, SmallestQuery) {
  MatchClause match;
  match.patterns = {Pattern{{NodePattern{"n", {}, {}}}, {}}};
  ReturnClause ret;
  ret.items.items = {{Expression::var("n"), std::nullopt}};
  EXPECT_EQ(render(Query{{match, ret}}), "MATCH (n) RETURN n;");
}

TEST(Render, LiteralReturn) {
  ReturnClause ret;
  ret.items.items = {{Expression::lit(Value::integer(1)), "a"}};
  EXPECT_EQ(render(Query{{ret}}), "RETURN 1 AS a;");
}

TEST(Render, FriendsOfFriends) {
  EXPECT_EQ(render(friends_of_bob()), kFriendsOfBob);
}

TEST(Render, AnonymousRelationships) {
  const Query q = parse_query("MATCH (a)-->(b)<--(c)--(d) RETURN a;");
  EXPECT_EQ(render(q), "MATCH (a)-->(b)<--(c)--(d) RETURN a;");
}

TEST(Render, NestedOperatorsRoundTrip) {
  const auto e = Expression::binary(
      ExprOp::kMul,
      Expression::binary(ExprOp::kAdd, Expression::lit(Value::integer(1)),
                         Expression::lit(Value::integer(2))),
      Expression::lit(Value::integer(-3)));
  ReturnClause ret;
  ret.items.items = {{e, "a"}};
  const Query q{{ret}};
  EXPECT_TRUE(query_equal(parse_query(render(q)), q));
}

TEST(Render, FloatLiteralsKeepADecimalPoint) {
  EXPECT_EQ(Value::floating(2.0).to_cypher(), "2.0");
  EXPECT_EQ(Value::floating(-0.25).to_cypher(), "-0.25");
  EXPECT_EQ(Value::text("it's").to_cypher(), "'it\\'s'");
}

TEST(Parse, SmallestQuery) {
  const Query q = parse_query("MATCH (n) RETURN n;");
  EXPECT_EQ(q.length(), 2u);
  EXPECT_TRUE(std::holds_alternative<MatchClause>(q.clauses[0]));
  EXPECT_TRUE(check_well_formed(q).empty());
}

TEST(Parse, FriendsOfFriends) {
  EXPECT_TRUE(query_equal(parse_query(kFriendsOfBob), friends_of_bob()));
}

TEST(Parse, MalformedReturn) {
  try {
    parse_query("RETURN ;");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_FALSE(e.unsupported());
  }
}

TEST(Parse, UnionIsUnsupported) {
  try {
    parse_query("MATCH (n) UNION MATCH (m) RETURN m;");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_TRUE(e.unsupported());
  }
}

TEST(Parse, RoundTripsCanonicalText) {
  const char* queries[] = {
      "MATCH (n:L0 {k0: 1}), (m) WHERE (n.k0 > 0) AND (m.k1 <> 'x') RETURN n.k0 AS a, m;",
      "OPTIONAL MATCH (n)-[r:T0|T1]->(m) WITH n, count(r) AS c WHERE c >= 1 RETURN n ORDER BY c DESC SKIP 1 LIMIT 2;",
      "UNWIND [1, 2, 3] AS x RETURN x, x * 2 AS y;",
      "MATCH (n) WHERE n.k2 STARTS WITH 'a' RETURN n.k2 IS NULL AS a, NOT n.k3 AS b;",
  };
  for (const char* text : queries) {
    EXPECT_EQ(render(parse_query(text)), text);
  }
}

TEST(Productions, LiteralReturn) {
  const ProductionSet got = productions_covered(parse_query("RETURN 1 AS a;"));
  const ProductionSet want = {Production::kQueryReturn, Production::kItemAliased,
                              Production::kExprInteger};
  EXPECT_EQ(got, want);
}

TEST(Productions, FriendsOfFriends) {
  const ProductionSet got = productions_covered(friends_of_bob());
  EXPECT_TRUE(got.contains(Production::kClauseMatchWhere));
  EXPECT_TRUE(got.contains(Production::kPatternChain));
  EXPECT_TRUE(got.contains(Production::kNodeAnonymous));
  EXPECT_TRUE(got.contains(Production::kRelType));
  EXPECT_TRUE(got.contains(Production::kRelUndirected));
  EXPECT_TRUE(got.contains(Production::kExprEq));
  EXPECT_FALSE(got.contains(Production::kClauseOptionalMatch));
}

TEST(Productions, RegistryNamesAreDistinct) {
  std::set<std::string_view> names;
  for (std::size_t i = 0; i < production_count(); ++i) {
    names.insert(production_name(static_cast<Production>(i)));
  }
  EXPECT_EQ(names.size(), production_count());
}

}  // namespace
}  // namespace cypherdiff
