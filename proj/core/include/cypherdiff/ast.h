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

#ifndef CYPHERDIFF_AST_H_
#define CYPHERDIFF_AST_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cypherdiff/value.h"

namespace cypherdiff {

enum class ExprOp {
  kLiteral,
  kVariable,
  kProperty,
  kList,
  // comparisons
  kEq,
  kNe,
  kLt,
  kLe,
  kGt,
  kGe,
  // boolean connectives
  kAnd,
  kOr,
  kXor,
  kNot,
  // arithmetic
  kAdd,
  kSub,
  kMul,
  // string predicates
  kStartsWith,
  kEndsWith,
  kContains,
  // null tests
  kIsNull,
  kIsNotNull,
  // aggregates
  kCount,
  kMax,
  kMin,
  kSum,
  kAvg,
};

bool is_comparison(ExprOp op);
bool is_connective(ExprOp op);
bool is_arithmetic(ExprOp op);
bool is_string_predicate(ExprOp op);
bool is_aggregate(ExprOp op);

struct Expression;
using ExprPtr = std::shared_ptr<const Expression>;

// Immutable expression tree node. Subtrees may be shared between queries.
struct Expression {
  ExprOp op = ExprOp::kLiteral;
  Value literal;         // kLiteral
  std::string variable;  // kVariable, kProperty
  std::string key;       // kProperty
  std::vector<ExprPtr> args;

  static ExprPtr lit(Value value);
  static ExprPtr var(std::string name);
  static ExprPtr prop(std::string variable, std::string key);
  static ExprPtr list(std::vector<ExprPtr> items);
  static ExprPtr unary(ExprOp op, ExprPtr operand);
  static ExprPtr binary(ExprOp op, ExprPtr lhs, ExprPtr rhs);
};

bool expr_equal(const Expression& a, const Expression& b);
bool contains_aggregate(const Expression& expr);
int expr_depth(const Expression& expr);
// Pre-order traversal.
void visit(const Expression& expr,
           const std::function<void(const Expression&)>& fn);

enum class Direction { kRight, kLeft, kUndirected };

using PropertyMap = std::vector<std::pair<std::string, Value>>;

struct NodePattern {
  std::optional<std::string> variable;
  std::vector<std::string> labels;
  PropertyMap properties;
  bool operator==(const NodePattern&) const = default;
};

struct RelPattern {
  std::optional<std::string> variable;
  std::vector<std::string> types;
  Direction direction = Direction::kUndirected;
  PropertyMap properties;
  bool operator==(const RelPattern&) const = default;
};

// node (rel node)*; nodes.size() == rels.size() + 1.
struct Pattern {
  std::vector<NodePattern> nodes;
  std::vector<RelPattern> rels;
  bool operator==(const Pattern&) const = default;
};

struct ReturnItem {
  ExprPtr expr;
  std::optional<std::string> alias;
};

struct ReturnList {
  bool star = false;
  std::vector<ReturnItem> items;
};

struct SortItem {
  ExprPtr expr;
  bool descending = false;
};

struct MatchClause {
  bool optional = false;
  std::vector<Pattern> patterns;
  ExprPtr where;
};

struct WithClause {
  ReturnList items;
  ExprPtr where;
};

struct UnwindClause {
  ExprPtr expr;
  std::string alias;
};

struct ReturnClause {
  ReturnList items;
  std::vector<SortItem> order_by;
  std::optional<std::int64_t> skip;
  std::optional<std::int64_t> limit;
};

using Clause = std::variant<MatchClause, WithClause, UnwindClause, ReturnClause>;

struct Query {
  std::vector<Clause> clauses;

  // Number of clauses; WHERE and ORDER BY sub-clauses do not count.
  std::size_t length() const { return clauses.size(); }
  const ReturnClause& final_return() const;
};

bool query_equal(const Query& a, const Query& b);

// Output column name of a return item: the alias, else the rendered
// expression.
std::string column_name(const ReturnItem& item);

// Structural invariants of a query, independent of any schema. Empty means
// well-formed.
std::vector<std::string> check_well_formed(const Query& query);

// Calls fn on every expression root in the query (WHERE, items, ORDER BY,
// UNWIND).
void for_each_expression(const Query& query,
                         const std::function<void(const Expression&)>& fn);

}  // namespace cypherdiff

#endif  // CYPHERDIFF_AST_H_
