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

#include "cypherdiff/ast.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cypherdiff/render.h"

namespace cypherdiff {

bool is_comparison(ExprOp op) {
  return op == ExprOp::kEq || op == ExprOp::kNe || op == ExprOp::kLt ||
         op == ExprOp::kLe || op == ExprOp::kGt || op == ExprOp::kGe;
}

bool is_connective(ExprOp op) {
  return op == ExprOp::kAnd || op == ExprOp::kOr || op == ExprOp::kXor ||
         op == ExprOp::kNot;
}

bool is_arithmetic(ExprOp op) {
  return op == ExprOp::kAdd || op == ExprOp::kSub || op == ExprOp::kMul;
}

bool is_string_predicate(ExprOp op) {
  return op == ExprOp::kStartsWith || op == ExprOp::kEndsWith ||
         op == ExprOp::kContains;
}

bool is_aggregate(ExprOp op) {
  return op == ExprOp::kCount || op == ExprOp::kMax || op == ExprOp::kMin ||
         op == ExprOp::kSum || op == ExprOp::kAvg;
}

ExprPtr Expression::lit(Value value) {
  auto e = std::make_shared<Expression>();
  e->op = ExprOp::kLiteral;
  e->literal = std::move(value);
  return e;
}

ExprPtr Expression::var(std::string name) {
  auto e = std::make_shared<Expression>();
  e->op = ExprOp::kVariable;
  e->variable = std::move(name);
  return e;
}

ExprPtr Expression::prop(std::string variable, std::string key) {
  auto e = std::make_shared<Expression>();
  e->op = ExprOp::kProperty;
  e->variable = std::move(variable);
  e->key = std::move(key);
  return e;
}

ExprPtr Expression::list(std::vector<ExprPtr> items) {
  auto e = std::make_shared<Expression>();
  e->op = ExprOp::kList;
  e->args = std::move(items);
  return e;
}

ExprPtr Expression::unary(ExprOp op, ExprPtr operand) {
  auto e = std::make_shared<Expression>();
  e->op = op;
  e->args.push_back(std::move(operand));
  return e;
}

ExprPtr Expression::binary(ExprOp op, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expression>();
  e->op = op;
  e->args.push_back(std::move(lhs));
  e->args.push_back(std::move(rhs));
  return e;
}

bool expr_equal(const Expression& a, const Expression& b) {
  if (a.op != b.op || !(a.literal == b.literal) || a.variable != b.variable ||
      a.key != b.key || a.args.size() != b.args.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!expr_equal(*a.args[i], *b.args[i])) return false;
  }
  return true;
}

bool contains_aggregate(const Expression& expr) {
  if (is_aggregate(expr.op)) return true;
  return std::any_of(expr.args.begin(), expr.args.end(),
                     [](const ExprPtr& arg) { return contains_aggregate(*arg); });
}

int expr_depth(const Expression& expr) {
  int deepest = 0;
  for (const auto& arg : expr.args) deepest = std::max(deepest, expr_depth(*arg));
  return deepest + 1;
}

void visit(const Expression& expr,
           const std::function<void(const Expression&)>& fn) {
  fn(expr);
  for (const auto& arg : expr.args) visit(*arg, fn);
}

const ReturnClause& Query::final_return() const {
  if (clauses.empty() || !std::holds_alternative<ReturnClause>(clauses.back())) {
    throw std::logic_error("query does not end in RETURN");
  }
  return std::get<ReturnClause>(clauses.back());
}

namespace {

bool opt_expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return expr_equal(*a, *b);
}

bool return_list_equal(const ReturnList& a, const ReturnList& b) {
  if (a.star != b.star || a.items.size() != b.items.size()) return false;
  for (std::size_t i = 0; i < a.items.size(); ++i) {
    if (a.items[i].alias != b.items[i].alias ||
        !expr_equal(*a.items[i].expr, *b.items[i].expr)) {
      return false;
    }
  }
  return true;
}

struct ClauseEqual {
  bool operator()(const MatchClause& a, const MatchClause& b) const {
    return a.optional == b.optional && a.patterns == b.patterns &&
           opt_expr_equal(a.where, b.where);
  }
  bool operator()(const WithClause& a, const WithClause& b) const {
    return return_list_equal(a.items, b.items) && opt_expr_equal(a.where, b.where);
  }
  bool operator()(const UnwindClause& a, const UnwindClause& b) const {
    return a.alias == b.alias && expr_equal(*a.expr, *b.expr);
  }
  bool operator()(const ReturnClause& a, const ReturnClause& b) const {
    if (!return_list_equal(a.items, b.items) || a.skip != b.skip ||
        a.limit != b.limit || a.order_by.size() != b.order_by.size()) {
      return false;
    }
    for (std::size_t i = 0; i < a.order_by.size(); ++i) {
      if (a.order_by[i].descending != b.order_by[i].descending ||
          !expr_equal(*a.order_by[i].expr, *b.order_by[i].expr)) {
        return false;
      }
    }
    return true;
  }
  template <typename A, typename B>
  bool operator()(const A&, const B&) const {
    return false;
  }
};

}  // namespace

bool query_equal(const Query& a, const Query& b) {
  if (a.clauses.size() != b.clauses.size()) return false;
  for (std::size_t i = 0; i < a.clauses.size(); ++i) {
    if (!std::visit(ClauseEqual{}, a.clauses[i], b.clauses[i])) return false;
  }
  return true;
}

std::string column_name(const ReturnItem& item) {
  if (item.alias) return *item.alias;
  return render(*item.expr);
}

namespace {

void check_return_list(const ReturnList& list, bool require_alias,
                       const std::string& where,
                       std::vector<std::string>& problems) {
  if (list.star) {
    if (!list.items.empty()) problems.push_back(where + ": '*' mixed with items");
    return;
  }
  if (list.items.empty()) problems.push_back(where + ": empty item list");
  std::set<std::string> names;
  for (const auto& item : list.items) {
    if (!item.expr) {
      problems.push_back(where + ": item without expression");
      continue;
    }
    if (require_alias && !item.alias && item.expr->op != ExprOp::kVariable) {
      problems.push_back(where + ": item without alias");
    }
    if (!names.insert(column_name(item)).second) {
      problems.push_back(where + ": duplicate column " + column_name(item));
    }
  }
}

void check_pattern(const Pattern& pattern, std::vector<std::string>& problems) {
  if (pattern.nodes.size() != pattern.rels.size() + 1) {
    problems.push_back("pattern chain is not node (rel node)*");
  }
}

}  // namespace

std::vector<std::string> check_well_formed(const Query& query) {
  std::vector<std::string> problems;
  if (query.clauses.empty()) {
    problems.push_back("query has no clauses");
    return problems;
  }
  for (std::size_t i = 0; i < query.clauses.size(); ++i) {
    const Clause& clause = query.clauses[i];
    const bool last = i + 1 == query.clauses.size();
    if (std::holds_alternative<ReturnClause>(clause) != last) {
      problems.push_back(last ? "final clause is not RETURN"
                              : "RETURN before the end of the query");
    }
    if (const auto* match = std::get_if<MatchClause>(&clause)) {
      if (match->patterns.empty()) problems.push_back("MATCH without patterns");
      for (const auto& pattern : match->patterns) check_pattern(pattern, problems);
    } else if (const auto* with = std::get_if<WithClause>(&clause)) {
      check_return_list(with->items, !with->items.star, "WITH", problems);
    } else if (const auto* unwind = std::get_if<UnwindClause>(&clause)) {
      if (!unwind->expr) problems.push_back("UNWIND without expression");
      if (unwind->alias.empty()) problems.push_back("UNWIND without alias");
    } else if (const auto* ret = std::get_if<ReturnClause>(&clause)) {
      check_return_list(ret->items, false, "RETURN", problems);
      if ((ret->skip || ret->limit) && ret->order_by.empty()) {
        problems.push_back("SKIP/LIMIT without ORDER BY");
      }
      if ((ret->skip && *ret->skip < 0) || (ret->limit && *ret->limit < 0)) {
        problems.push_back("negative SKIP/LIMIT");
      }
    }
  }
  return problems;
}

void for_each_expression(const Query& query,
                         const std::function<void(const Expression&)>& fn) {
  auto items = [&](const ReturnList& list) {
    for (const auto& item : list.items) fn(*item.expr);
  };
  for (const auto& clause : query.clauses) {
    if (const auto* match = std::get_if<MatchClause>(&clause)) {
      if (match->where) fn(*match->where);
    } else if (const auto* with = std::get_if<WithClause>(&clause)) {
      items(with->items);
      if (with->where) fn(*with->where);
    } else if (const auto* unwind = std::get_if<UnwindClause>(&clause)) {
      fn(*unwind->expr);
    } else if (const auto* ret = std::get_if<ReturnClause>(&clause)) {
      items(ret->items);
      for (const auto& sort : ret->order_by) fn(*sort.expr);
    }
  }
}

}  // namespace cypherdiff
