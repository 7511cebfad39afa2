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

#include "cypherdiff/render.h"

namespace cypherdiff {

const char* operator_text(ExprOp op) {
  switch (op) {
    case ExprOp::kEq: return "=";
    case ExprOp::kNe: return "<>";
    case ExprOp::kLt: return "<";
    case ExprOp::kLe: return "<=";
    case ExprOp::kGt: return ">";
    case ExprOp::kGe: return ">=";
    case ExprOp::kAnd: return "AND";
    case ExprOp::kOr: return "OR";
    case ExprOp::kXor: return "XOR";
    case ExprOp::kNot: return "NOT";
    case ExprOp::kAdd: return "+";
    case ExprOp::kSub: return "-";
    case ExprOp::kMul: return "*";
    case ExprOp::kStartsWith: return "STARTS WITH";
    case ExprOp::kEndsWith: return "ENDS WITH";
    case ExprOp::kContains: return "CONTAINS";
    case ExprOp::kIsNull: return "IS NULL";
    case ExprOp::kIsNotNull: return "IS NOT NULL";
    case ExprOp::kCount: return "count";
    case ExprOp::kMax: return "max";
    case ExprOp::kMin: return "min";
    case ExprOp::kSum: return "sum";
    case ExprOp::kAvg: return "avg";
    default: return "";
  }
}

namespace {

bool is_atomic(const Expression& expr) {
  switch (expr.op) {
    case ExprOp::kLiteral:
    case ExprOp::kVariable:
    case ExprOp::kProperty:
    case ExprOp::kList:
      return true;
    default:
      return is_aggregate(expr.op);
  }
}

std::string operand(const Expression& expr) {
  if (is_atomic(expr)) return render(expr);
  return "(" + render(expr) + ")";
}

std::string render_items(const ReturnList& list) {
  if (list.star) return "*";
  std::string out;
  for (std::size_t i = 0; i < list.items.size(); ++i) {
    if (i) out += ", ";
    out += render(*list.items[i].expr);
    if (list.items[i].alias) out += " AS " + *list.items[i].alias;
  }
  return out;
}

std::string render_rel(const RelPattern& rel) {
  std::string detail = rel.variable.value_or("");
  for (std::size_t i = 0; i < rel.types.size(); ++i) {
    detail += (i == 0 ? ":" : "|") + rel.types[i];
  }
  if (!rel.properties.empty()) {
    if (!detail.empty()) detail += " ";
    detail += render_property_map(rel.properties);
  }
  const std::string body = detail.empty() ? "--" : "-[" + detail + "]-";
  switch (rel.direction) {
    case Direction::kRight: return body + ">";
    case Direction::kLeft: return "<" + body;
    case Direction::kUndirected: return body;
  }
  return body;
}

}  // namespace

std::string render_property_map(const PropertyMap& properties) {
  std::string out = "{";
  for (std::size_t i = 0; i < properties.size(); ++i) {
    if (i) out += ", ";
    out += properties[i].first + ": " + properties[i].second.to_cypher();
  }
  return out + "}";
}

std::string render(const NodePattern& node) {
  std::string out = "(" + node.variable.value_or("");
  for (const auto& label : node.labels) out += ":" + label;
  if (!node.properties.empty()) {
    if (out.size() > 1) out += " ";
    out += render_property_map(node.properties);
  }
  return out + ")";
}

std::string render(const Pattern& pattern) {
  std::string out = render(pattern.nodes.front());
  for (std::size_t i = 0; i < pattern.rels.size(); ++i) {
    out += render_rel(pattern.rels[i]);
    out += render(pattern.nodes[i + 1]);
  }
  return out;
}

std::string render(const Expression& expr) {
  switch (expr.op) {
    case ExprOp::kLiteral:
      return expr.literal.to_cypher();
    case ExprOp::kVariable:
      return expr.variable;
    case ExprOp::kProperty:
      return expr.variable + "." + expr.key;
    case ExprOp::kList: {
      std::string out = "[";
      for (std::size_t i = 0; i < expr.args.size(); ++i) {
        if (i) out += ", ";
        out += render(*expr.args[i]);
      }
      return out + "]";
    }
    case ExprOp::kNot:
      return "NOT " + operand(*expr.args[0]);
    case ExprOp::kIsNull:
    case ExprOp::kIsNotNull:
      return operand(*expr.args[0]) + " " + operator_text(expr.op);
    default:
      break;
  }
  if (is_aggregate(expr.op)) {
    return std::string(operator_text(expr.op)) + "(" + render(*expr.args[0]) + ")";
  }
  return operand(*expr.args[0]) + " " + operator_text(expr.op) + " " +
         operand(*expr.args[1]);
}

std::string render(const Clause& clause) {
  if (const auto* match = std::get_if<MatchClause>(&clause)) {
    std::string out = match->optional ? "OPTIONAL MATCH " : "MATCH ";
    for (std::size_t i = 0; i < match->patterns.size(); ++i) {
      if (i) out += ", ";
      out += render(match->patterns[i]);
    }
    if (match->where) out += " WHERE " + render(*match->where);
    return out;
  }
  if (const auto* with = std::get_if<WithClause>(&clause)) {
    std::string out = "WITH " + render_items(with->items);
    if (with->where) out += " WHERE " + render(*with->where);
    return out;
  }
  if (const auto* unwind = std::get_if<UnwindClause>(&clause)) {
    return "UNWIND " + render(*unwind->expr) + " AS " + unwind->alias;
  }
  const auto& ret = std::get<ReturnClause>(clause);
  std::string out = "RETURN " + render_items(ret.items);
  if (!ret.order_by.empty()) {
    out += " ORDER BY ";
    for (std::size_t i = 0; i < ret.order_by.size(); ++i) {
      if (i) out += ", ";
      out += render(*ret.order_by[i].expr);
      if (ret.order_by[i].descending) out += " DESC";
    }
  }
  if (ret.skip) out += " SKIP " + std::to_string(*ret.skip);
  if (ret.limit) out += " LIMIT " + std::to_string(*ret.limit);
  return out;
}

std::string render(const Query& query) {
  std::string out;
  for (std::size_t i = 0; i < query.clauses.size(); ++i) {
    if (i) out += " ";
    out += render(query.clauses[i]);
  }
  return out + ";";
}

}  // namespace cypherdiff
