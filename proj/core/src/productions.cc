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

#include "cypherdiff/productions.h"

#include <array>
#include <variant>

namespace cypherdiff {
namespace {

struct Entry {
  std::string_view name;
  std::string_view rule;
};

constexpr Entry kEntries[] = {
#define X(id, rule) {#id, rule},
#include "cypherdiff/productions.def"
#undef X
};

std::optional<Production> expression_production(const Expression& e) {
  switch (e.op) {
    case ExprOp::kLiteral:
      switch (e.literal.kind()) {
        case ValueKind::kInteger: return Production::kExprInteger;
        case ValueKind::kFloat: return Production::kExprFloat;
        case ValueKind::kText: return Production::kExprString;
        case ValueKind::kBoolean: return Production::kExprBoolean;
        case ValueKind::kList: return Production::kExprList;
        default: return std::nullopt;
      }
    case ExprOp::kVariable: return Production::kExprVariable;
    case ExprOp::kProperty: return Production::kExprProperty;
    case ExprOp::kList: return Production::kExprList;
    case ExprOp::kEq: return Production::kExprEq;
    case ExprOp::kNe: return Production::kExprNe;
    case ExprOp::kLt: return Production::kExprLt;
    case ExprOp::kLe: return Production::kExprLe;
    case ExprOp::kGt: return Production::kExprGt;
    case ExprOp::kGe: return Production::kExprGe;
    case ExprOp::kAnd: return Production::kExprAnd;
    case ExprOp::kOr: return Production::kExprOr;
    case ExprOp::kXor: return Production::kExprXor;
    case ExprOp::kNot: return Production::kExprNot;
    case ExprOp::kAdd: return Production::kExprAdd;
    case ExprOp::kSub: return Production::kExprSub;
    case ExprOp::kMul: return Production::kExprMul;
    case ExprOp::kStartsWith: return Production::kExprStartsWith;
    case ExprOp::kEndsWith: return Production::kExprEndsWith;
    case ExprOp::kContains: return Production::kExprContains;
    case ExprOp::kIsNull: return Production::kExprIsNull;
    case ExprOp::kIsNotNull: return Production::kExprIsNotNull;
    case ExprOp::kCount: return Production::kExprCount;
    case ExprOp::kMax: return Production::kExprMax;
    case ExprOp::kMin: return Production::kExprMin;
    case ExprOp::kSum: return Production::kExprSum;
    case ExprOp::kAvg: return Production::kExprAvg;
  }
  return std::nullopt;
}

void add_literal(const Value& v, ProductionSet& out) {
  Expression e;
  e.literal = v;
  if (auto p = expression_production(e)) out.insert(*p);
}

void add_tuple(const std::vector<Pattern>& patterns, ProductionSet& out) {
  out.insert(patterns.size() == 1 ? Production::kTupleSingle
                                  : Production::kTupleMulti);
  for (const Pattern& p : patterns) {
    out.insert(p.rels.empty() ? Production::kPatternNode
                              : Production::kPatternChain);
    for (const NodePattern& n : p.nodes) {
      out.insert(n.variable ? Production::kNodeVariable
                            : Production::kNodeAnonymous);
      if (!n.labels.empty()) out.insert(Production::kNodeLabel);
      if (n.labels.size() > 1) out.insert(Production::kNodeMultiLabel);
      if (!n.properties.empty()) out.insert(Production::kNodeProperties);
      for (const auto& [key, v] : n.properties) add_literal(v, out);
    }
    for (const RelPattern& r : p.rels) {
      out.insert(r.variable ? Production::kRelVariable
                            : Production::kRelAnonymous);
      switch (r.direction) {
        case Direction::kRight: out.insert(Production::kRelRight); break;
        case Direction::kLeft: out.insert(Production::kRelLeft); break;
        case Direction::kUndirected:
          out.insert(Production::kRelUndirected);
          break;
      }
      if (!r.types.empty()) out.insert(Production::kRelType);
      if (r.types.size() > 1) out.insert(Production::kRelMultiType);
      if (!r.properties.empty()) out.insert(Production::kRelProperties);
      for (const auto& [key, v] : r.properties) add_literal(v, out);
    }
  }
}

void add_items(const ReturnList& list, ProductionSet& out) {
  for (const ReturnItem& item : list.items) {
    out.insert(item.alias ? Production::kItemAliased : Production::kItemPlain);
  }
}

}  // namespace

std::size_t production_count() { return std::size(kEntries); }

std::string_view production_name(Production p) {
  return kEntries[static_cast<std::size_t>(p)].name;
}

std::string_view production_rule(Production p) {
  return kEntries[static_cast<std::size_t>(p)].rule;
}

ProductionSet productions_covered(const Query& query) {
  ProductionSet out;
  out.insert(Production::kQueryReturn);
  if (query.clauses.size() > 1) out.insert(Production::kQueryClause);
  for (const Clause& clause : query.clauses) {
    if (const auto* m = std::get_if<MatchClause>(&clause)) {
      out.insert(m->optional ? Production::kClauseOptionalMatch
                             : Production::kClauseMatch);
      if (m->where) out.insert(Production::kClauseMatchWhere);
      add_tuple(m->patterns, out);
    } else if (const auto* w = std::get_if<WithClause>(&clause)) {
      out.insert(Production::kClauseWith);
      if (w->where) out.insert(Production::kClauseWithWhere);
      add_items(w->items, out);
    } else if (std::holds_alternative<UnwindClause>(clause)) {
      out.insert(Production::kClauseUnwind);
    } else if (const auto* r = std::get_if<ReturnClause>(&clause)) {
      add_items(r->items, out);
      if (!r->order_by.empty()) out.insert(Production::kReturnOrderBy);
      for (const SortItem& s : r->order_by) {
        if (s.descending) out.insert(Production::kSortDescending);
      }
      if (r->skip) out.insert(Production::kReturnSkip);
      if (r->limit) out.insert(Production::kReturnLimit);
    }
  }
  for_each_expression(query, [&](const Expression& root) {
    visit(root, [&](const Expression& e) {
      if (auto p = expression_production(e)) out.insert(*p);
    });
  });
  return out;
}

}  // namespace cypherdiff
