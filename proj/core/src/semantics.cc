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

#include "cypherdiff/semantics.h"

#include <algorithm>
#include <set>
#include <variant>

#include "cypherdiff/errors.h"
#include "cypherdiff/render.h"

namespace cypherdiff {
namespace {

bool compatible(TypeKind a, TypeKind b) {
  if (a == TypeKind::kAny || b == TypeKind::kAny || a == b) return true;
  auto numeric = [](TypeKind k) {
    return k == TypeKind::kInteger || k == TypeKind::kFloat;
  };
  return numeric(a) && numeric(b);
}

bool is_numeric_or_any(const TypeInfo& t) {
  return t.is_numeric() || t.kind == TypeKind::kAny;
}

class Analyzer {
 public:
  Analyzer(const GraphSchema& schema, bool check_schema,
           std::vector<SemanticError>& errors)
      : schema_(schema), check_schema_(check_schema), errors_(errors) {}

  void set_clause(std::size_t index) { clause_ = index; }

  std::optional<TypeInfo> infer(const Expression& e, const ClauseContext& ctx,
                                bool allow_aggregate) {
    return infer_rec(e, ctx, allow_aggregate, false);
  }

  ClauseContext apply(const Clause& clause, const ClauseContext& ctx) {
    return std::visit([&](const auto& c) { return apply_clause(c, ctx); },
                      clause);
  }

 private:
  void error(SemanticCategory category, std::string message) {
    errors_.push_back({category, clause_, std::move(message)});
  }

  std::optional<TypeInfo> infer_rec(const Expression& e,
                                    const ClauseContext& ctx,
                                    bool allow_aggregate, bool in_aggregate) {
    auto sub = [&](std::size_t i) {
      return infer_rec(*e.args[i], ctx, allow_aggregate, in_aggregate);
    };
    auto type_error = [&](const std::string& what) {
      error(SemanticCategory::kOperandType,
            what + " in '" + render(e) + "'");
      return std::optional<TypeInfo>();
    };

    switch (e.op) {
      case ExprOp::kLiteral: {
        if (e.literal.kind() == ValueKind::kList) {
          TypeKind element = TypeKind::kAny;
          for (const Value& v : e.literal.as_list()) {
            element = type_kind_of(v.kind());
          }
          return TypeInfo::list_of(element);
        }
        return TypeInfo::of(type_kind_of(e.literal.kind()));
      }
      case ExprOp::kVariable: {
        const TypeInfo* t = ctx.find(e.variable);
        if (!t) {
          error(SemanticCategory::kScope,
                "variable " + e.variable + " is not defined");
          return std::nullopt;
        }
        return *t;
      }
      case ExprOp::kProperty: {
        const TypeInfo* t = ctx.find(e.variable);
        if (!t) {
          error(SemanticCategory::kScope,
                "variable " + e.variable + " is not defined");
          return std::nullopt;
        }
        if (t->kind == TypeKind::kAny) return TypeInfo::of(TypeKind::kAny);
        if (!t->is_entity()) {
          return type_error("property access on " +
                            std::string(to_string(t->kind)) + " " + e.variable);
        }
        if (!check_schema_) return TypeInfo::of(TypeKind::kAny);
        const auto keys = accessible_keys(*t, schema_);
        const PropertyKeyDef* def = schema_.find_key(e.key);
        if (!def || std::find(keys.begin(), keys.end(), e.key) == keys.end()) {
          error(SemanticCategory::kPropertyKey,
                "key " + e.key + " is not valid for " + e.variable);
          return std::nullopt;
        }
        return TypeInfo::of(type_kind_of(def->kind));
      }
      case ExprOp::kList: {
        std::optional<TypeKind> element;
        for (std::size_t i = 0; i < e.args.size(); ++i) {
          auto t = sub(i);
          if (!t) return std::nullopt;
          if (!t->is_scalar() && t->kind != TypeKind::kAny) {
            return type_error("list element of kind " +
                              std::string(to_string(t->kind)));
          }
          if (t->kind == TypeKind::kAny) continue;
          if (element && *element != t->kind) {
            return type_error("mixed list element kinds");
          }
          element = t->kind;
        }
        return TypeInfo::list_of(element.value_or(TypeKind::kAny));
      }
      default: break;
    }

    if (is_aggregate(e.op)) {
      if (!allow_aggregate) {
        error(SemanticCategory::kStructure,
              "aggregate outside a WITH/RETURN item: '" + render(e) + "'");
        return std::nullopt;
      }
      if (in_aggregate) {
        error(SemanticCategory::kStructure,
              "nested aggregate: '" + render(e) + "'");
        return std::nullopt;
      }
      auto arg = infer_rec(*e.args[0], ctx, allow_aggregate, true);
      if (!arg) return std::nullopt;
      TypeInfo out;
      switch (e.op) {
        case ExprOp::kCount:
          return TypeInfo::of(TypeKind::kInteger);
        case ExprOp::kMax:
        case ExprOp::kMin:
          if (!is_numeric_or_any(*arg) && arg->kind != TypeKind::kText) {
            return type_error("max/min over " + std::string(to_string(arg->kind)));
          }
          out = TypeInfo::of(arg->kind);
          break;
        case ExprOp::kSum:
          if (!is_numeric_or_any(*arg)) {
            return type_error("sum over " + std::string(to_string(arg->kind)));
          }
          out = TypeInfo::of(arg->kind);
          break;
        default:  // avg
          if (!is_numeric_or_any(*arg)) {
            return type_error("avg over " + std::string(to_string(arg->kind)));
          }
          out = TypeInfo::of(TypeKind::kFloat);
          break;
      }
      out.float_aggregate =
          out.kind == TypeKind::kFloat || arg->kind == TypeKind::kFloat;
      return out;
    }

    if (e.op == ExprOp::kIsNull || e.op == ExprOp::kIsNotNull) {
      if (!sub(0)) return std::nullopt;
      return TypeInfo::of(TypeKind::kBoolean);
    }
    if (e.op == ExprOp::kNot) {
      auto t = sub(0);
      if (!t) return std::nullopt;
      if (!compatible(t->kind, TypeKind::kBoolean)) {
        return type_error("NOT over " + std::string(to_string(t->kind)));
      }
      return TypeInfo::of(TypeKind::kBoolean);
    }

    auto lhs = sub(0);
    auto rhs = sub(1);
    if (!lhs || !rhs) return std::nullopt;
    const std::string kinds = std::string(to_string(lhs->kind)) + " and " +
                              to_string(rhs->kind);
    if (is_connective(e.op)) {
      if (!compatible(lhs->kind, TypeKind::kBoolean) ||
          !compatible(rhs->kind, TypeKind::kBoolean)) {
        return type_error("boolean connective over " + kinds);
      }
      return TypeInfo::of(TypeKind::kBoolean);
    }
    if (is_arithmetic(e.op)) {
      if (!is_numeric_or_any(*lhs) || !is_numeric_or_any(*rhs)) {
        return type_error("arithmetic over " + kinds);
      }
      TypeInfo out = TypeInfo::of(
          lhs->kind == TypeKind::kInteger && rhs->kind == TypeKind::kInteger
              ? TypeKind::kInteger
              : lhs->kind == TypeKind::kAny || rhs->kind == TypeKind::kAny
                    ? TypeKind::kAny
                    : TypeKind::kFloat);
      out.float_aggregate = lhs->float_aggregate || rhs->float_aggregate;
      return out;
    }
    if (is_string_predicate(e.op)) {
      if (!compatible(lhs->kind, TypeKind::kText) ||
          !compatible(rhs->kind, TypeKind::kText)) {
        return type_error("string predicate over " + kinds);
      }
      return TypeInfo::of(TypeKind::kBoolean);
    }
    // comparisons
    const bool scalar_operands =
        (lhs->is_scalar() || lhs->kind == TypeKind::kAny) &&
        (rhs->is_scalar() || rhs->kind == TypeKind::kAny);
    if (!scalar_operands || !compatible(lhs->kind, rhs->kind)) {
      return type_error("comparison over " + kinds);
    }
    if (e.op != ExprOp::kEq && e.op != ExprOp::kNe &&
        (lhs->kind == TypeKind::kBoolean || rhs->kind == TypeKind::kBoolean)) {
      return type_error("ordering comparison over " + kinds);
    }
    return TypeInfo::of(TypeKind::kBoolean);
  }

  void check_where(const ExprPtr& where, const ClauseContext& ctx) {
    if (!where) return;
    auto t = infer(*where, ctx, false);
    if (t && !compatible(t->kind, TypeKind::kBoolean)) {
      error(SemanticCategory::kOperandType,
            "WHERE condition of kind " + std::string(to_string(t->kind)));
    }
  }

  void check_label(const std::string& label) {
    if (check_schema_ && !schema_.find_label(label)) {
      error(SemanticCategory::kSchema, "unknown label " + label);
    }
  }

  void check_map(const PropertyMap& map, const TypeInfo& owner,
                 const std::string& what) {
    if (!check_schema_) return;
    const auto keys = accessible_keys(owner, schema_);
    for (const auto& [key, value] : map) {
      const PropertyKeyDef* def = schema_.find_key(key);
      if (!def || std::find(keys.begin(), keys.end(), key) == keys.end()) {
        error(SemanticCategory::kPropertyKey,
              "key " + key + " is not valid for " + what);
        continue;
      }
      if (!compatible(type_kind_of(value.kind()), type_kind_of(def->kind))) {
        error(SemanticCategory::kOperandType,
              "value " + value.to_cypher() + " does not fit key " + key);
      }
    }
  }

  ClauseContext apply_clause(const MatchClause& m, const ClauseContext& ctx) {
    ClauseContext out = ctx;
    std::set<std::string> clause_rels;
    for (const Pattern& p : m.patterns) {
      for (const NodePattern& n : p.nodes) {
        for (const auto& l : n.labels) check_label(l);
        TypeInfo node = TypeInfo::of(TypeKind::kNode);
        TypeInfo* bound = nullptr;
        if (n.variable) {
          auto it = out.local_env.find(*n.variable);
          if (it != out.local_env.end()) {
            if (it->second.kind != TypeKind::kNode) {
              error(SemanticCategory::kOperandType,
                    *n.variable + " is a " + to_string(it->second.kind) +
                        ", not a node");
              continue;
            }
            bound = &it->second;
          } else {
            bound = &out.local_env.emplace(*n.variable, node).first->second;
          }
        } else {
          bound = &node;
        }
        for (const auto& l : n.labels) {
          if (std::find(bound->labels.begin(), bound->labels.end(), l) ==
              bound->labels.end()) {
            bound->labels.push_back(l);
          }
        }
        check_map(n.properties, *bound,
                  n.variable ? *n.variable : std::string("node pattern"));
      }
      for (const RelPattern& r : p.rels) {
        for (const auto& t : r.types) {
          if (check_schema_ && !schema_.find_rel_type(t)) {
            error(SemanticCategory::kSchema, "unknown relationship type " + t);
          }
        }
        TypeInfo rel = TypeInfo::of(TypeKind::kRelationship);
        rel.rel_types = r.types;
        TypeInfo* bound = &rel;
        if (r.variable) {
          if (!clause_rels.insert(*r.variable).second) {
            error(SemanticCategory::kStructure,
                  "relationship variable " + *r.variable + " used twice");
          }
          auto it = out.local_env.find(*r.variable);
          if (it != out.local_env.end()) {
            if (it->second.kind != TypeKind::kRelationship) {
              error(SemanticCategory::kOperandType,
                    *r.variable + " is a " + to_string(it->second.kind) +
                        ", not a relationship");
              continue;
            }
            bound = &it->second;
            if (bound->rel_types.empty()) {
              bound->rel_types = r.types;
            } else if (!r.types.empty()) {
              std::vector<std::string> common;
              for (const auto& t : bound->rel_types) {
                if (std::find(r.types.begin(), r.types.end(), t) != r.types.end()) {
                  common.push_back(t);
                }
              }
              bound->rel_types = common;
            }
          } else {
            bound = &out.local_env.emplace(*r.variable, rel).first->second;
          }
        }
        check_map(r.properties, *bound,
                  r.variable ? *r.variable : std::string("relationship pattern"));
      }
    }
    check_where(m.where, out);
    return out;
  }

  // Environment produced by a projection; also validates its items.
  ClauseContext project(const ReturnList& list, const ClauseContext& ctx,
                        bool is_with) {
    if (list.star) return ctx;
    ClauseContext out;
    for (const ReturnItem& item : list.items) {
      auto t = infer(*item.expr, ctx, true);
      if (contains_aggregate(*item.expr)) check_grouping(*item.expr);
      std::optional<std::string> name = item.alias;
      if (!name && item.expr->op == ExprOp::kVariable) name = item.expr->variable;
      if (!name) {
        if (is_with) {
          error(SemanticCategory::kStructure,
                "WITH item '" + render(*item.expr) + "' needs an alias");
        }
        continue;
      }
      out.local_env[*name] = t.value_or(TypeInfo::of(TypeKind::kAny));
    }
    return out;
  }

  void check_grouping(const Expression& e) {
    if (is_aggregate(e.op)) return;
    if (e.op == ExprOp::kVariable || e.op == ExprOp::kProperty) {
      error(SemanticCategory::kStructure,
            "'" + render(e) + "' mixed with an aggregate in one item");
      return;
    }
    for (const auto& a : e.args) check_grouping(*a);
  }

  ClauseContext apply_clause(const WithClause& w, const ClauseContext& ctx) {
    ClauseContext out = project(w.items, ctx, true);
    check_where(w.where, out);
    return out;
  }

  ClauseContext apply_clause(const UnwindClause& u, const ClauseContext& ctx) {
    ClauseContext out = ctx;
    auto t = infer(*u.expr, ctx, false);
    TypeKind element = TypeKind::kAny;
    if (t) {
      if (t->kind == TypeKind::kList) {
        element = t->element;
      } else if (t->kind != TypeKind::kAny) {
        error(SemanticCategory::kOperandType,
              "UNWIND over " + std::string(to_string(t->kind)));
      }
    }
    if (ctx.has(u.alias)) {
      error(SemanticCategory::kScope, "variable " + u.alias + " already defined");
    }
    out.local_env[u.alias] = TypeInfo::of(element);
    return out;
  }

  ClauseContext apply_clause(const ReturnClause& r, const ClauseContext& ctx) {
    ClauseContext out = project(r.items, ctx, false);
    if (!r.order_by.empty()) {
      bool aggregating = false;
      for (const auto& item : r.items.items) {
        aggregating = aggregating || contains_aggregate(*item.expr);
      }
      ClauseContext sort_ctx = out;
      if (!aggregating) {
        for (const auto& [name, type] : ctx.local_env) {
          sort_ctx.local_env.emplace(name, type);
        }
      }
      for (const SortItem& s : r.order_by) {
        auto t = infer(*s.expr, sort_ctx, false);
        if (t && !t->is_scalar() && t->kind != TypeKind::kAny) {
          error(SemanticCategory::kOperandType,
                "ORDER BY over " + std::string(to_string(t->kind)));
        }
      }
    }
    return out;
  }

  const GraphSchema& schema_;
  bool check_schema_;
  std::vector<SemanticError>& errors_;
  std::size_t clause_ = 0;
};

}  // namespace

const char* to_string(SemanticCategory category) {
  switch (category) {
    case SemanticCategory::kScope: return "scope";
    case SemanticCategory::kOperandType: return "operand-type";
    case SemanticCategory::kPropertyKey: return "property-key";
    case SemanticCategory::kSchema: return "schema";
    case SemanticCategory::kStructure: return "structure";
  }
  return "?";
}

bool SemanticReport::has(SemanticCategory category) const {
  return std::any_of(errors.begin(), errors.end(), [&](const SemanticError& e) {
    return e.category == category;
  });
}

std::string SemanticReport::summary() const {
  std::string out;
  for (const auto& e : errors) {
    if (!out.empty()) out += "; ";
    out += std::string(to_string(e.category)) + " error in clause " +
           std::to_string(e.clause) + ": " + e.message;
  }
  return out;
}

SemanticReport validate_semantics(const Query& query, const GraphSchema& schema,
                                  SemanticOptions options) {
  SemanticReport report;
  for (const std::string& problem : check_well_formed(query)) {
    report.errors.push_back({SemanticCategory::kStructure, 0, problem});
  }
  if (!report.ok()) return report;
  Analyzer analyzer(schema, options.check_schema, report.errors);
  ClauseContext ctx;
  for (std::size_t i = 0; i < query.clauses.size(); ++i) {
    analyzer.set_clause(i);
    ctx = analyzer.apply(query.clauses[i], ctx);
  }
  return report;
}

std::optional<TypeInfo> infer_type(const Expression& expr,
                                   const ClauseContext& ctx,
                                   const GraphSchema& schema) {
  std::vector<SemanticError> errors;
  Analyzer analyzer(schema, true, errors);
  auto t = analyzer.infer(expr, ctx, true);
  if (!errors.empty()) return std::nullopt;
  return t;
}

ClauseContext calculate_new_context(const Clause& clause,
                                    const ClauseContext& ctx,
                                    const GraphSchema& schema) {
  std::vector<SemanticError> errors;
  Analyzer analyzer(schema, true, errors);
  ClauseContext out = analyzer.apply(clause, ctx);
  for (const auto& e : errors) {
    if (e.category == SemanticCategory::kScope) throw ScopeError(e.message);
  }
  return out;
}

}  // namespace cypherdiff
