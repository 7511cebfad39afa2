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

#include "cypherdiff/completion.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <set>
#include <variant>

#include "cypherdiff/errors.h"
#include "cypherdiff/semantics.h"

namespace cypherdiff {
namespace {

constexpr double kMaxIntMagnitude = 1e15;

const TypeKind kScalarKinds[] = {TypeKind::kInteger, TypeKind::kFloat,
                                 TypeKind::kText, TypeKind::kBoolean};

int name_index(const std::string& name, char prefix) {
  if (name.size() < 2 || name[0] != prefix) return -1;
  int n = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9' || n > 100000000) return -1;
    n = n * 10 + (name[i] - '0');
  }
  return n;
}

bool aggregates_all(const ReturnList& list) {
  if (list.star || list.items.empty()) return false;
  return std::all_of(list.items.begin(), list.items.end(), [](const auto& item) {
    return contains_aggregate(*item.expr);
  });
}

// Generation state for one query.
class Session {
 public:
  Session(const GraphSchema& schema, const CompletionOptions& options,
          const FrequencyList& freq, Rng& rng)
      : schema_(schema), opt_(options), freq_(freq), rng_(rng) {}

  ClauseContext ctx;
  double rows = 1;

  void adopt_prefix(const Query& prefix) {
    for (const Clause& clause : prefix.clauses) {
      note_names(clause);
      account(clause);
    }
  }

  Clause generate(const SkeletonClause& hole) {
    switch (hole.kind) {
      case ClauseKind::kMatch:
      case ClauseKind::kOptionalMatch:
        return match(hole.kind == ClauseKind::kOptionalMatch, hole.has_where);
      case ClauseKind::kWith: return with(hole.has_where);
      case ClauseKind::kUnwind: return unwind();
      case ClauseKind::kReturn: return ret();
    }
    throw CompletionError("unknown clause kind");
  }

  // Threads context, row estimate and value bounds past a finished clause.
  void account(const Clause& clause) {
    const double before = rows;
    if (const auto* m = std::get_if<MatchClause>(&clause)) {
      ClauseContext running = ctx;
      double factor = 1;
      for (const Pattern& p : m->patterns) {
        factor *= pattern_factor(p, running, opt_);
        running = calculate_new_context(
            MatchClause{false, {p}, nullptr}, running, schema_);
      }
      rows *= m->optional ? std::max(1.0, factor) : factor;
    } else if (const auto* w = std::get_if<WithClause>(&clause)) {
      for (const auto& item : w->items.items) {
        if (item.alias) bounds_[*item.alias] = magnitude(*item.expr, before);
      }
      if (aggregates_all(w->items)) rows = 1;
    } else if (const auto* u = std::get_if<UnwindClause>(&clause)) {
      bounds_[u->alias] = magnitude(*u->expr, before);
      rows *= u->expr->op == ExprOp::kList
                  ? static_cast<double>(u->expr->args.size())
                  : 3.0;
    }
    ctx = calculate_new_context(clause, ctx, schema_);
  }

  void adopt_context(const ClauseContext& initial) {
    ctx = initial;
    for (const auto& name : ctx.variables()) note_name(name);
  }

  ExprPtr expression(const TypeInfo& required, int depth) {
    return gen(required, depth);
  }

  std::vector<Pattern> pattern_tuple(double budget) {
    return tuple(budget);
  }

 private:
  std::string fresh_var() { return "v" + std::to_string(next_var_++); }
  std::string fresh_alias() { return "a" + std::to_string(next_alias_++); }

  void note_name(const std::string& name) {
    if (int i = name_index(name, 'v'); i >= 0) next_var_ = std::max(next_var_, i + 1);
    if (int i = name_index(name, 'a'); i >= 0) next_alias_ = std::max(next_alias_, i + 1);
  }

  void note_names(const Clause& clause) {
    if (const auto* m = std::get_if<MatchClause>(&clause)) {
      for (const auto& p : m->patterns) {
        for (const auto& n : p.nodes) {
          if (n.variable) note_name(*n.variable);
        }
        for (const auto& r : p.rels) {
          if (r.variable) note_name(*r.variable);
        }
      }
    } else if (const auto* w = std::get_if<WithClause>(&clause)) {
      for (const auto& item : w->items.items) {
        if (item.alias) note_name(*item.alias);
      }
    } else if (const auto* u = std::get_if<UnwindClause>(&clause)) {
      note_name(u->alias);
    } else if (const auto* r = std::get_if<ReturnClause>(&clause)) {
      for (const auto& item : r->items.items) {
        if (item.alias) note_name(*item.alias);
      }
    }
  }

  double property_magnitude() const {
    return std::max({std::abs(static_cast<double>(opt_.literals.int_min)),
                     std::abs(static_cast<double>(opt_.literals.int_max)),
                     std::abs(opt_.literals.float_min),
                     std::abs(opt_.literals.float_max), 1.0});
  }

  // Upper bound on the absolute value of a numeric expression.
  double magnitude(const Expression& e, double row_count) const {
    switch (e.op) {
      case ExprOp::kLiteral:
        return e.literal.is_number() ? std::abs(e.literal.as_number()) : 1.0;
      case ExprOp::kProperty: return property_magnitude();
      case ExprOp::kVariable: {
        auto it = bounds_.find(e.variable);
        return it == bounds_.end() ? property_magnitude() : it->second;
      }
      case ExprOp::kList: {
        double m = 1;
        for (const auto& a : e.args) m = std::max(m, magnitude(*a, row_count));
        return m;
      }
      case ExprOp::kAdd:
      case ExprOp::kSub:
        return magnitude(*e.args[0], row_count) + magnitude(*e.args[1], row_count);
      case ExprOp::kMul:
        return magnitude(*e.args[0], row_count) * magnitude(*e.args[1], row_count);
      case ExprOp::kCount: return std::max(1.0, row_count);
      case ExprOp::kSum:
        return magnitude(*e.args[0], row_count) * std::max(1.0, row_count);
      case ExprOp::kMax:
      case ExprOp::kMin:
      case ExprOp::kAvg:
        return magnitude(*e.args[0], row_count);
      default: return 1.0;
    }
  }

  // ---- variables in scope ------------------------------------------------

  std::vector<std::string> vars_where(
      const std::function<bool(const TypeInfo&)>& pred) const {
    std::vector<std::string> out;
    for (const auto& [name, type] : ctx.local_env) {
      if (pred(type)) out.push_back(name);
    }
    return out;
  }

  std::vector<std::string> scalar_vars(const TypeInfo& required) const {
    return vars_where([&](const TypeInfo& t) {
      if (t.kind != required.kind) return false;
      if (t.kind == TypeKind::kList && t.element != required.element) return false;
      return !(avoid_float_aggregates_ && t.float_aggregate);
    });
  }

  std::vector<std::string> entity_vars() const {
    return vars_where([](const TypeInfo& t) { return t.is_entity(); });
  }

  // Keys of the given kind (any kind when nullopt) readable from some entity
  // variable in scope.
  std::vector<std::string> readable_keys(std::optional<TypeKind> kind) const {
    std::set<std::string> keys;
    for (const auto& [name, type] : ctx.local_env) {
      if (!type.is_entity()) continue;
      for (const auto& key : accessible_keys(type, schema_)) {
        const PropertyKeyDef* def = schema_.find_key(key);
        if (def && (!kind || type_kind_of(def->kind) == *kind)) keys.insert(key);
      }
    }
    return {keys.begin(), keys.end()};
  }

  ExprPtr property_access(const std::vector<std::string>& keys) {
    const std::string key = select_property_key(keys, freq_, rng_);
    std::vector<std::string> owners;
    for (const auto& [name, type] : ctx.local_env) {
      if (!type.is_entity()) continue;
      const auto accessible = accessible_keys(type, schema_);
      if (std::find(accessible.begin(), accessible.end(), key) != accessible.end()) {
        owners.push_back(name);
      }
    }
    return Expression::prop(rng_.pick(owners), key);
  }

  // ---- literals ------------------------------------------------------------

  std::string short_text(int max_len) {
    const std::string& alphabet = opt_.literals.text_alphabet;
    if (alphabet.empty()) return "";
    // Letters from the front of the alphabet keep predicates satisfiable.
    const std::size_t span = std::min<std::size_t>(alphabet.size(), 6);
    const auto len = rng_.uniform_int(1, std::max(1, max_len));
    std::string s;
    for (std::int64_t i = 0; i < len; ++i) s += alphabet[rng_.index(span)];
    return s;
  }

  Value literal_value(TypeKind kind) {
    switch (kind) {
      case TypeKind::kInteger:
        return random_property_value(rng_, PropertyKind::kInteger, opt_.literals);
      case TypeKind::kFloat:
        return random_property_value(rng_, PropertyKind::kFloat, opt_.literals);
      case TypeKind::kText:
        return rng_.chance(0.5)
                   ? Value::text(short_text(2))
                   : random_property_value(rng_, PropertyKind::kText, opt_.literals);
      default:
        return Value::boolean(rng_.chance(0.5));
    }
  }

  ExprPtr list_literal(TypeKind element) {
    std::vector<ExprPtr> items;
    const auto n = rng_.uniform_int(1, 3);
    for (std::int64_t i = 0; i < n; ++i) {
      items.push_back(Expression::lit(literal_value(element)));
    }
    return Expression::list(std::move(items));
  }

  // ---- expressions ---------------------------------------------------------

  ExprPtr leaf(const TypeInfo& required) {
    if (required.is_entity()) {
      auto vars = vars_where([&](const TypeInfo& t) { return t.kind == required.kind; });
      if (vars.empty()) throw CompletionError("no entity variable in scope");
      return Expression::var(rng_.pick(vars));
    }
    if (required.kind == TypeKind::kList) {
      auto vars = scalar_vars(required);
      if (!vars.empty() && rng_.chance(0.4)) return Expression::var(rng_.pick(vars));
      return list_literal(required.element);
    }
    const auto keys = readable_keys(required.kind);
    const auto vars = scalar_vars(required);
    const double weights[] = {keys.empty() ? 0.0 : 0.55,
                              vars.empty() ? 0.0 : 0.25, 0.2};
    switch (rng_.weighted_index(weights)) {
      case 0: return property_access(keys);
      case 1: return Expression::var(rng_.pick(vars));
      default: return Expression::lit(literal_value(required.kind));
    }
  }

  ExprPtr gen(const TypeInfo& required, int depth) {
    if (depth <= 1) return leaf(required);
    switch (required.kind) {
      case TypeKind::kBoolean: return boolean(depth);
      case TypeKind::kInteger:
      case TypeKind::kFloat:
        if (rng_.chance(0.3)) return arithmetic(required.kind, depth);
        return leaf(required);
      case TypeKind::kList: {
        if (rng_.chance(0.5)) return leaf(required);
        std::vector<ExprPtr> items;
        const auto n = rng_.uniform_int(1, 3);
        for (std::int64_t i = 0; i < n; ++i) {
          items.push_back(gen(TypeInfo::of(required.element), depth - 1));
        }
        return Expression::list(std::move(items));
      }
      default: return leaf(required);
    }
  }

  ExprPtr arithmetic(TypeKind kind, int depth) {
    TypeKind lk = kind, rk = kind;
    if (kind == TypeKind::kFloat) {
      const auto r = rng_.index(3);
      if (r == 1) lk = TypeKind::kInteger;
      if (r == 2) rk = TypeKind::kInteger;
    }
    ExprPtr lhs = gen(TypeInfo::of(lk), depth - 1);
    ExprPtr rhs = gen(TypeInfo::of(rk), depth - 1);
    static constexpr ExprOp kOps[] = {ExprOp::kAdd, ExprOp::kSub, ExprOp::kMul};
    ExprOp op = kOps[rng_.index(3)];
    if (op == ExprOp::kMul &&
        magnitude(*lhs, rows) * magnitude(*rhs, rows) > kMaxIntMagnitude) {
      op = ExprOp::kAdd;
    }
    if (op != ExprOp::kMul &&
        magnitude(*lhs, rows) + magnitude(*rhs, rows) > kMaxIntMagnitude) {
      return lhs;
    }
    return Expression::binary(op, lhs, rhs);
  }

  ExprPtr boolean(int depth) {
    const double weights[] = {0.45, 0.12, 0.10, 0.15, 0.06, 0.12};
    switch (rng_.weighted_index(weights)) {
      case 0: return comparison(depth);
      case 1: {
        static constexpr ExprOp kOps[] = {ExprOp::kStartsWith, ExprOp::kEndsWith,
                                          ExprOp::kContains};
        ExprPtr lhs = gen(TypeInfo::of(TypeKind::kText), depth - 1);
        ExprPtr rhs = rng_.chance(0.8) ? Expression::lit(Value::text(short_text(1)))
                                       : gen(TypeInfo::of(TypeKind::kText), depth - 1);
        return Expression::binary(kOps[rng_.index(3)], lhs, rhs);
      }
      case 2: {
        ExprPtr operand;
        const auto entities = entity_vars();
        if (!entities.empty() && rng_.chance(0.3)) {
          operand = Expression::var(rng_.pick(entities));
        } else {
          operand = gen(TypeInfo::of(kScalarKinds[rng_.index(4)]), depth - 1);
        }
        return Expression::unary(
            rng_.chance(0.5) ? ExprOp::kIsNull : ExprOp::kIsNotNull, operand);
      }
      case 3: {
        static constexpr ExprOp kOps[] = {ExprOp::kAnd, ExprOp::kOr, ExprOp::kXor};
        const ExprOp op = kOps[rng_.index(3)];
        ExprPtr lhs = gen(TypeInfo::of(TypeKind::kBoolean), depth - 1);
        return Expression::binary(op, lhs, gen(TypeInfo::of(TypeKind::kBoolean), depth - 1));
      }
      case 4:
        return Expression::unary(ExprOp::kNot,
                                 gen(TypeInfo::of(TypeKind::kBoolean), depth - 1));
      default: return leaf(TypeInfo::of(TypeKind::kBoolean));
    }
  }

  ExprPtr comparison(int depth) {
    TypeKind kind;
    ExprPtr lhs;
    const auto keys = readable_keys(std::nullopt);
    if (!keys.empty() && rng_.chance(0.7)) {
      lhs = property_access(keys);
      kind = type_kind_of(schema_.find_key(lhs->key)->kind);
    } else {
      kind = kScalarKinds[rng_.index(4)];
      lhs = gen(TypeInfo::of(kind), depth - 1);
    }
    ExprPtr rhs = rng_.chance(0.7) ? Expression::lit(literal_value(kind))
                                   : gen(TypeInfo::of(kind), depth - 1);
    if (rng_.chance(0.3)) std::swap(lhs, rhs);
    static constexpr ExprOp kOrdered[] = {ExprOp::kEq, ExprOp::kNe, ExprOp::kLt,
                                          ExprOp::kLe, ExprOp::kGt, ExprOp::kGe};
    const ExprOp op = kind == TypeKind::kBoolean ? kOrdered[rng_.index(2)]
                                                 : kOrdered[rng_.index(6)];
    return Expression::binary(op, lhs, rhs);
  }

  // Aggregate item root of the given scalar kind.
  ExprPtr aggregate(TypeKind kind) {
    avoid_float_aggregates_ = true;
    ExprPtr out;
    const int depth = std::min(2, opt_.max_depth);
    TypeKind want = kind == TypeKind::kBoolean ? kScalarKinds[rng_.index(2)] : kind;
    ExprOp op;
    ExprPtr arg;
    switch (want) {
      case TypeKind::kInteger: {
        static constexpr ExprOp kOps[] = {ExprOp::kCount, ExprOp::kCount,
                                          ExprOp::kSum, ExprOp::kMax, ExprOp::kMin};
        op = kOps[rng_.index(5)];
        if (op == ExprOp::kCount) {
          auto vars = vars_where([](const TypeInfo&) { return true; });
          arg = !vars.empty() && rng_.chance(0.5)
                    ? Expression::var(rng_.pick(vars))
                    : gen(TypeInfo::of(kScalarKinds[rng_.index(4)]), depth);
        } else {
          arg = gen(TypeInfo::of(TypeKind::kInteger), depth);
        }
        break;
      }
      case TypeKind::kFloat: {
        static constexpr ExprOp kOps[] = {ExprOp::kAvg, ExprOp::kAvg, ExprOp::kSum,
                                          ExprOp::kMax, ExprOp::kMin};
        op = kOps[rng_.index(5)];
        const TypeKind arg_kind = op == ExprOp::kAvg && rng_.chance(0.5)
                                      ? TypeKind::kInteger
                                      : TypeKind::kFloat;
        arg = gen(TypeInfo::of(arg_kind), depth);
        break;
      }
      default:  // text
        op = rng_.chance(0.5) ? ExprOp::kMax : ExprOp::kMin;
        arg = gen(TypeInfo::of(TypeKind::kText), depth);
        break;
    }
    avoid_float_aggregates_ = false;
    out = Expression::unary(op, arg);
    if (kind == TypeKind::kBoolean) {
      static constexpr ExprOp kCmp[] = {ExprOp::kEq, ExprOp::kNe, ExprOp::kLt,
                                        ExprOp::kLe, ExprOp::kGt, ExprOp::kGe};
      out = Expression::binary(kCmp[rng_.index(6)], out,
                               Expression::lit(literal_value(
                                   op == ExprOp::kCount ? TypeKind::kInteger : want)));
    }
    return out;
  }

  TypeKind random_scalar_kind() {
    const double weights[] = {0.3, 0.2, 0.2, 0.3};
    return kScalarKinds[rng_.weighted_index(weights)];
  }

  // ---- patterns --------------------------------------------------------------

  std::vector<std::string> bound_nodes(const ClauseContext& env) const {
    std::vector<std::string> out;
    for (const auto& [name, type] : env.local_env) {
      if (type.kind == TypeKind::kNode) out.push_back(name);
    }
    return out;
  }

  PropertyMap property_map(const TypeInfo& owner, double p) {
    PropertyMap map;
    if (!rng_.chance(p)) return map;
    const auto keys = accessible_keys(owner, schema_);
    if (keys.empty()) return map;
    const std::string key = select_property_key(keys, freq_, rng_);
    map.emplace_back(key, literal_value(type_kind_of(schema_.find_key(key)->kind)));
    return map;
  }

  NodePattern fresh_node(const std::string& preferred_label) {
    NodePattern n;
    if (rng_.chance(0.8)) n.variable = fresh_var();
    if (!preferred_label.empty() && rng_.chance(0.6)) {
      n.labels.push_back(preferred_label);
    } else if (!schema_.labels.empty() && rng_.chance(0.6)) {
      n.labels.push_back(rng_.pick(schema_.labels).name);
    }
    if (!n.labels.empty() && schema_.labels.size() > 1 && rng_.chance(0.05)) {
      const std::string& extra = rng_.pick(schema_.labels).name;
      if (extra != n.labels[0]) n.labels.push_back(extra);
    }
    TypeInfo type = TypeInfo::of(TypeKind::kNode);
    type.labels = n.labels;
    n.properties = property_map(type, 0.15);
    return n;
  }

  NodePattern node(const ClauseContext& env, double reuse_p,
                   const std::string& preferred_label) {
    const auto bound = bound_nodes(env);
    if (!bound.empty() && rng_.chance(reuse_p)) {
      NodePattern n;
      n.variable = rng_.pick(bound);
      return n;
    }
    return fresh_node(preferred_label);
  }

  std::vector<std::string> labels_of(const NodePattern& n,
                                     const ClauseContext& env) const {
    std::vector<std::string> labels = n.labels;
    if (n.variable) {
      if (const TypeInfo* t = env.find(*n.variable)) {
        labels.insert(labels.end(), t->labels.begin(), t->labels.end());
      }
    }
    return labels;
  }

  Pattern pattern(const ClauseContext& env) {
    Pattern p;
    const double r = rng_.uniform_real();
    const int hops = r < 0.35 ? 0 : r < 0.8 ? 1 : 2;
    p.nodes.push_back(node(env, 0.5, ""));
    ClauseContext running = env;
    for (int h = 0; h < hops; ++h) {
      running = calculate_new_context(MatchClause{false, {p}, nullptr}, env, schema_);
      const auto current = labels_of(p.nodes.back(), running);
      RelPattern rel;
      const double d = rng_.uniform_real();
      rel.direction = d < 0.4 ? Direction::kRight
                      : d < 0.7 ? Direction::kLeft
                                : Direction::kUndirected;
      std::string next_label;
      if (!schema_.rel_types.empty() && rng_.chance(0.5)) {
        // Prefer a type whose endpoint pairs fit the current node.
        std::vector<std::pair<std::string, std::string>> options;
        for (const RelTypeDef& t : schema_.rel_types) {
          for (const LabelPair& pair : t.pairs) {
            auto fits = [&](const std::string& label) {
              return current.empty() ||
                     std::find(current.begin(), current.end(), label) != current.end();
            };
            if (rel.direction != Direction::kLeft && fits(pair.source)) {
              options.emplace_back(t.name, pair.target);
            }
            if (rel.direction != Direction::kRight && fits(pair.target)) {
              options.emplace_back(t.name, pair.source);
            }
          }
        }
        if (options.empty()) {
          rel.types.push_back(rng_.pick(schema_.rel_types).name);
        } else {
          const auto& choice = rng_.pick(options);
          rel.types.push_back(choice.first);
          next_label = choice.second;
        }
        if (schema_.rel_types.size() > 1 && rng_.chance(0.05)) {
          const std::string& extra = rng_.pick(schema_.rel_types).name;
          if (extra != rel.types[0]) rel.types.push_back(extra);
        }
      }
      if (rng_.chance(0.8)) rel.variable = fresh_var();
      TypeInfo rel_type = TypeInfo::of(TypeKind::kRelationship);
      rel_type.rel_types = rel.types;
      rel.properties = property_map(rel_type, 0.1);
      p.rels.push_back(std::move(rel));
      p.nodes.push_back(node(running, 0.2, next_label));
    }
    return p;
  }

  std::vector<Pattern> tuple(double budget) {
    std::vector<Pattern> patterns;
    const int count = rng_.chance(0.75) ? 1 : 2;
    ClauseContext env = ctx;
    double estimate = rows;
    for (int i = 0; i < count; ++i) {
      std::optional<Pattern> chosen;
      for (int attempt = 0; attempt < opt_.subtree_retries && !chosen; ++attempt) {
        Pattern p = pattern(env);
        if (estimate * pattern_factor(p, env, opt_) <= budget) chosen = std::move(p);
      }
      if (!chosen) {
        const auto bound = bound_nodes(env);
        Pattern p;
        NodePattern n;
        if (!bound.empty()) {
          n.variable = rng_.pick(bound);
        } else {
          n.variable = fresh_var();
        }
        p.nodes.push_back(std::move(n));
        chosen = std::move(p);
      }
      estimate *= pattern_factor(*chosen, env, opt_);
      env = calculate_new_context(MatchClause{false, {*chosen}, nullptr}, env,
                                  schema_);
      patterns.push_back(std::move(*chosen));
    }
    return patterns;
  }

  // ---- clauses ---------------------------------------------------------------

  ExprPtr where(const ClauseContext& scope) {
    const ClauseContext saved = ctx;
    ctx = scope;
    ExprPtr e = gen(TypeInfo::of(TypeKind::kBoolean), opt_.max_depth);
    ctx = saved;
    return e;
  }

  Clause match(bool optional, bool has_where) {
    MatchClause m;
    m.optional = optional;
    m.patterns = tuple(opt_.row_budget);
    if (has_where) m.where = where(calculate_new_context(m, ctx, schema_));
    return m;
  }

  Clause with(bool has_where) {
    WithClause w;
    const auto n = rng_.uniform_int(1, 3);
    std::set<std::string> passed;
    bool has_aggregate = false;
    for (std::int64_t i = 0; i < n; ++i) {
      const double r = rng_.uniform_real();
      auto candidates = vars_where([](const TypeInfo&) { return true; });
      std::erase_if(candidates, [&](const std::string& v) { return passed.count(v) > 0; });
      if (r < 0.4 && !candidates.empty()) {
        const std::string v = rng_.pick(candidates);
        passed.insert(v);
        w.items.items.push_back({Expression::var(v), std::nullopt});
      } else if (r < 0.6 && !has_aggregate) {
        has_aggregate = true;
        w.items.items.push_back(
            {aggregate(kScalarKinds[rng_.index(3)]), fresh_alias()});
      } else {
        TypeInfo t = rng_.chance(0.1) ? TypeInfo::list_of(kScalarKinds[rng_.index(3)])
                                      : TypeInfo::of(random_scalar_kind());
        w.items.items.push_back({gen(t, opt_.max_depth), fresh_alias()});
      }
    }
    if (has_where) w.where = where(calculate_new_context(w, ctx, schema_));
    return w;
  }

  Clause unwind() {
    UnwindClause u;
    const TypeKind element = kScalarKinds[rng_.index(4)];
    u.expr = gen(TypeInfo::list_of(element), 2);
    u.alias = fresh_alias();
    return u;
  }

  Clause ret() {
    ReturnClause r;
    const auto n = rng_.uniform_int(1, 3);
    bool has_aggregate = false;
    for (std::int64_t i = 0; i < n; ++i) {
      const TypeKind kind = random_scalar_kind();
      if (!has_aggregate && rng_.chance(0.2)) {
        has_aggregate = true;
        r.items.items.push_back({aggregate(kind), fresh_alias()});
      } else {
        r.items.items.push_back({gen(TypeInfo::of(kind), opt_.max_depth), fresh_alias()});
      }
    }
    if (rng_.chance(0.3)) {
      for (const auto& item : r.items.items) {
        r.order_by.push_back({Expression::var(*item.alias), rng_.chance(0.3)});
      }
      if (rng_.chance(0.3)) r.skip = rng_.uniform_int(0, 3);
      if (rng_.chance(0.3)) r.limit = rng_.uniform_int(1, 5);
    }
    return r;
  }

  const GraphSchema& schema_;
  const CompletionOptions& opt_;
  const FrequencyList& freq_;
  Rng& rng_;
  int next_var_ = 0;
  int next_alias_ = 0;
  bool avoid_float_aggregates_ = false;
  std::map<std::string, double> bounds_;
};

}  // namespace

double pattern_factor(const Pattern& pattern, const ClauseContext& ctx,
                      const CompletionOptions& options) {
  const double n = std::max(1.0, options.expected_nodes);
  const double degree = 2 * options.expected_relationships / n;
  const auto& start = pattern.nodes.front();
  double factor = start.variable && ctx.has(*start.variable) ? 1.0 : n;
  for (std::size_t i = 0; i < pattern.rels.size(); ++i) factor *= degree;
  return factor;
}

Completer::Completer(const GraphSchema& schema, CompletionOptions options)
    : schema_(schema), options_(std::move(options)) {}

Query Completer::extend(const Query& prefix,
                        const std::vector<SkeletonClause>& tail,
                        const FrequencyList& freq, Rng& rng) const {
  std::string last_problem = "empty skeleton";
  for (int attempt = 0; attempt < options_.clause_retries; ++attempt) {
    Session session(schema_, options_, freq, rng);
    session.adopt_prefix(prefix);
    Query q = prefix;
    try {
      for (const SkeletonClause& hole : tail) {
        Clause c = session.generate(hole);
        session.account(c);
        q.clauses.push_back(std::move(c));
      }
    } catch (const CompletionError& e) {
      last_problem = e.what();
      continue;
    }
    const SemanticReport report = validate_semantics(q, schema_);
    if (report.ok()) return q;
    last_problem = report.summary();
  }
  throw CompletionError("no valid completion: " + last_problem);
}

Query Completer::fill_skeleton(const Skeleton& skeleton, const FrequencyList& freq,
                               Rng& rng) const {
  if (!is_skeleton_word(skeleton)) {
    throw CompletionError("not a skeleton: " + skeleton.to_string());
  }
  return extend(Query{}, skeleton.clauses, freq, rng);
}

ExprPtr Completer::generate_expression(const TypeInfo& required,
                                       const ClauseContext& ctx,
                                       const FrequencyList& freq, Rng& rng,
                                       int max_depth) const {
  if (max_depth < 1) throw CompletionError("max_depth must be at least 1");
  std::string last_problem;
  for (int attempt = 0; attempt < options_.subtree_retries; ++attempt) {
    Session session(schema_, options_, freq, rng);
    session.adopt_context(ctx);
    try {
      ExprPtr e = session.expression(required, max_depth);
      auto t = infer_type(*e, ctx, schema_);
      if (t && t->kind == required.kind) return e;
      last_problem = "generated expression has the wrong type";
    } catch (const CompletionError& e) {
      last_problem = e.what();
    }
  }
  throw CompletionError("no expression of kind " +
                        std::string(to_string(required.kind)) + ": " + last_problem);
}

std::vector<Pattern> Completer::generate_pattern_tuple(const ClauseContext& ctx,
                                                       const FrequencyList& freq,
                                                       Rng& rng) const {
  Session session(schema_, options_, freq, rng);
  session.adopt_context(ctx);
  return session.pattern_tuple(std::numeric_limits<double>::infinity());
}

}  // namespace cypherdiff
