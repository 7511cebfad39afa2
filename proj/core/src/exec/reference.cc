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

#include "cypherdiff/exec/reference.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <variant>

#include "cypherdiff/semantics.h"

namespace cypherdiff {
namespace {

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Rejected : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TimeoutSignal {};

class Scope {
 public:
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t add(const std::string& name) {
    auto [it, inserted] = index_.emplace(name, names_.size());
    if (inserted) names_.push_back(name);
    return it->second;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct Table {
  Scope scope;
  std::vector<Row> rows;
};

using AggValues = std::unordered_map<const Expression*, Value>;

int numeric_compare(const Value& a, const Value& b) {
  if (a.kind() == ValueKind::kInteger && b.kind() == ValueKind::kInteger) {
    return a.as_int() < b.as_int() ? -1 : a.as_int() > b.as_int() ? 1 : 0;
  }
  const long double x = a.kind() == ValueKind::kInteger
                            ? static_cast<long double>(a.as_int())
                            : static_cast<long double>(a.as_float());
  const long double y = b.kind() == ValueKind::kInteger
                            ? static_cast<long double>(b.as_int())
                            : static_cast<long double>(b.as_float());
  return x < y ? -1 : x > y ? 1 : 0;
}

// Three-valued ordering comparison; nullopt for null or incomparable kinds.
std::optional<int> cypher_compare(const Value& a, const Value& b) {
  if (a.is_null() || b.is_null()) return std::nullopt;
  if (a.is_number() && b.is_number()) return numeric_compare(a, b);
  if (a.kind() != b.kind()) return std::nullopt;
  switch (a.kind()) {
    case ValueKind::kText: {
      const int c = a.as_text().compare(b.as_text());
      return c < 0 ? -1 : c > 0 ? 1 : 0;
    }
    case ValueKind::kBoolean:
      return static_cast<int>(a.as_bool()) - static_cast<int>(b.as_bool());
    default: return std::nullopt;
  }
}

int kind_rank(const Value& v) {
  switch (v.kind()) {
    case ValueKind::kNode: return 0;
    case ValueKind::kRelationship: return 1;
    case ValueKind::kList: return 2;
    case ValueKind::kText: return 3;
    case ValueKind::kBoolean: return 4;
    case ValueKind::kInteger:
    case ValueKind::kFloat: return 5;
    case ValueKind::kNull: return 6;
  }
  return 7;
}

std::optional<bool> truth(const Value& v) {
  if (v.is_null()) return std::nullopt;
  if (v.kind() != ValueKind::kBoolean) {
    throw EvalError("expected a boolean, got " + std::string(to_string(v.kind())));
  }
  return v.as_bool();
}

Value tri(std::optional<bool> b) {
  return b ? Value::boolean(*b) : Value::null();
}

const std::string& text_operand(const Value& v) {
  if (v.kind() != ValueKind::kText) {
    throw EvalError("expected a string, got " + std::string(to_string(v.kind())));
  }
  return v.as_text();
}

Value arithmetic(ExprOp op, const Value& a, const Value& b) {
  if (a.is_null() || b.is_null()) return Value::null();
  if (!a.is_number() || !b.is_number()) {
    throw EvalError("arithmetic over " + std::string(to_string(a.kind())) +
                    " and " + to_string(b.kind()));
  }
  if (a.kind() == ValueKind::kInteger && b.kind() == ValueKind::kInteger) {
    std::int64_t r = 0;
    bool overflow = false;
    switch (op) {
      case ExprOp::kAdd: overflow = __builtin_add_overflow(a.as_int(), b.as_int(), &r); break;
      case ExprOp::kSub: overflow = __builtin_sub_overflow(a.as_int(), b.as_int(), &r); break;
      default: overflow = __builtin_mul_overflow(a.as_int(), b.as_int(), &r); break;
    }
    if (overflow) throw EvalError("integer overflow");
    return Value::integer(r);
  }
  const double x = a.as_number(), y = b.as_number();
  switch (op) {
    case ExprOp::kAdd: return Value::floating(x + y);
    case ExprOp::kSub: return Value::floating(x - y);
    default: return Value::floating(x * y);
  }
}

// Serialization that separates values grouping must keep apart.
void group_key(const Value& v, std::string& out) {
  switch (v.kind()) {
    case ValueKind::kNull: out += "n;"; break;
    case ValueKind::kBoolean: out += v.as_bool() ? "t;" : "f;"; break;
    case ValueKind::kInteger: out += "i" + std::to_string(v.as_int()) + ";"; break;
    case ValueKind::kFloat: out += "d" + format_float_17(v.as_float()) + ";"; break;
    case ValueKind::kText:
      out += "s" + std::to_string(v.as_text().size()) + ":" + v.as_text() + ";";
      break;
    case ValueKind::kList:
      out += "[";
      for (const auto& e : v.as_list()) group_key(e, out);
      out += "]";
      break;
    case ValueKind::kNode: out += "N" + std::to_string(v.entity_id()) + ";"; break;
    case ValueKind::kRelationship:
      out += "R" + std::to_string(v.entity_id()) + ";";
      break;
  }
}

struct NodeStep {
  const NodePattern* pattern = nullptr;
  int slot = -1;
  bool bind = false;
};

struct RelStep {
  const RelPattern* pattern = nullptr;
  int slot = -1;
  bool bind = false;
};

struct PatternPlan {
  std::vector<NodeStep> nodes;
  std::vector<RelStep> rels;
};

class Evaluator {
 public:
  Evaluator(const PropertyGraph& graph, const EvalOptions& options)
      : graph_(graph), options_(options) {
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
      node_index_[graph.nodes[i].id] = i;
    }
    out_.resize(graph.nodes.size());
    in_.resize(graph.nodes.size());
    for (std::size_t i = 0; i < graph.relationships.size(); ++i) {
      const Relationship& r = graph.relationships[i];
      rel_index_[r.id] = i;
      auto s = node_index_.find(r.source);
      auto t = node_index_.find(r.target);
      if (s == node_index_.end() || t == node_index_.end()) {
        throw EvalError("relationship " + std::to_string(r.id) +
                        " has a dangling endpoint");
      }
      out_[s->second].push_back(i);
      in_[t->second].push_back(i);
    }
  }

  ResultSet run(const Query& query) {
    Table table;
    table.rows.emplace_back();
    for (const Clause& clause : query.clauses) {
      if (const auto* m = std::get_if<MatchClause>(&clause)) {
        table = match(*m, table);
      } else if (const auto* w = std::get_if<WithClause>(&clause)) {
        table = with(*w, table);
      } else if (const auto* u = std::get_if<UnwindClause>(&clause)) {
        table = unwind(*u, table);
      } else {
        return ret(std::get<ReturnClause>(clause), table);
      }
    }
    throw Rejected("query does not end with RETURN");
  }

 private:
  void tick() {
    if ((++steps_ & 1023) == 0 && options_.deadline &&
        std::chrono::steady_clock::now() > *options_.deadline) {
      throw TimeoutSignal{};
    }
  }

  void check_size(std::size_t rows) const {
    if (rows > options_.max_rows) throw TimeoutSignal{};
  }

  // ---- expressions -----------------------------------------------------

  Value eval(const Expression& e, const Row& row, const Scope& scope,
             const AggValues* aggs = nullptr) {
    switch (e.op) {
      case ExprOp::kLiteral: return e.literal;
      case ExprOp::kVariable: return lookup(e.variable, row, scope);
      case ExprOp::kProperty: {
        const Value owner = lookup(e.variable, row, scope);
        return property(owner, e.key);
      }
      case ExprOp::kList: {
        ValueList items;
        items.reserve(e.args.size());
        for (const auto& a : e.args) items.push_back(eval(*a, row, scope, aggs));
        return Value::list(std::move(items));
      }
      case ExprOp::kEq:
      case ExprOp::kNe: {
        auto eq = cypher_equal(eval(*e.args[0], row, scope, aggs),
                               eval(*e.args[1], row, scope, aggs));
        if (!eq) return Value::null();
        return Value::boolean(e.op == ExprOp::kEq ? *eq : !*eq);
      }
      case ExprOp::kLt:
      case ExprOp::kLe:
      case ExprOp::kGt:
      case ExprOp::kGe: {
        auto c = cypher_compare(eval(*e.args[0], row, scope, aggs),
                                eval(*e.args[1], row, scope, aggs));
        if (!c) return Value::null();
        switch (e.op) {
          case ExprOp::kLt: return Value::boolean(*c < 0);
          case ExprOp::kLe: return Value::boolean(*c <= 0);
          case ExprOp::kGt: return Value::boolean(*c > 0);
          default: return Value::boolean(*c >= 0);
        }
      }
      case ExprOp::kAnd:
      case ExprOp::kOr:
      case ExprOp::kXor: {
        auto a = truth(eval(*e.args[0], row, scope, aggs));
        auto b = truth(eval(*e.args[1], row, scope, aggs));
        if (e.op == ExprOp::kAnd) {
          if ((a && !*a) || (b && !*b)) return Value::boolean(false);
          if (!a || !b) return Value::null();
          return Value::boolean(true);
        }
        if (e.op == ExprOp::kOr) {
          if ((a && *a) || (b && *b)) return Value::boolean(true);
          if (!a || !b) return Value::null();
          return Value::boolean(false);
        }
        if (!a || !b) return Value::null();
        return Value::boolean(*a != *b);
      }
      case ExprOp::kNot: {
        auto a = truth(eval(*e.args[0], row, scope, aggs));
        return tri(a ? std::optional<bool>(!*a) : std::nullopt);
      }
      case ExprOp::kAdd:
      case ExprOp::kSub:
      case ExprOp::kMul:
        return arithmetic(e.op, eval(*e.args[0], row, scope, aggs),
                          eval(*e.args[1], row, scope, aggs));
      case ExprOp::kStartsWith:
      case ExprOp::kEndsWith:
      case ExprOp::kContains: {
        const Value a = eval(*e.args[0], row, scope, aggs);
        const Value b = eval(*e.args[1], row, scope, aggs);
        if (a.is_null() || b.is_null()) return Value::null();
        const std::string& s = text_operand(a);
        const std::string& t = text_operand(b);
        if (e.op == ExprOp::kStartsWith) {
          return Value::boolean(s.compare(0, t.size(), t) == 0 && s.size() >= t.size());
        }
        if (e.op == ExprOp::kEndsWith) {
          return Value::boolean(s.size() >= t.size() &&
                                s.compare(s.size() - t.size(), t.size(), t) == 0);
        }
        return Value::boolean(s.find(t) != std::string::npos);
      }
      case ExprOp::kIsNull:
        return Value::boolean(eval(*e.args[0], row, scope, aggs).is_null());
      case ExprOp::kIsNotNull:
        return Value::boolean(!eval(*e.args[0], row, scope, aggs).is_null());
      default: break;
    }
    // aggregates
    if (aggs) {
      auto it = aggs->find(&e);
      if (it != aggs->end()) return it->second;
    }
    throw Rejected("aggregate outside a projection");
  }

  Value lookup(const std::string& name, const Row& row, const Scope& scope) const {
    auto slot = scope.find(name);
    if (!slot) throw Rejected("variable " + name + " is not defined");
    return row[*slot];
  }

  Value property(const Value& owner, const std::string& key) const {
    const std::map<std::string, Value>* props = nullptr;
    switch (owner.kind()) {
      case ValueKind::kNull: return Value::null();
      case ValueKind::kNode:
        props = &graph_.nodes[node_index_.at(owner.entity_id())].properties;
        break;
      case ValueKind::kRelationship:
        props = &graph_.relationships[rel_index_.at(owner.entity_id())].properties;
        break;
      default:
        throw EvalError("property access on " + std::string(to_string(owner.kind())));
    }
    auto it = props->find(key);
    return it == props->end() ? Value::null() : it->second;
  }

  Value aggregate(const Expression& e, const std::vector<const Row*>& rows,
                  const Scope& scope) {
    std::vector<Value> values;
    values.reserve(rows.size());
    for (const Row* r : rows) {
      tick();
      Value v = eval(*e.args[0], *r, scope);
      if (!v.is_null()) values.push_back(std::move(v));
    }
    switch (e.op) {
      case ExprOp::kCount:
        return Value::integer(static_cast<std::int64_t>(values.size()));
      case ExprOp::kSum: {
        bool all_int = true;
        for (const auto& v : values) {
          if (!v.is_number()) throw EvalError("sum over non-numbers");
          all_int = all_int && v.kind() == ValueKind::kInteger;
        }
        if (all_int) {
          std::int64_t s = 0;
          for (const auto& v : values) {
            if (__builtin_add_overflow(s, v.as_int(), &s)) {
              throw EvalError("integer overflow");
            }
          }
          return Value::integer(s);
        }
        double s = 0;
        for (const auto& v : values) s += v.as_number();
        return Value::floating(s);
      }
      case ExprOp::kAvg: {
        if (values.empty()) return Value::null();
        long double s = 0;
        for (const auto& v : values) {
          if (!v.is_number()) throw EvalError("avg over non-numbers");
          s += v.kind() == ValueKind::kInteger ? static_cast<long double>(v.as_int())
                                               : static_cast<long double>(v.as_float());
        }
        return Value::floating(static_cast<double>(s / static_cast<long double>(values.size())));
      }
      default: {
        if (values.empty()) return Value::null();
        const Value* best = &values.front();
        for (const auto& v : values) {
          const int c = order_compare(v, *best);
          if ((e.op == ExprOp::kMax && c > 0) || (e.op == ExprOp::kMin && c < 0)) {
            best = &v;
          }
        }
        return *best;
      }
    }
  }

  // ---- MATCH -----------------------------------------------------------

  std::vector<PatternPlan> plan(const MatchClause& m, Scope& scope) {
    const std::size_t inherited = scope.size();
    std::vector<bool> bound;
    std::vector<PatternPlan> plans;
    auto slot_for = [&](const std::optional<std::string>& var, bool& bind) {
      bind = false;
      if (!var) return -1;
      auto existing = scope.find(*var);
      if (existing) {
        if (*existing >= inherited && !bound[*existing - inherited]) {
          bound[*existing - inherited] = true;
          bind = true;
        }
        return static_cast<int>(*existing);
      }
      const std::size_t slot = scope.add(*var);
      bound.push_back(true);
      bind = true;
      return static_cast<int>(slot);
    };
    for (const Pattern& p : m.patterns) {
      PatternPlan pp;
      for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        if (i > 0) {
          RelStep r;
          r.pattern = &p.rels[i - 1];
          r.slot = slot_for(r.pattern->variable, r.bind);
          pp.rels.push_back(r);
        }
        NodeStep n;
        n.pattern = &p.nodes[i];
        n.slot = slot_for(n.pattern->variable, n.bind);
        pp.nodes.push_back(n);
      }
      plans.push_back(std::move(pp));
    }
    return plans;
  }

  bool properties_match(const PropertyMap& wanted,
                        const std::map<std::string, Value>& actual) const {
    for (const auto& [key, value] : wanted) {
      auto it = actual.find(key);
      if (it == actual.end()) return false;
      auto eq = cypher_equal(it->second, value);
      if (!eq || !*eq) return false;
    }
    return true;
  }

  bool node_fits(const NodePattern& p, std::size_t idx) const {
    const Node& n = graph_.nodes[idx];
    for (const auto& label : p.labels) {
      if (!n.has_label(label)) return false;
    }
    return properties_match(p.properties, n.properties);
  }

  bool rel_fits(const RelPattern& p, std::size_t idx) const {
    const Relationship& r = graph_.relationships[idx];
    if (!p.types.empty() &&
        std::find(p.types.begin(), p.types.end(), r.type) == p.types.end()) {
      return false;
    }
    return properties_match(p.properties, r.properties);
  }

  struct MatchState {
    const std::vector<PatternPlan>* plans;
    Row row;
    std::vector<std::size_t> used;
    std::function<void(const Row&)> emit;
  };

  void start_pattern(MatchState& st, std::size_t p) {
    if (p == st.plans->size()) {
      st.emit(st.row);
      return;
    }
    const NodeStep& step = (*st.plans)[p].nodes[0];
    if (step.slot >= 0 && !step.bind) {
      const Value& v = st.row[step.slot];
      if (v.is_null()) return;
      if (v.kind() != ValueKind::kNode) throw EvalError("pattern node bound to a non-node");
      visit_node(st, p, 0, node_index_.at(v.entity_id()));
      return;
    }
    for (std::size_t i = 0; i < graph_.nodes.size(); ++i) visit_node(st, p, 0, i);
  }

  void visit_node(MatchState& st, std::size_t p, std::size_t j, std::size_t idx) {
    tick();
    const PatternPlan& plan = (*st.plans)[p];
    const NodeStep& step = plan.nodes[j];
    const Node& node = graph_.nodes[idx];
    if (step.slot >= 0 && !step.bind) {
      const Value& v = st.row[step.slot];
      if (v.kind() != ValueKind::kNode || v.entity_id() != node.id) return;
    }
    if (!node_fits(*step.pattern, idx)) return;
    if (step.slot >= 0 && step.bind) st.row[step.slot] = Value::node(node.id);
    if (j == plan.rels.size()) {
      start_pattern(st, p + 1);
      return;
    }
    const RelStep& rel = plan.rels[j];
    auto follow = [&](std::size_t r, std::size_t other) {
      tick();
      if (std::find(st.used.begin(), st.used.end(), r) != st.used.end()) return;
      if (!rel_fits(*rel.pattern, r)) return;
      const Relationship& rr = graph_.relationships[r];
      if (rel.slot >= 0 && !rel.bind) {
        const Value& v = st.row[rel.slot];
        if (v.kind() != ValueKind::kRelationship || v.entity_id() != rr.id) return;
      }
      if (rel.slot >= 0 && rel.bind) st.row[rel.slot] = Value::relationship(rr.id);
      st.used.push_back(r);
      visit_node(st, p, j + 1, other);
      st.used.pop_back();
    };
    const Direction dir = rel.pattern->direction;
    if (dir != Direction::kLeft) {
      for (std::size_t r : out_[idx]) {
        follow(r, node_index_.at(graph_.relationships[r].target));
      }
    }
    if (dir != Direction::kRight) {
      for (std::size_t r : in_[idx]) {
        const Relationship& rr = graph_.relationships[r];
        // An undirected pattern meets a self-loop once.
        if (dir == Direction::kUndirected && rr.source == rr.target) continue;
        follow(r, node_index_.at(rr.source));
      }
    }
  }

  bool passes(const ExprPtr& where, const Row& row, const Scope& scope) {
    if (!where) return true;
    auto t = truth(eval(*where, row, scope));
    return t && *t;
  }

  Table match(const MatchClause& m, const Table& in) {
    Table out;
    out.scope = in.scope;
    const std::size_t inherited = in.scope.size();
    const auto plans = plan(m, out.scope);
    const std::size_t width = out.scope.size();
    const bool drop_matched = m.optional && m.where &&
                              options_.faults.optional_where_drops_matched;
    for (const Row& input : in.rows) {
      std::vector<Row> matches;
      MatchState st;
      st.plans = &plans;
      st.row = input;
      st.row.resize(width);
      st.emit = [&](const Row& row) {
        if (passes(m.where, row, out.scope)) {
          matches.push_back(row);
          check_size(out.rows.size() + matches.size());
        }
      };
      start_pattern(st, 0);
      if (m.optional && matches.empty()) {
        Row padded = input;
        padded.resize(width);
        for (std::size_t i = inherited; i < width; ++i) padded[i] = Value::null();
        out.rows.push_back(std::move(padded));
      } else if (!drop_matched) {
        for (auto& r : matches) out.rows.push_back(std::move(r));
      }
      check_size(out.rows.size());
    }
    return out;
  }

  // ---- projections -----------------------------------------------------

  struct Projection {
    Table table;
    std::vector<std::size_t> source;  // input row per output row; empty when aggregating
    bool aggregating = false;
  };

  Projection project(const ReturnList& list, const Table& in, bool is_return) {
    Projection out;
    if (list.star) {
      std::vector<std::string> names = in.scope.names();
      if (is_return) std::sort(names.begin(), names.end());
      std::vector<std::size_t> slots;
      for (const auto& n : names) {
        out.table.scope.add(n);
        slots.push_back(*in.scope.find(n));
      }
      for (std::size_t r = 0; r < in.rows.size(); ++r) {
        Row row;
        for (std::size_t s : slots) row.push_back(in.rows[r][s]);
        out.table.rows.push_back(std::move(row));
        out.source.push_back(r);
      }
      return out;
    }
    std::vector<bool> has_agg;
    for (const ReturnItem& item : list.items) {
      std::string name = item.alias ? *item.alias
                         : item.expr->op == ExprOp::kVariable ? item.expr->variable
                                                              : column_name(item);
      out.table.scope.add(name);
      has_agg.push_back(contains_aggregate(*item.expr));
      out.aggregating = out.aggregating || has_agg.back();
    }
    if (!out.aggregating) {
      for (std::size_t r = 0; r < in.rows.size(); ++r) {
        tick();
        Row row;
        row.reserve(list.items.size());
        for (const ReturnItem& item : list.items) {
          row.push_back(eval(*item.expr, in.rows[r], in.scope));
        }
        out.table.rows.push_back(std::move(row));
        out.source.push_back(r);
      }
      return out;
    }

    struct Group {
      Row keys;
      std::vector<const Row*> members;
    };
    std::vector<Group> groups;
    std::map<std::string, std::size_t> lookup;
    bool any_key = false;
    for (std::size_t i = 0; i < list.items.size(); ++i) any_key = any_key || !has_agg[i];
    for (const Row& r : in.rows) {
      tick();
      Row keys;
      std::string k;
      for (std::size_t i = 0; i < list.items.size(); ++i) {
        if (has_agg[i]) continue;
        keys.push_back(eval(*list.items[i].expr, r, in.scope));
        group_key(keys.back(), k);
      }
      auto [it, inserted] = lookup.emplace(k, groups.size());
      if (inserted) groups.push_back({std::move(keys), {}});
      groups[it->second].members.push_back(&r);
    }
    if (!any_key && groups.empty() && !options_.faults.count_over_empty_drops_row) {
      groups.push_back({});
    }
    const Row empty_row(in.scope.size());
    for (const Group& g : groups) {
      Row row;
      std::size_t key_i = 0;
      for (std::size_t i = 0; i < list.items.size(); ++i) {
        if (!has_agg[i]) {
          row.push_back(g.keys[key_i++]);
          continue;
        }
        AggValues aggs;
        visit(*list.items[i].expr, [&](const Expression& sub) {
          if (is_aggregate(sub.op)) aggs[&sub] = aggregate(sub, g.members, in.scope);
        });
        const Row& rep = g.members.empty() ? empty_row : *g.members.front();
        row.push_back(eval(*list.items[i].expr, rep, in.scope, &aggs));
      }
      out.table.rows.push_back(std::move(row));
    }
    return out;
  }

  Table with(const WithClause& w, const Table& in) {
    Projection p = project(w.items, in, false);
    if (!w.where) return std::move(p.table);
    Table out;
    out.scope = p.table.scope;
    for (Row& r : p.table.rows) {
      if (passes(w.where, r, out.scope)) out.rows.push_back(std::move(r));
    }
    return out;
  }

  Table unwind(const UnwindClause& u, const Table& in) {
    Table out;
    out.scope = in.scope;
    const std::size_t slot = out.scope.add(u.alias);
    for (const Row& r : in.rows) {
      const Value v = eval(*u.expr, r, in.scope);
      auto push = [&](const Value& element) {
        Row row = r;
        row.resize(out.scope.size());
        row[slot] = element;
        out.rows.push_back(std::move(row));
      };
      if (v.is_null()) continue;
      if (v.kind() == ValueKind::kList) {
        for (const Value& e : v.as_list()) push(e);
      } else {
        push(v);
      }
      check_size(out.rows.size());
    }
    return out;
  }

  ResultSet ret(const ReturnClause& r, const Table& in) {
    Projection p = project(r.items, in, true);
    ResultSet result;
    result.columns = p.table.scope.names();
    result.ordered = !r.order_by.empty();
    std::vector<std::size_t> order(p.table.rows.size());
    std::iota(order.begin(), order.end(), 0);
    if (!r.order_by.empty()) {
      Scope combined = p.table.scope;
      std::vector<std::pair<std::size_t, std::size_t>> extra;  // combined slot, input slot
      if (!p.aggregating) {
        for (const auto& name : in.scope.names()) {
          if (combined.find(name)) continue;
          extra.emplace_back(combined.add(name), *in.scope.find(name));
        }
      }
      std::vector<std::vector<Value>> keys(p.table.rows.size());
      for (std::size_t i = 0; i < p.table.rows.size(); ++i) {
        Row row = p.table.rows[i];
        row.resize(combined.size());
        if (!p.aggregating) {
          for (const auto& [c, s] : extra) row[c] = in.rows[p.source[i]][s];
        }
        for (const SortItem& s : r.order_by) {
          std::optional<Value> projected;
          for (std::size_t k = 0; k < r.items.items.size(); ++k) {
            if (expr_equal(*s.expr, *r.items.items[k].expr)) {
              projected = p.table.rows[i][k];
            }
          }
          keys[i].push_back(projected ? *projected : eval(*s.expr, row, combined));
        }
      }
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        for (std::size_t k = 0; k < r.order_by.size(); ++k) {
          int c = order_compare(keys[a][k], keys[b][k]);
          if (r.order_by[k].descending) c = -c;
          if (c != 0) return c < 0;
        }
        return false;
      });
    }
    std::size_t begin = r.skip ? static_cast<std::size_t>(std::max<std::int64_t>(0, *r.skip)) : 0;
    begin = std::min(begin, order.size());
    std::size_t end = order.size();
    if (r.limit) end = std::min(end, begin + static_cast<std::size_t>(std::max<std::int64_t>(0, *r.limit)));
    for (std::size_t i = begin; i < end; ++i) {
      result.rows.push_back(std::move(p.table.rows[order[i]]));
    }
    return result;
  }

  const PropertyGraph& graph_;
  const EvalOptions& options_;
  std::unordered_map<std::int64_t, std::size_t> node_index_;
  std::unordered_map<std::int64_t, std::size_t> rel_index_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::uint64_t steps_ = 0;
};

}  // namespace

std::optional<bool> cypher_equal(const Value& a, const Value& b) {
  if (a.is_null() || b.is_null()) return std::nullopt;
  if (a.is_number() && b.is_number()) {
    if (std::isnan(a.as_number()) || std::isnan(b.as_number())) return false;
    return numeric_compare(a, b) == 0;
  }
  if (a.kind() != b.kind()) return false;
  if (a.kind() == ValueKind::kList) {
    const auto& x = a.as_list();
    const auto& y = b.as_list();
    if (x.size() != y.size()) return false;
    bool unknown = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto eq = cypher_equal(x[i], y[i]);
      if (eq && !*eq) return false;
      if (!eq) unknown = true;
    }
    if (unknown) return std::nullopt;
    return true;
  }
  return a == b;
}

int order_compare(const Value& a, const Value& b) {
  const int ra = kind_rank(a), rb = kind_rank(b);
  if (ra != rb) return ra < rb ? -1 : 1;
  switch (a.kind()) {
    case ValueKind::kNull: return 0;
    case ValueKind::kInteger:
    case ValueKind::kFloat: return numeric_compare(a, b);
    case ValueKind::kText: {
      const int c = a.as_text().compare(b.as_text());
      return c < 0 ? -1 : c > 0 ? 1 : 0;
    }
    case ValueKind::kBoolean:
      return static_cast<int>(a.as_bool()) - static_cast<int>(b.as_bool());
    case ValueKind::kList: {
      const auto& x = a.as_list();
      const auto& y = b.as_list();
      for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
        if (int c = order_compare(x[i], y[i]); c != 0) return c;
      }
      return x.size() < y.size() ? -1 : x.size() > y.size() ? 1 : 0;
    }
    case ValueKind::kNode:
    case ValueKind::kRelationship:
      return a.entity_id() < b.entity_id() ? -1 : a.entity_id() > b.entity_id() ? 1 : 0;
  }
  return 0;
}

ExecOutcome reference_eval(const PropertyGraph& graph, const Query& query,
                           const EvalOptions& options) {
  SemanticOptions semantic;
  semantic.check_schema = false;
  const SemanticReport report = validate_semantics(query, graph.schema, semantic);
  if (!report.ok()) {
    return ExecOutcome::failure(OutcomeKind::kSemanticRejection, report.summary());
  }
  try {
    Evaluator evaluator(graph, options);
    return ExecOutcome::success(evaluator.run(query));
  } catch (const TimeoutSignal&) {
    return ExecOutcome::failure(OutcomeKind::kTimeout, "evaluation exceeded its budget");
  } catch (const Rejected& e) {
    return ExecOutcome::failure(OutcomeKind::kSemanticRejection, e.what());
  } catch (const EvalError& e) {
    return ExecOutcome::failure(OutcomeKind::kRuntimeError, e.what());
  } catch (const std::exception& e) {
    return ExecOutcome::failure(OutcomeKind::kRuntimeError,
                                std::string("internal error: ") + e.what());
  }
}

}  // namespace cypherdiff
