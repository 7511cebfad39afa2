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

#include "cypherdiff/mutation.h"

#include <variant>

#include "cypherdiff/errors.h"
#include "cypherdiff/semantics.h"

namespace cypherdiff {
namespace {

constexpr int kStrategyDraws = 30;
constexpr int kSourceDraws = 20;

int next_alias_index(const Query& query) {
  int next = 0;
  auto note = [&](const std::string& name) {
    if (name.size() < 2 || name[0] != 'a') return;
    int n = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9' || n > 100000000) return;
      n = n * 10 + (name[i] - '0');
    }
    next = std::max(next, n + 1);
  };
  for (const Clause& clause : query.clauses) {
    if (const auto* w = std::get_if<WithClause>(&clause)) {
      for (const auto& item : w->items.items) {
        if (item.alias) note(*item.alias);
      }
    } else if (const auto* r = std::get_if<ReturnClause>(&clause)) {
      for (const auto& item : r->items.items) {
        if (item.alias) note(*item.alias);
      }
    } else if (const auto* u = std::get_if<UnwindClause>(&clause)) {
      note(u->alias);
    }
  }
  return next;
}

// Items of `list` whose type, in the context before the clause, is scalar.
std::vector<ReturnItem> scalar_items(const ReturnList& list,
                                     const ClauseContext& ctx,
                                     const GraphSchema& schema) {
  std::vector<ReturnItem> out;
  for (const ReturnItem& item : list.items) {
    auto t = infer_type(*item.expr, ctx, schema);
    const bool scalar = !t || t->is_scalar() || t->kind == TypeKind::kAny;
    if (scalar) out.push_back(item);
  }
  return out;
}

}  // namespace

QueryPool::QueryPool(PoolLimits limits, const GraphSchema* schema)
    : limits_(limits), schema_(schema) {}

bool QueryPool::admit(const Query& query, bool non_empty) {
  if (!non_empty) return false;
  if (query.length() < limits_.min_length || query.length() > limits_.max_length) {
    return false;
  }
  if (schema_ && !validate_semantics(query, *schema_).ok()) return false;
  if (limits_.capacity == 0) return false;
  if (queries_.size() >= limits_.capacity) queries_.pop_front();
  queries_.push_back(query);
  return true;
}

bool pool_admit(QueryPool& pool, const Query& query,
                std::span<const ExecOutcome> outcomes) {
  bool non_empty = false;
  for (const auto& o : outcomes) non_empty = non_empty || o.non_empty();
  return pool.admit(query, non_empty);
}

const char* to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::kDelayReturn: return "delay_return";
    case Strategy::kAdvanceReturn: return "advance_return";
    case Strategy::kRemoveCondition: return "remove_condition";
  }
  return "?";
}

Query advance_return(const Query& query, const GraphSchema& schema, Rng& rng) {
  struct Candidate {
    std::size_t index;
    std::vector<ReturnItem> items;
  };
  std::vector<Candidate> candidates;
  ClauseContext ctx;
  for (std::size_t i = 0; i < query.clauses.size(); ++i) {
    const Clause& clause = query.clauses[i];
    if (const auto* w = std::get_if<WithClause>(&clause); w && !w->items.star) {
      auto items = scalar_items(w->items, ctx, schema);
      if (!items.empty()) candidates.push_back({i, std::move(items)});
    }
    try {
      ctx = calculate_new_context(clause, ctx, schema);
    } catch (const ScopeError&) {
      break;
    }
  }
  if (candidates.empty()) {
    throw StrategyInapplicable("advance_return: no WITH with a scalar item");
  }
  const Candidate& chosen = rng.pick(candidates);
  Query out;
  out.clauses.assign(query.clauses.begin(),
                     query.clauses.begin() + static_cast<std::ptrdiff_t>(chosen.index));
  ReturnClause ret;
  ret.items.items = chosen.items;
  out.clauses.emplace_back(std::move(ret));
  return out;
}

Query remove_condition(const Query& query, Rng& rng) {
  std::vector<std::size_t> sites;
  for (std::size_t i = 0; i < query.clauses.size(); ++i) {
    const Clause& c = query.clauses[i];
    if (const auto* m = std::get_if<MatchClause>(&c); m && m->where) sites.push_back(i);
    if (const auto* w = std::get_if<WithClause>(&c); w && w->where) sites.push_back(i);
  }
  if (sites.empty()) throw StrategyInapplicable("remove_condition: no WHERE");
  const std::size_t k = std::min<std::size_t>(sites.size(), 62);
  const auto mask = static_cast<std::uint64_t>(
      rng.uniform_int(1, static_cast<std::int64_t>((std::uint64_t{1} << k) - 1)));
  Query out = query;
  for (std::size_t b = 0; b < k; ++b) {
    if (!(mask & (std::uint64_t{1} << b))) continue;
    Clause& c = out.clauses[sites[b]];
    if (auto* m = std::get_if<MatchClause>(&c)) m->where = nullptr;
    if (auto* w = std::get_if<WithClause>(&c)) w->where = nullptr;
  }
  return out;
}

Mutator::Mutator(const Completer& completer, std::size_t max_length,
                 EngineCaps caps)
    : completer_(completer), max_length_(max_length), caps_(caps) {}

Query Mutator::delay_return(const Query& query, const FrequencyList& freq,
                            Rng& rng) const {
  if (query.clauses.empty() ||
      !std::holds_alternative<ReturnClause>(query.clauses.back())) {
    throw StrategyInapplicable("delay_return: query does not end in RETURN");
  }
  if (query.length() >= max_length_) {
    throw StrategyInapplicable("delay_return: query is already max length");
  }
  Query prefix = query;
  const auto& ret = std::get<ReturnClause>(prefix.clauses.back());
  WithClause with;
  with.items = ret.items;
  int alias = next_alias_index(query);
  for (auto& item : with.items.items) {
    if (!item.alias && item.expr->op != ExprOp::kVariable) {
      item.alias = "a" + std::to_string(alias++);
    }
  }
  prefix.clauses.back() = std::move(with);

  const auto room = static_cast<std::int64_t>(max_length_ - query.length());
  static constexpr ClauseKind kKinds[] = {ClauseKind::kMatch,
                                          ClauseKind::kOptionalMatch,
                                          ClauseKind::kWith, ClauseKind::kUnwind};
  const Skeleton head = skeleton_of(prefix);
  for (int attempt = 0; attempt < kSkeletonRetryCap; ++attempt) {
    const auto m = rng.uniform_int(1, room);
    std::vector<SkeletonClause> tail;
    for (std::int64_t i = 0; i + 1 < m; ++i) {
      SkeletonClause c;
      c.kind = kKinds[rng.index(std::size(kKinds))];
      if (c.kind != ClauseKind::kUnwind) c.has_where = rng.chance(0.5);
      tail.push_back(c);
    }
    tail.push_back({ClauseKind::kReturn, false});
    Skeleton whole = head;
    whole.clauses.insert(whole.clauses.end(), tail.begin(), tail.end());
    if (!caps_.permits(whole)) continue;
    return completer_.extend(prefix, tail, freq, rng);
  }
  throw StrategyInapplicable("delay_return: no permitted extension");
}

Query Mutator::apply(Strategy strategy, const Query& query,
                     const FrequencyList& freq, Rng& rng) const {
  switch (strategy) {
    case Strategy::kDelayReturn: return delay_return(query, freq, rng);
    case Strategy::kAdvanceReturn:
      return advance_return(query, completer_.schema(), rng);
    case Strategy::kRemoveCondition: return remove_condition(query, rng);
  }
  throw StrategyInapplicable("unknown strategy");
}

Mutation Mutator::mutate(const QueryPool& pool, const FrequencyList& freq,
                         Rng& rng) const {
  if (pool.empty()) throw PoolEmptyError();
  static constexpr Strategy kStrategies[] = {
      Strategy::kDelayReturn, Strategy::kAdvanceReturn, Strategy::kRemoveCondition};
  for (int pick = 0; pick < kSourceDraws; ++pick) {
    const std::size_t source = rng.index(pool.size());
    const Query& query = pool.at(source);
    for (int draw = 0; draw < kStrategyDraws; ++draw) {
      const Strategy s = kStrategies[rng.index(3)];
      try {
        return {apply(s, query, freq, rng), s, source};
      } catch (const StrategyInapplicable&) {
      } catch (const CompletionError&) {
      }
    }
  }
  throw StrategyInapplicable("no applicable mutation in the pool");
}

}  // namespace cypherdiff
