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

#include "cypherdiff/reducer.h"

#include "cypherdiff/semantics.h"

namespace cypherdiff {
namespace {

// Operands a predicate can be replaced by.
std::vector<ExprPtr> weaker(const ExprPtr& e) {
  if (is_connective(e->op) || e->op == ExprOp::kNot) return e->args;
  return {};
}

ReturnList* items_of(Clause& c) {
  if (auto* w = std::get_if<WithClause>(&c)) return &w->items;
  if (auto* r = std::get_if<ReturnClause>(&c)) return &r->items;
  return nullptr;
}

ExprPtr* where_of(Clause& c) {
  if (auto* m = std::get_if<MatchClause>(&c)) return &m->where;
  if (auto* w = std::get_if<WithClause>(&c)) return &w->where;
  return nullptr;
}

}  // namespace

std::vector<Query> reduction_candidates(const Query& query) {
  std::vector<Query> out;
  const std::size_t n = query.clauses.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Query q = query;
    q.clauses.erase(q.clauses.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(std::move(q));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Query base = query;
    ExprPtr* where = where_of(base.clauses[i]);
    if (!where || !*where) continue;
    const ExprPtr original = *where;
    *where = nullptr;
    out.push_back(base);
    for (const ExprPtr& w : weaker(original)) {
      *where_of(base.clauses[i]) = w;
      out.push_back(base);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Query probe = query;
    ReturnList* items = items_of(probe.clauses[i]);
    if (!items || items->star || items->items.size() < 2) continue;
    for (std::size_t k = 0; k < items->items.size(); ++k) {
      Query q = query;
      auto& list = items_of(q.clauses[i])->items;
      list.erase(list.begin() + static_cast<std::ptrdiff_t>(k));
      out.push_back(std::move(q));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto* m = std::get_if<MatchClause>(&query.clauses[i]);
    if (!m) continue;
    for (std::size_t p = 0; p < m->patterns.size(); ++p) {
      auto edit = [&](auto&& fn) {
        Query q = query;
        fn(std::get<MatchClause>(q.clauses[i]));
        out.push_back(std::move(q));
      };
      if (m->patterns.size() > 1) {
        edit([&](MatchClause& c) { c.patterns.erase(c.patterns.begin() + static_cast<std::ptrdiff_t>(p)); });
      }
      const Pattern& pat = m->patterns[p];
      if (!pat.rels.empty()) {
        edit([&](MatchClause& c) {
          c.patterns[p].nodes.pop_back();
          c.patterns[p].rels.pop_back();
        });
        edit([&](MatchClause& c) {
          c.patterns[p].nodes.erase(c.patterns[p].nodes.begin());
          c.patterns[p].rels.erase(c.patterns[p].rels.begin());
        });
      }
      for (std::size_t k = 0; k < pat.nodes.size(); ++k) {
        if (!pat.nodes[k].labels.empty()) {
          edit([&](MatchClause& c) { c.patterns[p].nodes[k].labels.pop_back(); });
        }
        if (!pat.nodes[k].properties.empty()) {
          edit([&](MatchClause& c) { c.patterns[p].nodes[k].properties.clear(); });
        }
      }
      for (std::size_t k = 0; k < pat.rels.size(); ++k) {
        if (!pat.rels[k].types.empty()) {
          edit([&](MatchClause& c) { c.patterns[p].rels[k].types.pop_back(); });
        }
        if (!pat.rels[k].properties.empty()) {
          edit([&](MatchClause& c) { c.patterns[p].rels[k].properties.clear(); });
        }
      }
    }
  }
  if (n > 0) {
    if (const auto* r = std::get_if<ReturnClause>(&query.clauses.back())) {
      auto edit = [&](auto&& fn) {
        Query q = query;
        fn(std::get<ReturnClause>(q.clauses.back()));
        out.push_back(std::move(q));
      };
      if (r->skip) edit([](ReturnClause& c) { c.skip.reset(); });
      if (r->limit) edit([](ReturnClause& c) { c.limit.reset(); });
      // ORDER BY stays while SKIP or LIMIT needs it for determinism.
      if (!r->order_by.empty() && !r->skip && !r->limit) {
        edit([](ReturnClause& c) { c.order_by.clear(); });
      }
    }
  }
  return out;
}

Query reduce_query(const Query& query, const GraphSchema& schema,
                   const std::function<bool(const Query&)>& still_fails) {
  Query current = query;
  bool progress = true;
  while (progress) {
    progress = false;
    for (Query& candidate : reduction_candidates(current)) {
      if (!validate_semantics(candidate, schema).ok()) continue;
      if (!still_fails(candidate)) continue;
      current = std::move(candidate);
      progress = true;
      break;
    }
  }
  return current;
}

}  // namespace cypherdiff
