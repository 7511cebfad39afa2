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

#ifndef CYPHERDIFF_MUTATION_H_
#define CYPHERDIFF_MUTATION_H_

#include <cstddef>
#include <deque>
#include <span>

#include "cypherdiff/ast.h"
#include "cypherdiff/completion.h"
#include "cypherdiff/exec/outcome.h"
#include "cypherdiff/frequency.h"
#include "cypherdiff/graph.h"
#include "cypherdiff/rng.h"
#include "cypherdiff/skeleton.h"

namespace cypherdiff {

struct PoolLimits {
  std::size_t capacity = 256;
  std::size_t min_length = 3;
  std::size_t max_length = 6;
};

// Queries that returned rows, oldest first. Evicts the oldest at capacity.
class QueryPool {
 public:
  // With a schema, admission also requires semantic validity.
  explicit QueryPool(PoolLimits limits = {}, const GraphSchema* schema = nullptr);

  bool admit(const Query& query, bool non_empty);
  void clear() { queries_.clear(); }

  std::size_t size() const { return queries_.size(); }
  bool empty() const { return queries_.empty(); }
  const Query& at(std::size_t i) const { return queries_.at(i); }
  const PoolLimits& limits() const { return limits_; }

 private:
  PoolLimits limits_;
  const GraphSchema* schema_;
  std::deque<Query> queries_;
};

// Admits when some target returned at least one row.
bool pool_admit(QueryPool& pool, const Query& query,
                std::span<const ExecOutcome> outcomes);

enum class Strategy { kDelayReturn, kAdvanceReturn, kRemoveCondition };

const char* to_string(Strategy strategy);

struct Mutation {
  Query query;
  Strategy strategy;
  std::size_t source = 0;  // pool index of the mutated query
};

// Converts one uniformly chosen WITH into the final RETURN and drops every
// later clause. Only scalar items survive; the WITH's WHERE is dropped.
// Throws StrategyInapplicable when no WITH keeps a scalar item.
Query advance_return(const Query& query, const GraphSchema& schema, Rng& rng);

// Drops a non-empty random subset of the WHERE sub-clauses. Throws
// StrategyInapplicable when there are none.
Query remove_condition(const Query& query, Rng& rng);

class Mutator {
 public:
  Mutator(const Completer& completer, std::size_t max_length,
          EngineCaps caps = {});

  // Turns the final RETURN into a WITH and completes 1..(max_length - length)
  // new clauses ending in RETURN. Throws StrategyInapplicable when the query
  // is already max_length long.
  Query delay_return(const Query& query, const FrequencyList& freq,
                     Rng& rng) const;

  // One strategy, drawn uniformly and redrawn while inapplicable, on a
  // uniformly chosen pool entry. Throws PoolEmptyError on an empty pool and
  // StrategyInapplicable when nothing applies after repeated draws.
  Mutation mutate(const QueryPool& pool, const FrequencyList& freq,
                  Rng& rng) const;

  Query apply(Strategy strategy, const Query& query, const FrequencyList& freq,
              Rng& rng) const;

 private:
  const Completer& completer_;
  std::size_t max_length_;
  EngineCaps caps_;
};

}  // namespace cypherdiff

#endif  // CYPHERDIFF_MUTATION_H_
