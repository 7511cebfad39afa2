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

#ifndef CYPHERDIFF_EXEC_REFERENCE_H_
#define CYPHERDIFF_EXEC_REFERENCE_H_

#include <chrono>
#include <cstddef>
#include <optional>

#include "cypherdiff/ast.h"
#include "cypherdiff/exec/outcome.h"
#include "cypherdiff/graph.h"

namespace cypherdiff {

// Deliberate defects, for exercising the differential oracle.
struct FaultSet {
  // An aggregate projection without grouping keys over zero input rows
  // yields no row instead of one.
  bool count_over_empty_drops_row = false;
  // OPTIONAL MATCH ... WHERE drops input rows that had a surviving match.
  bool optional_where_drops_matched = false;

  bool any() const {
    return count_over_empty_drops_row || optional_where_drops_matched;
  }
  bool operator==(const FaultSet&) const = default;
};

struct EvalOptions {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  // Intermediate tables beyond this size end evaluation with a timeout.
  std::size_t max_rows = 2'000'000;
  FaultSet faults;
};

// Evaluates the query over the graph. Never throws: failures are outcomes.
ExecOutcome reference_eval(const PropertyGraph& graph, const Query& query,
                           const EvalOptions& options = {});

// Total order used by ORDER BY (ascending; nulls last).
int order_compare(const Value& a, const Value& b);

// Three-valued equality; nullopt when either side is null.
std::optional<bool> cypher_equal(const Value& a, const Value& b);

}  // namespace cypherdiff

#endif  // CYPHERDIFF_EXEC_REFERENCE_H_
