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

#ifndef CYPHERDIFF_COMPLETION_H_
#define CYPHERDIFF_COMPLETION_H_

#include <map>
#include <string>
#include <vector>

#include "cypherdiff/ast.h"
#include "cypherdiff/frequency.h"
#include "cypherdiff/graph.h"
#include "cypherdiff/graph_gen.h"
#include "cypherdiff/rng.h"
#include "cypherdiff/skeleton.h"
#include "cypherdiff/types.h"

namespace cypherdiff {

struct CompletionOptions {
  int max_depth = 3;
  int subtree_retries = 20;
  int clause_retries = 100;
  // Upper bound on the estimated intermediate row count of a query.
  double row_budget = 4000;
  // Graph size the estimates assume.
  double expected_nodes = 5;
  double expected_relationships = 5;
  // Literal value ranges; match the graph generator's so comparisons bite.
  GenLimits literals;
};

// Estimated rows produced per input row by a MATCH pattern.
double pattern_factor(const Pattern& pattern, const ClauseContext& ctx,
                      const CompletionOptions& options);

class Completer {
 public:
  explicit Completer(const GraphSchema& schema, CompletionOptions options = {});

  const CompletionOptions& options() const { return options_; }
  const GraphSchema& schema() const { return schema_; }

  // Throws CompletionError when no valid instantiation is found within the
  // retry budget.
  Query fill_skeleton(const Skeleton& skeleton, const FrequencyList& freq,
                      Rng& rng) const;

  // Completes `tail` (ending in RETURN) after `prefix`, whose clauses are all
  // non-RETURN. The prefix's end-of-query context is the initial context.
  Query extend(const Query& prefix, const std::vector<SkeletonClause>& tail,
               const FrequencyList& freq, Rng& rng) const;

  ExprPtr generate_expression(const TypeInfo& required, const ClauseContext& ctx,
                              const FrequencyList& freq, Rng& rng,
                              int max_depth) const;

  std::vector<Pattern> generate_pattern_tuple(const ClauseContext& ctx,
                                              const FrequencyList& freq,
                                              Rng& rng) const;

 private:
  const GraphSchema& schema_;
  CompletionOptions options_;
};

}  // namespace cypherdiff

#endif  // CYPHERDIFF_COMPLETION_H_
