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

#ifndef CYPHERDIFF_METRICS_H_
#define CYPHERDIFF_METRICS_H_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cypherdiff/ast.h"
#include "cypherdiff/exec/outcome.h"
#include "cypherdiff/graph.h"
#include "cypherdiff/graph_gen.h"
#include "cypherdiff/productions.h"

namespace cypherdiff {

// One executed query with an outcome per target.
struct CorpusEntry {
  Query query;
  std::vector<ExecOutcome> outcomes;
};

// Fraction of entries no target rejected. Throws UndefinedMetric when empty.
double semantic_validity_rate(std::span<const CorpusEntry> corpus);

struct Coverage {
  double fraction = 0;
  std::size_t covered = 0;
  std::size_t registry_size = 0;
  ProductionSet productions;
};

// Throws UndefinedMetric when empty.
Coverage grammar_coverage(std::span<const Query> corpus);
// Coverage fraction after each prefix of the corpus.
std::vector<double> coverage_curve(std::span<const Query> corpus);

struct NonEmptyRate {
  double overall = 0;
  std::map<std::size_t, double> by_length;
  std::map<std::size_t, std::size_t> counts;  // queries per length
};

// An entry counts as non-empty when any target returned a row.
NonEmptyRate non_empty_rate(std::span<const CorpusEntry> corpus);

using Evaluator = std::function<ExecOutcome(const PropertyGraph&, const Query&)>;

// Indexes of the mutants whose outcome for `query` differs from the base's.
std::set<std::size_t> kill_set(const Query& query, const ExecOutcome& base_outcome,
                               std::span<const GraphMutant> mutants,
                               const Evaluator& evaluator);

std::size_t count_distinct_kill_sets(std::span<const std::set<std::size_t>> kill_sets);

std::size_t graph_mutation_score(std::span<const Query> queries, const PropertyGraph& base,
                                 std::span<const GraphMutant> mutants,
                                 const Evaluator& evaluator);

struct MetricsReport {
  std::size_t queries = 0;
  std::optional<double> semantic_validity_rate;
  std::optional<Coverage> grammar_coverage;
  NonEmptyRate non_empty;
  std::optional<std::size_t> graph_mutation_score;
};

MetricsReport compute_metrics(std::span<const CorpusEntry> corpus);

// Streaming form of compute_metrics for long campaigns. Graph mutation
// scores of separate graphs add up.
class MetricsAccumulator {
 public:
  void add(const Query& query, std::span<const ExecOutcome> outcomes);
  void add_mutation_score(std::size_t score);
  MetricsReport report() const;

 private:
  std::size_t queries_ = 0;
  std::size_t valid_ = 0;
  std::size_t non_empty_ = 0;
  ProductionSet productions_;
  std::map<std::size_t, std::size_t> counts_;
  std::map<std::size_t, std::size_t> hits_;
  std::optional<std::size_t> mutation_score_;
};

// Stable JSON text, keys in fixed order.
std::string to_json(const MetricsReport& report);

}  // namespace cypherdiff

#endif  // CYPHERDIFF_METRICS_H_
