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

#include "cypherdiff/metrics.h"

#include <algorithm>

#include "cypherdiff/errors.h"
#include "cypherdiff/oracle.h"
#include "json.hpp"

namespace cypherdiff {

double semantic_validity_rate(std::span<const CorpusEntry> corpus) {
  if (corpus.empty()) throw UndefinedMetric("semantic validity rate of an empty corpus");
  const auto valid = std::count_if(corpus.begin(), corpus.end(), [](const CorpusEntry& e) {
    return std::none_of(e.outcomes.begin(), e.outcomes.end(), [](const ExecOutcome& o) {
      return o.kind == OutcomeKind::kSemanticRejection;
    });
  });
  return static_cast<double>(valid) / static_cast<double>(corpus.size());
}

Coverage grammar_coverage(std::span<const Query> corpus) {
  if (corpus.empty()) throw UndefinedMetric("grammar coverage of an empty corpus");
  Coverage c;
  for (const auto& q : corpus) {
    const ProductionSet p = productions_covered(q);
    c.productions.insert(p.begin(), p.end());
  }
  c.covered = c.productions.size();
  c.registry_size = production_count();
  c.fraction = static_cast<double>(c.covered) / static_cast<double>(c.registry_size);
  return c;
}

std::vector<double> coverage_curve(std::span<const Query> corpus) {
  std::vector<double> curve;
  ProductionSet seen;
  const double total = static_cast<double>(production_count());
  for (const auto& q : corpus) {
    const ProductionSet p = productions_covered(q);
    seen.insert(p.begin(), p.end());
    curve.push_back(static_cast<double>(seen.size()) / total);
  }
  return curve;
}

NonEmptyRate non_empty_rate(std::span<const CorpusEntry> corpus) {
  NonEmptyRate r;
  std::map<std::size_t, std::size_t> hits;
  std::size_t total_hits = 0;
  for (const auto& e : corpus) {
    const bool non_empty = std::any_of(e.outcomes.begin(), e.outcomes.end(),
                                       [](const ExecOutcome& o) { return o.non_empty(); });
    ++r.counts[e.query.length()];
    if (non_empty) {
      ++hits[e.query.length()];
      ++total_hits;
    }
  }
  for (const auto& [len, n] : r.counts) {
    r.by_length[len] = static_cast<double>(hits[len]) / static_cast<double>(n);
  }
  if (!corpus.empty()) {
    r.overall = static_cast<double>(total_hits) / static_cast<double>(corpus.size());
  }
  return r;
}

namespace {

bool same_outcome(const ExecOutcome& a, const ExecOutcome& b) {
  if (a.kind != b.kind) return false;
  return !a.ok() || result_set_equal(a.result, b.result);
}

}  // namespace

std::set<std::size_t> kill_set(const Query& query, const ExecOutcome& base_outcome,
                               std::span<const GraphMutant> mutants,
                               const Evaluator& evaluator) {
  std::set<std::size_t> killed;
  for (std::size_t i = 0; i < mutants.size(); ++i) {
    if (!same_outcome(base_outcome, evaluator(mutants[i].graph, query))) killed.insert(i);
  }
  return killed;
}

std::size_t count_distinct_kill_sets(std::span<const std::set<std::size_t>> kill_sets) {
  std::set<std::set<std::size_t>> distinct;
  for (const auto& k : kill_sets) {
    if (!k.empty()) distinct.insert(k);
  }
  return distinct.size();
}

std::size_t graph_mutation_score(std::span<const Query> queries, const PropertyGraph& base,
                                 std::span<const GraphMutant> mutants,
                                 const Evaluator& evaluator) {
  std::vector<std::set<std::size_t>> sets;
  sets.reserve(queries.size());
  for (const auto& q : queries) sets.push_back(kill_set(q, evaluator(base, q), mutants, evaluator));
  return count_distinct_kill_sets(sets);
}

MetricsReport compute_metrics(std::span<const CorpusEntry> corpus) {
  MetricsReport m;
  m.queries = corpus.size();
  m.non_empty = non_empty_rate(corpus);
  if (!corpus.empty()) {
    m.semantic_validity_rate = semantic_validity_rate(corpus);
    std::vector<Query> queries;
    queries.reserve(corpus.size());
    for (const auto& e : corpus) queries.push_back(e.query);
    m.grammar_coverage = grammar_coverage(queries);
  }
  return m;
}

void MetricsAccumulator::add(const Query& query, std::span<const ExecOutcome> outcomes) {
  ++queries_;
  if (std::none_of(outcomes.begin(), outcomes.end(), [](const ExecOutcome& o) {
        return o.kind == OutcomeKind::kSemanticRejection;
      })) {
    ++valid_;
  }
  const ProductionSet p = productions_covered(query);
  productions_.insert(p.begin(), p.end());
  ++counts_[query.length()];
  if (std::any_of(outcomes.begin(), outcomes.end(), [](const ExecOutcome& o) { return o.non_empty(); })) {
    ++hits_[query.length()];
    ++non_empty_;
  }
}

void MetricsAccumulator::add_mutation_score(std::size_t score) {
  mutation_score_ = mutation_score_.value_or(0) + score;
}

MetricsReport MetricsAccumulator::report() const {
  MetricsReport m;
  m.queries = queries_;
  m.graph_mutation_score = mutation_score_;
  m.non_empty.counts = counts_;
  for (const auto& [len, n] : counts_) {
    const auto it = hits_.find(len);
    m.non_empty.by_length[len] =
        static_cast<double>(it == hits_.end() ? 0 : it->second) / static_cast<double>(n);
  }
  if (queries_ > 0) {
    const auto total = static_cast<double>(queries_);
    m.non_empty.overall = static_cast<double>(non_empty_) / total;
    m.semantic_validity_rate = static_cast<double>(valid_) / total;
    Coverage c;
    c.productions = productions_;
    c.covered = productions_.size();
    c.registry_size = production_count();
    c.fraction = static_cast<double>(c.covered) / static_cast<double>(c.registry_size);
    m.grammar_coverage = std::move(c);
  }
  return m;
}

std::string to_json(const MetricsReport& report) {
  nlohmann::ordered_json j;
  j["queries"] = report.queries;
  j["semantic_validity_rate"] = report.semantic_validity_rate
                                    ? nlohmann::ordered_json(*report.semantic_validity_rate)
                                    : nlohmann::ordered_json();
  if (report.grammar_coverage) {
    const Coverage& c = *report.grammar_coverage;
    nlohmann::ordered_json uncovered = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < production_count(); ++i) {
      const auto p = static_cast<Production>(i);
      if (!c.productions.contains(p)) uncovered.push_back(std::string(production_name(p)));
    }
    j["grammar_coverage"] = {{"fraction", c.fraction},
                             {"covered", c.covered},
                             {"registry_size", c.registry_size},
                             {"registry_version", kProductionRegistryVersion},
                             {"uncovered", uncovered}};
  } else {
    j["grammar_coverage"] = nullptr;
  }
  nlohmann::ordered_json by_length = nlohmann::ordered_json::object();
  for (const auto& [len, rate] : report.non_empty.by_length) {
    by_length[std::to_string(len)] = {{"rate", rate}, {"queries", report.non_empty.counts.at(len)}};
  }
  j["non_empty_rate"] = {{"overall", report.non_empty.overall}, {"by_length", by_length}};
  j["graph_mutation_score"] = report.graph_mutation_score
                                  ? nlohmann::ordered_json(*report.graph_mutation_score)
                                  : nlohmann::ordered_json();
  return j.dump(2) + "\n";
}

}  // namespace cypherdiff
