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

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

#include "cypherdiff/completion.h"
#include "cypherdiff/errors.h"
#include "cypherdiff/exec/reference.h"
#include "cypherdiff/frequency.h"
#include "cypherdiff/graph_gen.h"
#include "cypherdiff/oracle.h"
#include "cypherdiff/rng.h"
#include "cypherdiff/skeleton.h"

namespace cypherdiff {
namespace {

struct Workload {
  PropertyGraph graph;
  std::vector<Query> queries;
};

Workload make_workload(int clauses, int entities) {
  GenLimits limits = GenLimits::desk_mutation();
  limits.node_count = entities;
  limits.relationship_count = entities;
  Rng rng(7);
  GraphSchema schema = generate_schema(rng, limits);
  Workload w{generate_graph(rng, schema, limits), {}};
  CompletionOptions options;
  options.literals = limits;
  options.expected_nodes = entities;
  options.expected_relationships = entities;
  Completer completer(schema, options);
  FrequencyList freq(schema);
  while (w.queries.size() < 32) {
    try {
      w.queries.push_back(completer.fill_skeleton(
          generate_skeleton(rng, clauses, EngineCaps{}), freq, rng));
    } catch (const CompletionError&) {
    }
  }
  return w;
}

void BM_ReferenceEval(benchmark::State& state) {
  Workload w = make_workload(static_cast<int>(state.range(0)),
                             static_cast<int>(state.range(1)));
  std::size_t i = 0;
  std::int64_t rows = 0;
  for (auto _ : state) {
    ExecOutcome out = reference_eval(w.graph, w.queries[i++ % w.queries.size()]);
    rows += static_cast<std::int64_t>(out.result.rows.size());
    benchmark::DoNotOptimize(out);
  }
  state.counters["rows/query"] =
      benchmark::Counter(static_cast<double>(rows) /
                         static_cast<double>(state.iterations()));
}
BENCHMARK(BM_ReferenceEval)->Args({2, 10})->Args({4, 10})->Args({4, 30})->Args({6, 30});

void BM_CompareOutcomes(benchmark::State& state) {
  ResultSet rs;
  rs.columns = {"a", "b"};
  Rng rng(11);
  for (std::int64_t r = 0; r < state.range(0); ++r) {
    rs.rows.push_back({Value::integer(rng.uniform_int(0, 100)),
                       Value::floating(rng.uniform_real())});
  }
  ResultSet shuffled = rs;
  std::shuffle(shuffled.rows.begin(), shuffled.rows.end(), std::mt19937_64(5));
  std::vector<ExecOutcome> outcomes = {ExecOutcome::success(rs),
                                       ExecOutcome::success(shuffled)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(compare(outcomes));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CompareOutcomes)->Range(8, 8 << 10);

}  // namespace
}  // namespace cypherdiff
