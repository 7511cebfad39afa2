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

#include <vector>

#include "cypherdiff/completion.h"
#include "cypherdiff/errors.h"
#include "cypherdiff/frequency.h"
#include "cypherdiff/graph_gen.h"
#include "cypherdiff/parser.h"
#include "cypherdiff/render.h"
#include "cypherdiff/rng.h"
#include "cypherdiff/skeleton.h"

namespace cypherdiff {
namespace {

void BM_GenerateGraph(benchmark::State& state) {
  GenLimits limits = GenLimits::desk_mutation();
  limits.node_count = static_cast<int>(state.range(0));
  limits.relationship_count = static_cast<int>(state.range(0));
  Rng rng(1);
  GraphSchema schema = generate_schema(rng, limits);
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_graph(rng, schema, limits));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 2);
}
BENCHMARK(BM_GenerateGraph)->Arg(10)->Arg(100)->Arg(1000);

void BM_GenerateQuery(benchmark::State& state) {
  const int clauses = static_cast<int>(state.range(0));
  GenLimits limits = GenLimits::desk_small();
  Rng rng(2);
  GraphSchema schema = generate_schema(rng, limits);
  CompletionOptions options;
  options.literals = limits;
  Completer completer(schema, options);
  FrequencyList freq(schema);
  std::int64_t failures = 0;
  for (auto _ : state) {
    Skeleton sk = generate_skeleton(rng, clauses, EngineCaps{});
    try {
      benchmark::DoNotOptimize(completer.fill_skeleton(sk, freq, rng));
    } catch (const CompletionError&) {
      ++failures;
    }
  }
  state.counters["failures"] = static_cast<double>(failures);
}
BENCHMARK(BM_GenerateQuery)->DenseRange(2, 6, 2);

void BM_RenderParse(benchmark::State& state) {
  GenLimits limits = GenLimits::desk_small();
  Rng rng(3);
  GraphSchema schema = generate_schema(rng, limits);
  Completer completer(schema);
  FrequencyList freq(schema);
  std::vector<Query> queries;
  while (queries.size() < 64) {
    try {
      queries.push_back(completer.fill_skeleton(
          generate_skeleton(rng, 4, EngineCaps{}), freq, rng));
    } catch (const CompletionError&) {
    }
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_query(render(queries[i++ % queries.size()])));
  }
}
BENCHMARK(BM_RenderParse);

}  // namespace
}  // namespace cypherdiff
