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

#ifndef CYPHERDIFF_GRAPH_GEN_H_
#define CYPHERDIFF_GRAPH_GEN_H_

#include <cstdint>
#include <string>
#include <vector>

#include "cypherdiff/graph.h"
#include "cypherdiff/rng.h"

namespace cypherdiff {

struct GenLimits {
  int max_labels = 3;
  int max_rel_types = 3;
  int max_keys_per_entity = 3;
  int node_count = 5;
  int relationship_count = 5;
  std::int64_t int_min = -100;
  std::int64_t int_max = 100;
  double float_min = -100.0;
  double float_max = 100.0;
  std::string text_alphabet = "abcdefghijklmnopqrstuvwxyz";
  int text_max_len = 8;

  // Throws ConfigError describing the first violated bound.
  void validate() const;

  // At most 10 entities, for non-empty-rate runs.
  static GenLimits desk_small();
  // At least 20 entities, for graph-mutation-score runs.
  static GenLimits desk_mutation();
};

struct IndexSpec {
  std::string target;  // label or relationship type name
  bool on_relationship = false;
  std::string key;
  bool operator==(const IndexSpec&) const = default;
};

struct EntityRef {
  bool is_relationship = false;
  std::int64_t id = 0;
  bool operator==(const EntityRef&) const = default;
  auto operator<=>(const EntityRef&) const = default;
};

// A copy of a base graph with exactly one stored property removed.
struct GraphMutant {
  EntityRef entity;
  std::string key;
  Value removed_value;
  PropertyGraph graph;
};

GraphSchema generate_schema(Rng& rng, const GenLimits& limits);
PropertyGraph generate_graph(Rng& rng, const GraphSchema& schema,
                             const GenLimits& limits);
std::vector<IndexSpec> generate_indexes(Rng& rng, const GraphSchema& schema,
                                        int count);
std::vector<GraphMutant> generate_graph_mutants(const PropertyGraph& graph,
                                                int count, Rng& rng);

bool index_is_valid(const IndexSpec& index, const GraphSchema& schema);

// Random property value of the given kind within the limits' ranges.
Value random_property_value(Rng& rng, PropertyKind kind, const GenLimits& limits);

}  // namespace cypherdiff

#endif  // CYPHERDIFF_GRAPH_GEN_H_
