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

#ifndef CYPHERDIFF_SCRIPTS_H_
#define CYPHERDIFF_SCRIPTS_H_

#include <string>
#include <string_view>
#include <vector>

#include "cypherdiff/graph.h"
#include "cypherdiff/graph_gen.h"

namespace cypherdiff {

enum class Dialect { kGeneric, kNeo4j, kMemgraph, kRedisGraph };

// One CREATE INDEX statement, without the trailing semicolon.
std::string index_statement(const IndexSpec& index, Dialect dialect, int ordinal = 0);

// Schema declarations as `//` comment lines followed by CREATE INDEX
// statements. Parsed back by parse_schema_script.
std::string schema_script(const GraphSchema& schema,
                          const std::vector<IndexSpec>& indexes);

// A single CREATE statement: all nodes, then all relationships. With
// `entity_ids`, every entity also carries its id under kEntityIdKey.
std::string graph_script(const PropertyGraph& graph, bool entity_ids = false);

struct SchemaScript {
  GraphSchema schema;
  std::vector<IndexSpec> indexes;
};

// Throws ConfigError on malformed input.
SchemaScript parse_schema_script(std::string_view text);
PropertyGraph parse_graph_script(std::string_view text, const GraphSchema& schema);

}  // namespace cypherdiff

#endif  // CYPHERDIFF_SCRIPTS_H_
