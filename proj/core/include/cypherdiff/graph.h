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

#ifndef CYPHERDIFF_GRAPH_H_
#define CYPHERDIFF_GRAPH_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cypherdiff/value.h"

namespace cypherdiff {

// Kinds a stored property may take. Lists and null exist only at the
// expression level.
enum class PropertyKind { kInteger, kFloat, kText, kBoolean };

const char* to_string(PropertyKind kind);
std::optional<PropertyKind> property_kind_from_string(const std::string& name);
ValueKind to_value_kind(PropertyKind kind);

struct PropertyKeyDef {
  std::string name;
  PropertyKind kind = PropertyKind::kInteger;
  bool operator==(const PropertyKeyDef&) const = default;
};

struct LabelDef {
  std::string name;
  std::vector<std::string> keys;
  bool operator==(const LabelDef&) const = default;
};

struct LabelPair {
  std::string source;
  std::string target;
  bool operator==(const LabelPair&) const = default;
};

struct RelTypeDef {
  std::string name;
  std::vector<LabelPair> pairs;
  std::vector<std::string> keys;
  bool operator==(const RelTypeDef&) const = default;
};

// Labels, relationship types and typed property keys. Each key belongs to
// exactly one label or relationship type.
struct GraphSchema {
  std::vector<LabelDef> labels;
  std::vector<RelTypeDef> rel_types;
  std::vector<PropertyKeyDef> keys;

  const PropertyKeyDef* find_key(const std::string& name) const;
  const LabelDef* find_label(const std::string& name) const;
  const RelTypeDef* find_rel_type(const std::string& name) const;

  // Keys declared by any label (resp. relationship type), in declaration order.
  std::vector<std::string> node_keys() const;
  std::vector<std::string> relationship_keys() const;

  // Keys declared by the given labels; all node keys when `labels` is empty.
  std::vector<std::string> keys_for_labels(
      const std::vector<std::string>& labels) const;
  std::vector<std::string> keys_for_types(
      const std::vector<std::string>& types) const;

  bool operator==(const GraphSchema&) const = default;
};

struct Node {
  std::int64_t id = 0;
  std::vector<std::string> labels;
  std::map<std::string, Value> properties;

  bool has_label(const std::string& label) const;
  bool operator==(const Node&) const = default;
};

struct Relationship {
  std::int64_t id = 0;
  std::string type;
  std::int64_t source = 0;
  std::int64_t target = 0;
  std::map<std::string, Value> properties;

  bool operator==(const Relationship&) const = default;
};

struct PropertyGraph {
  GraphSchema schema;
  std::vector<Node> nodes;
  std::vector<Relationship> relationships;

  std::size_t property_count() const;
  bool operator==(const PropertyGraph&) const = default;
};

struct Violation {
  std::string kind;    // e.g. "dangling endpoint", "unknown property key"
  std::string entity;  // e.g. "node 3", "relationship 0", "label L1"
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(const std::string& kind) const;
};

ValidationReport validate_schema(const GraphSchema& schema);
ValidationReport validate_graph(const PropertyGraph& graph);

}  // namespace cypherdiff

#endif  // CYPHERDIFF_GRAPH_H_
