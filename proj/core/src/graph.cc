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

#include "cypherdiff/graph.h"

#include <algorithm>
#include <set>

namespace cypherdiff {

const char* to_string(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::kInteger: return "INTEGER";
    case PropertyKind::kFloat: return "FLOAT";
    case PropertyKind::kText: return "STRING";
    case PropertyKind::kBoolean: return "BOOLEAN";
  }
  return "?";
}

std::optional<PropertyKind> property_kind_from_string(const std::string& name) {
  if (name == "INTEGER") return PropertyKind::kInteger;
  if (name == "FLOAT") return PropertyKind::kFloat;
  if (name == "STRING") return PropertyKind::kText;
  if (name == "BOOLEAN") return PropertyKind::kBoolean;
  return std::nullopt;
}

ValueKind to_value_kind(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::kInteger: return ValueKind::kInteger;
    case PropertyKind::kFloat: return ValueKind::kFloat;
    case PropertyKind::kText: return ValueKind::kText;
    case PropertyKind::kBoolean: return ValueKind::kBoolean;
  }
  return ValueKind::kNull;
}

const PropertyKeyDef* GraphSchema::find_key(const std::string& name) const {
  for (const auto& key : keys) {
    if (key.name == name) return &key;
  }
  return nullptr;
}

const LabelDef* GraphSchema::find_label(const std::string& name) const {
  for (const auto& label : labels) {
    if (label.name == name) return &label;
  }
  return nullptr;
}

const RelTypeDef* GraphSchema::find_rel_type(const std::string& name) const {
  for (const auto& type : rel_types) {
    if (type.name == name) return &type;
  }
  return nullptr;
}

std::vector<std::string> GraphSchema::node_keys() const {
  std::vector<std::string> out;
  for (const auto& label : labels) {
    out.insert(out.end(), label.keys.begin(), label.keys.end());
  }
  return out;
}

std::vector<std::string> GraphSchema::relationship_keys() const {
  std::vector<std::string> out;
  for (const auto& type : rel_types) {
    out.insert(out.end(), type.keys.begin(), type.keys.end());
  }
  return out;
}

std::vector<std::string> GraphSchema::keys_for_labels(
    const std::vector<std::string>& wanted) const {
  if (wanted.empty()) return node_keys();
  std::vector<std::string> out;
  for (const auto& label : labels) {
    if (std::find(wanted.begin(), wanted.end(), label.name) == wanted.end()) {
      continue;
    }
    out.insert(out.end(), label.keys.begin(), label.keys.end());
  }
  return out;
}

std::vector<std::string> GraphSchema::keys_for_types(
    const std::vector<std::string>& wanted) const {
  if (wanted.empty()) return relationship_keys();
  std::vector<std::string> out;
  for (const auto& type : rel_types) {
    if (std::find(wanted.begin(), wanted.end(), type.name) == wanted.end()) {
      continue;
    }
    out.insert(out.end(), type.keys.begin(), type.keys.end());
  }
  return out;
}

bool Node::has_label(const std::string& label) const {
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

std::size_t PropertyGraph::property_count() const {
  std::size_t total = 0;
  for (const auto& node : nodes) total += node.properties.size();
  for (const auto& rel : relationships) total += rel.properties.size();
  return total;
}

bool ValidationReport::has(const std::string& kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

namespace {

bool is_stored_kind(const Value& value, PropertyKind kind) {
  return value.kind() == to_value_kind(kind);
}

void check_properties(const GraphSchema& schema,
                      const std::map<std::string, Value>& properties,
                      const std::vector<std::string>& allowed,
                      const std::string& entity, ValidationReport& report) {
  for (const auto& [key, value] : properties) {
    const PropertyKeyDef* def = schema.find_key(key);
    if (def == nullptr ||
        std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      report.violations.push_back({"unknown property key", entity, key});
      continue;
    }
    if (!is_stored_kind(value, def->kind)) {
      report.violations.push_back(
          {"property kind mismatch", entity,
           key + " expects " + to_string(def->kind) + ", got " +
               to_string(value.kind())});
    }
  }
}

}  // namespace

ValidationReport validate_schema(const GraphSchema& schema) {
  ValidationReport report;
  std::set<std::string> seen;
  for (const auto& label : schema.labels) {
    if (!seen.insert(label.name).second) {
      report.violations.push_back({"duplicate label", "label " + label.name, ""});
    }
  }
  seen.clear();
  for (const auto& type : schema.rel_types) {
    if (!seen.insert(type.name).second) {
      report.violations.push_back(
          {"duplicate relationship type", "type " + type.name, ""});
    }
    for (const auto& pair : type.pairs) {
      if (!schema.find_label(pair.source) || !schema.find_label(pair.target)) {
        report.violations.push_back({"unknown label in applicable pair",
                                     "type " + type.name,
                                     pair.source + "->" + pair.target});
      }
    }
  }
  seen.clear();
  for (const auto& key : schema.keys) {
    if (!seen.insert(key.name).second) {
      report.violations.push_back({"duplicate property key", "key " + key.name, ""});
    }
  }
  // Every declared key is owned by exactly one entity kind.
  std::map<std::string, int> owners;
  auto own = [&](const std::vector<std::string>& keys, const std::string& who) {
    for (const auto& key : keys) {
      if (!schema.find_key(key)) {
        report.violations.push_back({"undeclared property key", who, key});
      }
      if (++owners[key] > 1) {
        report.violations.push_back({"shared property key", who, key});
      }
    }
  };
  for (const auto& label : schema.labels) own(label.keys, "label " + label.name);
  for (const auto& type : schema.rel_types) own(type.keys, "type " + type.name);
  return report;
}

ValidationReport validate_graph(const PropertyGraph& graph) {
  ValidationReport report = validate_schema(graph.schema);
  const GraphSchema& schema = graph.schema;

  std::map<std::int64_t, const Node*> nodes;
  for (const auto& node : graph.nodes) {
    const std::string entity = "node " + std::to_string(node.id);
    if (node.id < 0 || !nodes.emplace(node.id, &node).second) {
      report.violations.push_back({"duplicate node id", entity, ""});
    }
    std::set<std::string> labels;
    for (const auto& label : node.labels) {
      if (!labels.insert(label).second) {
        report.violations.push_back({"duplicate node label", entity, label});
      }
      if (!schema.find_label(label)) {
        report.violations.push_back({"unknown label", entity, label});
      }
    }
    // Unlabeled nodes carry no properties: every key must come from a label.
    std::vector<std::string> allowed;
    if (!node.labels.empty()) allowed = schema.keys_for_labels(node.labels);
    check_properties(schema, node.properties, allowed, entity, report);
  }

  std::set<std::int64_t> rel_ids;
  for (const auto& rel : graph.relationships) {
    const std::string entity = "relationship " + std::to_string(rel.id);
    if (rel.id < 0 || !rel_ids.insert(rel.id).second) {
      report.violations.push_back({"duplicate relationship id", entity, ""});
    }
    const RelTypeDef* type = schema.find_rel_type(rel.type);
    if (type == nullptr) {
      report.violations.push_back({"unknown relationship type", entity, rel.type});
    }
    auto source = nodes.find(rel.source);
    auto target = nodes.find(rel.target);
    if (source == nodes.end() || target == nodes.end()) {
      report.violations.push_back(
          {"dangling endpoint", entity,
           std::to_string(rel.source) + "->" + std::to_string(rel.target)});
    } else if (type != nullptr && !source->second->labels.empty() &&
               !target->second->labels.empty()) {
      bool respected = false;
      for (const auto& pair : type->pairs) {
        if (source->second->has_label(pair.source) &&
            target->second->has_label(pair.target)) {
          respected = true;
          break;
        }
      }
      if (!respected) {
        report.violations.push_back({"label pair violation", entity, rel.type});
      }
    }
    std::vector<std::string> allowed;
    if (type != nullptr) allowed = type->keys;
    check_properties(schema, rel.properties, allowed, entity, report);
  }
  return report;
}

}  // namespace cypherdiff
