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

#include "cypherdiff/graph_gen.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "cypherdiff/errors.h"

namespace cypherdiff {

void GenLimits::validate() const {
  if (max_labels < 0 || max_rel_types < 0 || max_keys_per_entity < 0 ||
      node_count < 0 || relationship_count < 0 || text_max_len < 0) {
    throw ConfigError("generation limits must be non-negative");
  }
  if (relationship_count > 0 && node_count < 1) {
    throw ConfigError("relationships require at least one node");
  }
  if (int_min > int_max) throw ConfigError("int range is empty");
  if (!(float_min <= float_max) || !std::isfinite(float_min) ||
      !std::isfinite(float_max)) {
    throw ConfigError("float range is empty or non-finite");
  }
  if (text_alphabet.empty() && text_max_len > 0) {
    throw ConfigError("text alphabet is empty");
  }
  for (char c : text_alphabet) {
    if (c == '\'' || c == '\\') {
      throw ConfigError("text alphabet may not contain quotes or backslashes");
    }
  }
}

GenLimits GenLimits::desk_small() { return GenLimits{}; }

GenLimits GenLimits::desk_mutation() {
  GenLimits limits;
  limits.node_count = 10;
  limits.relationship_count = 10;
  return limits;
}

Value random_property_value(Rng& rng, PropertyKind kind,
                            const GenLimits& limits) {
  switch (kind) {
    case PropertyKind::kInteger:
      return Value::integer(rng.uniform_int(limits.int_min, limits.int_max));
    case PropertyKind::kFloat: {
      // Two decimal places keep literals short and exactly re-parseable.
      const auto lo = static_cast<std::int64_t>(std::ceil(limits.float_min * 100));
      const auto hi = static_cast<std::int64_t>(std::floor(limits.float_max * 100));
      if (lo > hi) return Value::floating(limits.float_min);
      return Value::floating(static_cast<double>(rng.uniform_int(lo, hi)) / 100.0);
    }
    case PropertyKind::kText: {
      const auto len = rng.uniform_int(0, limits.text_max_len);
      std::string text;
      for (std::int64_t i = 0; i < len; ++i) {
        text += limits.text_alphabet[rng.index(limits.text_alphabet.size())];
      }
      return Value::text(std::move(text));
    }
    case PropertyKind::kBoolean:
      return Value::boolean(rng.chance(0.5));
  }
  return Value::null();
}

namespace {

PropertyKind random_kind(Rng& rng) {
  static constexpr PropertyKind kKinds[] = {
      PropertyKind::kInteger, PropertyKind::kFloat, PropertyKind::kText,
      PropertyKind::kBoolean};
  return kKinds[rng.index(4)];
}

std::vector<std::string> make_keys(Rng& rng, const GenLimits& limits,
                                   GraphSchema& schema) {
  std::vector<std::string> keys;
  if (limits.max_keys_per_entity == 0) return keys;
  const auto count = rng.uniform_int(1, limits.max_keys_per_entity);
  for (std::int64_t i = 0; i < count; ++i) {
    PropertyKeyDef def{"k" + std::to_string(schema.keys.size()), random_kind(rng)};
    keys.push_back(def.name);
    schema.keys.push_back(std::move(def));
  }
  return keys;
}

}  // namespace

GraphSchema generate_schema(Rng& rng, const GenLimits& limits) {
  limits.validate();
  GraphSchema schema;
  if (limits.max_labels > 0) {
    const auto label_count = rng.uniform_int(1, limits.max_labels);
    for (std::int64_t i = 0; i < label_count; ++i) {
      LabelDef label{"L" + std::to_string(i), {}};
      label.keys = make_keys(rng, limits, schema);
      schema.labels.push_back(std::move(label));
    }
  }
  if (limits.max_rel_types > 0 && !schema.labels.empty()) {
    const auto type_count = rng.uniform_int(1, limits.max_rel_types);
    const auto n = static_cast<std::int64_t>(schema.labels.size());
    for (std::int64_t i = 0; i < type_count; ++i) {
      RelTypeDef type{"T" + std::to_string(i), {}, {}};
      const auto pair_count = rng.uniform_int(1, std::min<std::int64_t>(3, n * n));
      std::set<std::pair<std::int64_t, std::int64_t>> chosen;
      while (static_cast<std::int64_t>(chosen.size()) < pair_count) {
        chosen.emplace(rng.uniform_int(0, n - 1), rng.uniform_int(0, n - 1));
      }
      for (const auto& [s, t] : chosen) {
        type.pairs.push_back({schema.labels[s].name, schema.labels[t].name});
      }
      type.keys = make_keys(rng, limits, schema);
      schema.rel_types.push_back(std::move(type));
    }
  }
  return schema;
}

PropertyGraph generate_graph(Rng& rng, const GraphSchema& schema,
                             const GenLimits& limits) {
  limits.validate();
  PropertyGraph graph;
  graph.schema = schema;

  // Mostly single-labeled; some unlabeled and some double-labeled nodes.
  const auto node_count = static_cast<std::size_t>(limits.node_count);
  std::vector<std::set<std::size_t>> label_sets(node_count);
  if (!schema.labels.empty()) {
    for (auto& picked : label_sets) {
      const double roll = rng.uniform_real();
      std::size_t wanted = roll < 0.1 ? 0 : (roll < 0.85 ? 1 : 2);
      wanted = std::min(wanted, schema.labels.size());
      while (picked.size() < wanted) picked.insert(rng.index(schema.labels.size()));
    }
    // Every label on some node when there are enough nodes.
    if (node_count >= schema.labels.size()) {
      for (std::size_t l = 0; l < schema.labels.size(); ++l) {
        const bool used = std::any_of(label_sets.begin(), label_sets.end(),
                                      [&](const auto& set) { return set.contains(l); });
        if (!used) label_sets[rng.index(node_count)].insert(l);
      }
    }
  }

  for (std::size_t i = 0; i < node_count; ++i) {
    Node node;
    node.id = static_cast<std::int64_t>(i);
    for (std::size_t index : label_sets[i]) {
      const LabelDef& label = schema.labels[index];
      node.labels.push_back(label.name);
      for (const auto& key : label.keys) {
        if (!rng.chance(0.9)) continue;
        node.properties[key] =
            random_property_value(rng, schema.find_key(key)->kind, limits);
      }
    }
    graph.nodes.push_back(std::move(node));
  }

  if (limits.relationship_count == 0) return graph;

  // (type, pair) combinations with at least one node on each side.
  struct Option {
    const RelTypeDef* type;
    std::vector<std::int64_t> sources;
    std::vector<std::int64_t> targets;
  };
  std::vector<std::vector<Option>> options_by_type;
  std::vector<const RelTypeDef*> usable;
  for (const auto& type : schema.rel_types) {
    std::vector<Option> options;
    for (const auto& pair : type.pairs) {
      Option option{&type, {}, {}};
      for (const auto& node : graph.nodes) {
        if (node.has_label(pair.source)) option.sources.push_back(node.id);
        if (node.has_label(pair.target)) option.targets.push_back(node.id);
      }
      if (!option.sources.empty() && !option.targets.empty()) {
        options.push_back(std::move(option));
      }
    }
    if (!options.empty()) {
      usable.push_back(&type);
      options_by_type.push_back(std::move(options));
    }
  }
  if (usable.empty()) {
    throw GenerationError(
        schema.rel_types.empty()
            ? std::string("no relationship types to instantiate")
            : "no applicable label pair instantiable for relationship type " +
                  schema.rel_types.front().name);
  }

  for (int i = 0; i < limits.relationship_count; ++i) {
    const std::size_t t = rng.index(usable.size());
    const Option& option = rng.pick(options_by_type[t]);
    Relationship rel;
    rel.id = i;
    rel.type = option.type->name;
    rel.source = rng.pick(option.sources);
    rel.target = rng.pick(option.targets);
    for (const auto& key : option.type->keys) {
      if (!rng.chance(0.9)) continue;
      rel.properties[key] =
          random_property_value(rng, schema.find_key(key)->kind, limits);
    }
    graph.relationships.push_back(std::move(rel));
  }
  return graph;
}

bool index_is_valid(const IndexSpec& index, const GraphSchema& schema) {
  const std::vector<std::string>* keys = nullptr;
  if (index.on_relationship) {
    if (const auto* type = schema.find_rel_type(index.target)) keys = &type->keys;
  } else {
    if (const auto* label = schema.find_label(index.target)) keys = &label->keys;
  }
  return keys != nullptr &&
         std::find(keys->begin(), keys->end(), index.key) != keys->end();
}

std::vector<IndexSpec> generate_indexes(Rng& rng, const GraphSchema& schema,
                                        int count) {
  std::vector<IndexSpec> candidates;
  for (const auto& label : schema.labels) {
    for (const auto& key : label.keys) candidates.push_back({label.name, false, key});
  }
  std::vector<IndexSpec> out;
  const auto wanted =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(count, 0)),
                            candidates.size());
  // Partial Fisher-Yates.
  for (std::size_t i = 0; i < wanted; ++i) {
    const std::size_t j = i + rng.index(candidates.size() - i);
    std::swap(candidates[i], candidates[j]);
    out.push_back(candidates[i]);
  }
  return out;
}

std::vector<GraphMutant> generate_graph_mutants(const PropertyGraph& graph,
                                                int count, Rng& rng) {
  struct Site {
    EntityRef entity;
    std::string key;
  };
  std::vector<Site> sites;
  for (const auto& node : graph.nodes) {
    for (const auto& [key, value] : node.properties) {
      sites.push_back({{false, node.id}, key});
    }
  }
  for (const auto& rel : graph.relationships) {
    for (const auto& [key, value] : rel.properties) {
      sites.push_back({{true, rel.id}, key});
    }
  }
  const auto wanted = std::min<std::size_t>(
      static_cast<std::size_t>(std::max(count, 0)), sites.size());
  std::vector<GraphMutant> out;
  for (std::size_t i = 0; i < wanted; ++i) {
    const std::size_t j = i + rng.index(sites.size() - i);
    std::swap(sites[i], sites[j]);
    const Site& site = sites[i];

    GraphMutant mutant{site.entity, site.key, Value::null(), graph};
    auto& properties =
        site.entity.is_relationship
            ? std::find_if(mutant.graph.relationships.begin(),
                           mutant.graph.relationships.end(),
                           [&](const Relationship& r) { return r.id == site.entity.id; })
                  ->properties
            : std::find_if(mutant.graph.nodes.begin(), mutant.graph.nodes.end(),
                           [&](const Node& n) { return n.id == site.entity.id; })
                  ->properties;
    mutant.removed_value = properties.at(site.key);
    properties.erase(site.key);
    out.push_back(std::move(mutant));
  }
  return out;
}

}  // namespace cypherdiff
