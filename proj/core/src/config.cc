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

#include "cypherdiff/config.h"

#include <fstream>
#include <sstream>

#include "cypherdiff/errors.h"
#include "cypherdiff/exec/target.h"
#include "json.hpp"

namespace cypherdiff {

void CampaignConfig::validate() const {
  if (targets.empty()) throw ConfigError("at least one target is required");
  for (const auto& t : targets) parse_target(t);
  if (num_generated < 0 || num_mutated < 0) throw ConfigError("query counts must be non-negative");
  if (num_generated + num_mutated < 1) throw ConfigError("num_generated + num_mutated must be at least 1");
  if (!(timeout_seconds > 0)) throw ConfigError("timeout_seconds must be positive");
  if (max_iterations && *max_iterations < 1) throw ConfigError("max_iterations must be at least 1");
  if (query_timeout_ms < 1) throw ConfigError("query_timeout_ms must be positive");
  limits.validate();
  if (min_len < 1 || max_len < min_len) throw ConfigError("length range must satisfy 1 <= min_len <= max_len");
  if (retention_min < 1 || retention_max < retention_min) {
    throw ConfigError("retention range must satisfy 1 <= retention_min <= retention_max");
  }
  if (pool_capacity < 1) throw ConfigError("pool_capacity must be positive");
  if (index_count < 0) throw ConfigError("index_count must be non-negative");
  if (graph_mutants < 0) throw ConfigError("graph_mutants must be non-negative");
  if (max_expression_depth < 1) throw ConfigError("max_expression_depth must be positive");
  if (output_dir.empty()) throw ConfigError("output_dir must not be empty");
}

namespace {

using nlohmann::json;

template <typename T>
void read(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("config key '") + key + "' has the wrong type");
  }
}

void reject_unknown(const json& j, std::initializer_list<const char*> known, const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ConfigError("unknown config key '" + where + key + "'");
  }
}

}  // namespace

CampaignConfig parse_config(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown(j,
                 {"targets", "num_generated", "num_mutated", "timeout_seconds", "seed",
                  "max_iterations", "query_timeout_ms", "limits", "min_len", "max_len",
                  "retention_min", "retention_max", "pool_capacity", "index_count",
                  "graph_mutants", "frequency_feedback", "stop_on_first_bug", "reduce",
                  "max_expression_depth", "output_dir"},
                 "");
  CampaignConfig c;
  read(j, "targets", c.targets);
  read(j, "num_generated", c.num_generated);
  read(j, "num_mutated", c.num_mutated);
  read(j, "timeout_seconds", c.timeout_seconds);
  read(j, "seed", c.seed);
  if (j.contains("max_iterations") && !j["max_iterations"].is_null()) {
    int n = 0;
    read(j, "max_iterations", n);
    c.max_iterations = n;
  }
  read(j, "query_timeout_ms", c.query_timeout_ms);
  read(j, "min_len", c.min_len);
  read(j, "max_len", c.max_len);
  read(j, "retention_min", c.retention_min);
  read(j, "retention_max", c.retention_max);
  read(j, "pool_capacity", c.pool_capacity);
  read(j, "index_count", c.index_count);
  read(j, "graph_mutants", c.graph_mutants);
  read(j, "frequency_feedback", c.frequency_feedback);
  read(j, "stop_on_first_bug", c.stop_on_first_bug);
  read(j, "reduce", c.reduce);
  read(j, "max_expression_depth", c.max_expression_depth);
  read(j, "output_dir", c.output_dir);
  if (j.contains("limits")) {
    const json& l = j["limits"];
    if (!l.is_object()) throw ConfigError("config key 'limits' must be an object");
    reject_unknown(l,
                   {"max_labels", "max_rel_types", "max_keys_per_entity", "node_count",
                    "relationship_count", "int_min", "int_max", "float_min", "float_max",
                    "text_alphabet", "text_max_len"},
                   "limits.");
    GenLimits& g = c.limits;
    read(l, "max_labels", g.max_labels);
    read(l, "max_rel_types", g.max_rel_types);
    read(l, "max_keys_per_entity", g.max_keys_per_entity);
    read(l, "node_count", g.node_count);
    read(l, "relationship_count", g.relationship_count);
    read(l, "int_min", g.int_min);
    read(l, "int_max", g.int_max);
    read(l, "float_min", g.float_min);
    read(l, "float_max", g.float_max);
    read(l, "text_alphabet", g.text_alphabet);
    read(l, "text_max_len", g.text_max_len);
  }
  c.validate();
  return c;
}

CampaignConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string to_json(const CampaignConfig& c) {
  nlohmann::ordered_json j;
  j["targets"] = c.targets;
  j["num_generated"] = c.num_generated;
  j["num_mutated"] = c.num_mutated;
  j["timeout_seconds"] = c.timeout_seconds;
  j["seed"] = c.seed;
  j["max_iterations"] = c.max_iterations ? nlohmann::ordered_json(*c.max_iterations)
                                         : nlohmann::ordered_json();
  j["query_timeout_ms"] = c.query_timeout_ms;
  const GenLimits& g = c.limits;
  j["limits"] = {{"max_labels", g.max_labels},
                 {"max_rel_types", g.max_rel_types},
                 {"max_keys_per_entity", g.max_keys_per_entity},
                 {"node_count", g.node_count},
                 {"relationship_count", g.relationship_count},
                 {"int_min", g.int_min},
                 {"int_max", g.int_max},
                 {"float_min", g.float_min},
                 {"float_max", g.float_max},
                 {"text_alphabet", g.text_alphabet},
                 {"text_max_len", g.text_max_len}};
  j["min_len"] = c.min_len;
  j["max_len"] = c.max_len;
  j["retention_min"] = c.retention_min;
  j["retention_max"] = c.retention_max;
  j["pool_capacity"] = c.pool_capacity;
  j["index_count"] = c.index_count;
  j["graph_mutants"] = c.graph_mutants;
  j["frequency_feedback"] = c.frequency_feedback;
  j["stop_on_first_bug"] = c.stop_on_first_bug;
  j["reduce"] = c.reduce;
  j["max_expression_depth"] = c.max_expression_depth;
  j["output_dir"] = c.output_dir;
  return j.dump(2) + "\n";
}

}  // namespace cypherdiff
