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

#include "cypherdiff/scripts.h"

#include <algorithm>
#include <map>
#include <sstream>

#include "cypherdiff/errors.h"
#include "cypherdiff/exec/outcome.h"
#include "cypherdiff/parser.h"
#include "cypherdiff/render.h"

namespace cypherdiff {

std::string index_statement(const IndexSpec& index, Dialect dialect, int ordinal) {
  const std::string& t = index.target;
  const std::string& k = index.key;
  switch (dialect) {
    case Dialect::kNeo4j: {
      const std::string name = "cd_idx" + std::to_string(ordinal);
      if (index.on_relationship) {
        return "CREATE INDEX " + name + " IF NOT EXISTS FOR ()-[r:" + t + "]-() ON (r." + k + ")";
      }
      return "CREATE INDEX " + name + " IF NOT EXISTS FOR (n:" + t + ") ON (n." + k + ")";
    }
    case Dialect::kMemgraph:
      return std::string(index.on_relationship ? "CREATE EDGE INDEX ON :" : "CREATE INDEX ON :") +
             t + "(" + k + ")";
    case Dialect::kGeneric:
    case Dialect::kRedisGraph:
      if (index.on_relationship) {
        return "CREATE INDEX FOR ()-[r:" + t + "]-() ON (r." + k + ")";
      }
      return "CREATE INDEX FOR (n:" + t + ") ON (n." + k + ")";
  }
  return {};
}

std::string schema_script(const GraphSchema& schema,
                          const std::vector<IndexSpec>& indexes) {
  std::ostringstream out;
  for (const auto& key : schema.keys) {
    out << "// key " << key.name << ' ' << to_string(key.kind) << '\n';
  }
  for (const auto& label : schema.labels) {
    out << "// label " << label.name;
    for (const auto& k : label.keys) out << ' ' << k;
    out << '\n';
  }
  for (const auto& type : schema.rel_types) {
    out << "// reltype " << type.name << " pairs=";
    for (std::size_t i = 0; i < type.pairs.size(); ++i) {
      if (i) out << ',';
      out << type.pairs[i].source << "->" << type.pairs[i].target;
    }
    for (const auto& k : type.keys) out << ' ' << k;
    out << '\n';
  }
  for (const auto& index : indexes) {
    out << index_statement(index, Dialect::kGeneric) << ";\n";
  }
  return out.str();
}

namespace {

PropertyMap with_id(const std::map<std::string, Value>& props, bool entity_ids,
                    std::int64_t id) {
  PropertyMap out(props.begin(), props.end());
  if (entity_ids) out.emplace_back(kEntityIdKey, Value::integer(id));
  return out;
}

std::vector<std::string> split(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

std::string graph_script(const PropertyGraph& graph, bool entity_ids) {
  if (graph.nodes.empty()) return "// empty graph\n";
  std::vector<std::string> parts;
  for (const auto& node : graph.nodes) {
    std::string s = "(n" + std::to_string(node.id);
    for (const auto& l : node.labels) s += ":" + l;
    const PropertyMap props = with_id(node.properties, entity_ids, node.id);
    if (!props.empty()) s += " " + render_property_map(props);
    parts.push_back(s + ")");
  }
  for (const auto& rel : graph.relationships) {
    std::string s = "(n" + std::to_string(rel.source) + ")-[:" + rel.type;
    const PropertyMap props = with_id(rel.properties, entity_ids, rel.id);
    if (!props.empty()) s += " " + render_property_map(props);
    parts.push_back(s + "]->(n" + std::to_string(rel.target) + ")");
  }
  std::string out = "CREATE ";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  return out + ";\n";
}

SchemaScript parse_schema_script(std::string_view text) {
  SchemaScript out;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto fail = [&](const std::string& what) {
      throw ConfigError("schema script line " + std::to_string(line_no) + ": " + what);
    };
    const auto words = split(line);
    if (words.empty()) continue;
    if (words[0] == "//") {
      if (words.size() < 3) fail("truncated declaration");
      if (words[1] == "key") {
        if (words.size() != 4) fail("expected '// key NAME KIND'");
        const auto kind = property_kind_from_string(words[3]);
        if (!kind) fail("unknown property kind " + words[3]);
        out.schema.keys.push_back({words[2], *kind});
      } else if (words[1] == "label") {
        out.schema.labels.push_back({words[2], {words.begin() + 3, words.end()}});
      } else if (words[1] == "reltype") {
        if (words.size() < 4 || words[3].rfind("pairs=", 0) != 0) fail("missing pairs=");
        RelTypeDef type{words[2], {}, {words.begin() + 4, words.end()}};
        std::istringstream pairs(words[3].substr(6));
        for (std::string p; std::getline(pairs, p, ',');) {
          const auto arrow = p.find("->");
          if (arrow == std::string::npos) fail("bad pair " + p);
          type.pairs.push_back({p.substr(0, arrow), p.substr(arrow + 2)});
        }
        out.schema.rel_types.push_back(std::move(type));
      }
      continue;
    }
    // CREATE INDEX FOR (n:L) ON (n.k);  CREATE INDEX FOR ()-[r:T]-() ON (r.k);
    if (words.size() != 6 || words[0] != "CREATE" || words[1] != "INDEX" ||
        words[2] != "FOR" || words[4] != "ON") {
      fail("unrecognized statement");
    }
    IndexSpec index;
    const std::string& target = words[3];
    std::string name;
    if (target.rfind("(n:", 0) == 0 && target.back() == ')') {
      name = target.substr(3, target.size() - 4);
    } else if (target.rfind("()-[r:", 0) == 0 && target.size() > 10 &&
               target.substr(target.size() - 4) == "]-()") {
      index.on_relationship = true;
      name = target.substr(6, target.size() - 10);
    } else {
      fail("bad index target " + target);
    }
    index.target = name;
    std::string key = words[5];
    if (!key.empty() && key.back() == ';') key.pop_back();
    const std::string prefix = index.on_relationship ? "(r." : "(n.";
    if (key.rfind(prefix, 0) != 0 || key.back() != ')') fail("bad index key " + key);
    index.key = key.substr(3, key.size() - 4);
    out.indexes.push_back(std::move(index));
  }
  return out;
}

PropertyGraph parse_graph_script(std::string_view text, const GraphSchema& schema) {
  PropertyGraph graph;
  graph.schema = schema;
  // Strip comment-only scripts (the empty graph).
  bool has_statement = false;
  {
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
      const auto words = split(line);
      if (!words.empty() && words[0].rfind("//", 0) != 0) has_statement = true;
    }
  }
  if (!has_statement) return graph;

  std::vector<Pattern> patterns;
  try {
    patterns = parse_create_statement(text);
  } catch (const ParseError& e) {
    throw ConfigError(std::string("graph script: ") + e.what());
  }
  std::map<std::string, std::int64_t> ids;
  auto node_id = [&](const NodePattern& n) -> std::int64_t {
    if (!n.variable) throw ConfigError("graph script: anonymous node");
    auto it = ids.find(*n.variable);
    if (it == ids.end()) throw ConfigError("graph script: undefined node " + *n.variable);
    return it->second;
  };
  for (const auto& p : patterns) {
    if (p.rels.empty()) {
      const NodePattern& n = p.nodes.at(0);
      if (!n.variable || n.variable->size() < 2 || (*n.variable)[0] != 'n') {
        throw ConfigError("graph script: node variables must be n<id>");
      }
      Node node;
      try {
        node.id = std::stoll(n.variable->substr(1));
      } catch (const std::exception&) {
        throw ConfigError("graph script: bad node variable " + *n.variable);
      }
      if (!ids.emplace(*n.variable, node.id).second) {
        throw ConfigError("graph script: duplicate node " + *n.variable);
      }
      node.labels = n.labels;
      for (const auto& [k, v] : n.properties) node.properties[k] = v;
      graph.nodes.push_back(std::move(node));
      continue;
    }
    if (p.rels.size() != 1) throw ConfigError("graph script: relationship chains unsupported");
    const RelPattern& r = p.rels[0];
    if (r.types.size() != 1 || r.direction == Direction::kUndirected) {
      throw ConfigError("graph script: relationships need one type and a direction");
    }
    Relationship rel;
    rel.id = static_cast<std::int64_t>(graph.relationships.size());
    rel.type = r.types[0];
    rel.source = node_id(p.nodes[0]);
    rel.target = node_id(p.nodes[1]);
    if (r.direction == Direction::kLeft) std::swap(rel.source, rel.target);
    for (const auto& [k, v] : r.properties) rel.properties[k] = v;
    graph.relationships.push_back(std::move(rel));
  }
  std::sort(graph.nodes.begin(), graph.nodes.end(),
            [](const Node& a, const Node& b) { return a.id < b.id; });
  return graph;
}

}  // namespace cypherdiff
