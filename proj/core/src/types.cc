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

#include "cypherdiff/types.h"

namespace cypherdiff {

const char* to_string(TypeKind kind) {
  switch (kind) {
    case TypeKind::kNode: return "node";
    case TypeKind::kRelationship: return "relationship";
    case TypeKind::kInteger: return "integer";
    case TypeKind::kFloat: return "float";
    case TypeKind::kText: return "text";
    case TypeKind::kBoolean: return "boolean";
    case TypeKind::kList: return "list";
    case TypeKind::kAny: return "any";
  }
  return "?";
}

TypeKind type_kind_of(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::kInteger: return TypeKind::kInteger;
    case PropertyKind::kFloat: return TypeKind::kFloat;
    case PropertyKind::kText: return TypeKind::kText;
    case PropertyKind::kBoolean: return TypeKind::kBoolean;
  }
  return TypeKind::kAny;
}

TypeKind type_kind_of(ValueKind kind) {
  switch (kind) {
    case ValueKind::kBoolean: return TypeKind::kBoolean;
    case ValueKind::kInteger: return TypeKind::kInteger;
    case ValueKind::kFloat: return TypeKind::kFloat;
    case ValueKind::kText: return TypeKind::kText;
    case ValueKind::kList: return TypeKind::kList;
    case ValueKind::kNode: return TypeKind::kNode;
    case ValueKind::kRelationship: return TypeKind::kRelationship;
    case ValueKind::kNull: return TypeKind::kAny;
  }
  return TypeKind::kAny;
}

const TypeInfo* ClauseContext::find(const std::string& name) const {
  auto it = local_env.find(name);
  return it == local_env.end() ? nullptr : &it->second;
}

std::vector<std::string> ClauseContext::variables() const {
  std::vector<std::string> out;
  out.reserve(local_env.size());
  for (const auto& [name, type] : local_env) out.push_back(name);
  return out;
}

std::vector<std::string> ClauseContext::facts() const {
  auto join = [](const std::vector<std::string>& names) {
    std::string s = "[";
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) s += ", ";
      s += names[i];
    }
    return s + "]";
  };
  std::vector<std::string> out;
  for (const auto& [name, type] : local_env) {
    if (type.kind == TypeKind::kNode && !type.labels.empty()) {
      out.push_back("label(" + name + ")==" + join(type.labels));
    } else if (type.kind == TypeKind::kRelationship && !type.rel_types.empty()) {
      out.push_back("type(" + name + ")==" + join(type.rel_types));
    }
  }
  return out;
}

std::vector<std::string> accessible_keys(const TypeInfo& type,
                                         const GraphSchema& schema) {
  if (type.kind == TypeKind::kNode) return schema.keys_for_labels(type.labels);
  if (type.kind == TypeKind::kRelationship) {
    return schema.keys_for_types(type.rel_types);
  }
  return {};
}

}  // namespace cypherdiff
