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

#ifndef CYPHERDIFF_TYPES_H_
#define CYPHERDIFF_TYPES_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cypherdiff/ast.h"
#include "cypherdiff/graph.h"

namespace cypherdiff {

enum class TypeKind {
  kNode,
  kRelationship,
  kInteger,
  kFloat,
  kText,
  kBoolean,
  kList,
  kAny,  // null literal, empty list element
};

const char* to_string(TypeKind kind);

struct TypeInfo {
  TypeKind kind = TypeKind::kAny;
  TypeKind element = TypeKind::kAny;  // kList only
  // kNode: labels the node is known to carry.
  std::vector<std::string> labels;
  // kRelationship: the relationship has one of these types; empty = unknown.
  std::vector<std::string> rel_types;
  // Value derives from an aggregate over floats; such values are not
  // aggregated again.
  bool float_aggregate = false;

  static TypeInfo of(TypeKind kind) {
    TypeInfo t;
    t.kind = kind;
    return t;
  }
  static TypeInfo list_of(TypeKind element) {
    TypeInfo t;
    t.kind = TypeKind::kList;
    t.element = element;
    return t;
  }

  bool is_entity() const {
    return kind == TypeKind::kNode || kind == TypeKind::kRelationship;
  }
  bool is_numeric() const {
    return kind == TypeKind::kInteger || kind == TypeKind::kFloat;
  }
  bool is_scalar() const {
    return kind == TypeKind::kInteger || kind == TypeKind::kFloat ||
           kind == TypeKind::kText || kind == TypeKind::kBoolean;
  }
  bool operator==(const TypeInfo&) const = default;
};

TypeKind type_kind_of(PropertyKind kind);
TypeKind type_kind_of(ValueKind kind);

// Variables visible to the next clause, with their types. Label and type
// constraints ("facts") live on the entity entries.
struct ClauseContext {
  std::map<std::string, TypeInfo> local_env;

  const TypeInfo* find(const std::string& name) const;
  bool has(const std::string& name) const { return find(name) != nullptr; }
  std::vector<std::string> variables() const;
  // e.g. "label(user)==[User]", "type(r1)==[FRIEND]".
  std::vector<std::string> facts() const;
};

// Keys a property access on a variable of this type may use.
std::vector<std::string> accessible_keys(const TypeInfo& type,
                                         const GraphSchema& schema);

// Context after the clause. Throws ScopeError if the clause reads a variable
// that is not in ctx.
ClauseContext calculate_new_context(const Clause& clause,
                                    const ClauseContext& ctx,
                                    const GraphSchema& schema);

}  // namespace cypherdiff

#endif  // CYPHERDIFF_TYPES_H_
