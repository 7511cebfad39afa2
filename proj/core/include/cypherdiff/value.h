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

#ifndef CYPHERDIFF_VALUE_H_
#define CYPHERDIFF_VALUE_H_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace cypherdiff {

enum class ValueKind {
  kNull,
  kBoolean,
  kInteger,
  kFloat,
  kText,
  kList,
  kNode,
  kRelationship,
};

const char* to_string(ValueKind kind);

// Reference to a graph entity by its dense internal id. Only the reference
// executor and result sets carry these; rendered Cypher never does.
struct NodeRef {
  std::int64_t id = 0;
  bool operator==(const NodeRef&) const = default;
};

struct RelRef {
  std::int64_t id = 0;
  bool operator==(const RelRef&) const = default;
};

class Value;
using ValueList = std::vector<Value>;

class Value {
 public:
  Value() = default;

  static Value null() { return Value(); }
  static Value boolean(bool b) { return Value(Storage(b)); }
  static Value integer(std::int64_t i) { return Value(Storage(i)); }
  static Value floating(double d) { return Value(Storage(d)); }
  static Value text(std::string s) { return Value(Storage(std::move(s))); }
  static Value list(ValueList items) { return Value(Storage(std::move(items))); }
  static Value node(std::int64_t id) { return Value(Storage(NodeRef{id})); }
  static Value relationship(std::int64_t id) {
    return Value(Storage(RelRef{id}));
  }

  ValueKind kind() const { return static_cast<ValueKind>(data_.index()); }
  bool is_null() const { return kind() == ValueKind::kNull; }
  bool is_number() const {
    return kind() == ValueKind::kInteger || kind() == ValueKind::kFloat;
  }

  bool as_bool() const { return std::get<bool>(data_); }
  std::int64_t as_int() const { return std::get<std::int64_t>(data_); }
  double as_float() const { return std::get<double>(data_); }
  // Integer or float widened to double.
  double as_number() const;
  const std::string& as_text() const { return std::get<std::string>(data_); }
  const ValueList& as_list() const { return std::get<ValueList>(data_); }
  std::int64_t entity_id() const;

  // Structural identity: null equals null and floats compare bitwise-equal
  // values. Query-level equality lives in the executor.
  bool operator==(const Value& other) const { return data_ == other.data_; }

  // Cypher literal text, e.g. 'abc', -3, 1.5, true, [1, 2].
  std::string to_cypher() const;

 private:
  using Storage = std::variant<std::monostate, bool, std::int64_t, double,
                               std::string, ValueList, NodeRef, RelRef>;
  explicit Value(Storage data) : data_(std::move(data)) {}

  Storage data_;
};

// Shortest round-trip decimal text for a float, always containing a '.'.
std::string format_float_literal(double d);

// 17 significant digits, always distinguishable from an integer.
std::string format_float_17(double d);

}  // namespace cypherdiff

#endif  // CYPHERDIFF_VALUE_H_
