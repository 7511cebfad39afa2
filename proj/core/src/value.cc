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

#include "cypherdiff/value.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cypherdiff {

const char* to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::kNull: return "null";
    case ValueKind::kBoolean: return "boolean";
    case ValueKind::kInteger: return "integer";
    case ValueKind::kFloat: return "float";
    case ValueKind::kText: return "text";
    case ValueKind::kList: return "list";
    case ValueKind::kNode: return "node";
    case ValueKind::kRelationship: return "relationship";
  }
  return "?";
}

double Value::as_number() const {
  if (kind() == ValueKind::kInteger) return static_cast<double>(as_int());
  return as_float();
}

std::int64_t Value::entity_id() const {
  if (kind() == ValueKind::kNode) return std::get<NodeRef>(data_).id;
  return std::get<RelRef>(data_).id;
}

std::string format_float_literal(double d) {
  if (!std::isfinite(d)) throw std::invalid_argument("non-finite float literal");
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), d,
                                 std::chars_format::fixed);
  if (ec != std::errc()) throw std::runtime_error("float formatting failed");
  std::string out(buf, end);
  if (out.find('.') == std::string::npos) out += ".0";
  return out;
}

std::string format_float_17(double d) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", d);
  std::string out(buf);
  if (out.find_first_of(".eEn") == std::string::npos) out += ".0";
  return out;
}

namespace {

std::string quote_text(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'' || c == '\\') out += '\\';
    out += c;
  }
  out += '\'';
  return out;
}

}  // namespace

std::string Value::to_cypher() const {
  switch (kind()) {
    case ValueKind::kNull: return "null";
    case ValueKind::kBoolean: return as_bool() ? "true" : "false";
    case ValueKind::kInteger: return std::to_string(as_int());
    case ValueKind::kFloat: return format_float_literal(as_float());
    case ValueKind::kText: return quote_text(as_text());
    case ValueKind::kList: {
      std::string out = "[";
      const auto& items = as_list();
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ", ";
        out += items[i].to_cypher();
      }
      return out + "]";
    }
    case ValueKind::kNode:
      return "<node " + std::to_string(entity_id()) + ">";
    case ValueKind::kRelationship:
      return "<relationship " + std::to_string(entity_id()) + ">";
  }
  return "";
}

}  // namespace cypherdiff
