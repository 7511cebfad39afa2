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

#include "cypherdiff/exec/resp.h"

#include <cstdlib>

namespace cypherdiff {
namespace resp {
namespace {

std::string read_line(TcpConnection& conn, Deadline deadline) {
  std::string line;
  while (true) {
    const char c = static_cast<char>(conn.read_byte(deadline));
    if (c == '\r') {
      if (conn.read_byte(deadline) != '\n') throw RespError("expected LF after CR");
      return line;
    }
    line.push_back(c);
  }
}

std::int64_t parse_int(const std::string& s) {
  char* end = nullptr;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (s.empty() || *end != '\0') throw RespError("bad integer '" + s + "'");
  return v;
}

}  // namespace

std::string encode_command(const std::vector<std::string>& args) {
  std::string out = "*" + std::to_string(args.size()) + "\r\n";
  for (const auto& a : args) {
    out += "$" + std::to_string(a.size()) + "\r\n" + a + "\r\n";
  }
  return out;
}

std::string encode(const RespValue& value) {
  switch (value.type) {
    case RespValue::Type::kSimple: return "+" + value.str + "\r\n";
    case RespValue::Type::kError: return "-" + value.str + "\r\n";
    case RespValue::Type::kInteger: return ":" + std::to_string(value.integer) + "\r\n";
    case RespValue::Type::kBulk:
      return "$" + std::to_string(value.str.size()) + "\r\n" + value.str + "\r\n";
    case RespValue::Type::kNil: return "$-1\r\n";
    case RespValue::Type::kArray: {
      std::string out = "*" + std::to_string(value.array.size()) + "\r\n";
      for (const auto& v : value.array) out += encode(v);
      return out;
    }
  }
  return {};
}

RespValue read_reply(TcpConnection& conn, Deadline deadline) {
  const char marker = static_cast<char>(conn.read_byte(deadline));
  const std::string line = read_line(conn, deadline);
  switch (marker) {
    case '+': return RespValue::simple(line);
    case '-': return RespValue::error(line);
    case ':': return RespValue::of_int(parse_int(line));
    case '$': {
      const std::int64_t n = parse_int(line);
      if (n < 0) return RespValue::nil();
      const auto body = conn.read_exact(static_cast<std::size_t>(n) + 2, deadline);
      return RespValue::bulk(std::string(body.begin(), body.end() - 2));
    }
    case '*': {
      const std::int64_t n = parse_int(line);
      if (n < 0) return RespValue::nil();
      std::vector<RespValue> items;
      items.reserve(static_cast<std::size_t>(n));
      for (std::int64_t i = 0; i < n; ++i) items.push_back(read_reply(conn, deadline));
      return RespValue::of_array(std::move(items));
    }
    default:
      throw RespError(std::string("unknown RESP marker '") + marker + "'");
  }
}

}  // namespace resp

void RespClient::connect(const std::string& host, std::uint16_t port, Deadline deadline) {
  conn_ = TcpConnection::connect(host, port, deadline);
}

RespValue RespClient::command(const std::vector<std::string>& args, Deadline deadline) {
  if (!conn_.is_open()) throw ConnectionError("not connected");
  conn_.write_all(resp::encode_command(args), deadline);
  return resp::read_reply(conn_, deadline);
}

namespace {

enum CompactType : std::int64_t {
  kNull = 1, kString = 2, kInteger = 3, kBoolean = 4, kDouble = 5,
  kArray = 6, kEdge = 7, kNode = 8,
};

const std::vector<RespValue>& as_array(const RespValue& v, const char* what) {
  if (v.type != RespValue::Type::kArray) throw RespError(std::string("expected array for ") + what);
  return v.array;
}

std::int64_t as_int(const RespValue& v, const char* what) {
  if (v.type != RespValue::Type::kInteger) throw RespError(std::string("expected integer for ") + what);
  return v.integer;
}

// Entity id from the loader's property, else the engine id.
std::int64_t entity_id(std::int64_t engine_id, const RespValue& props,
                       const std::vector<std::string>& keys) {
  for (const auto& p : as_array(props, "properties")) {
    const auto& triple = as_array(p, "property");
    if (triple.size() != 3) throw RespError("bad property triple");
    const std::int64_t key = as_int(triple[0], "property key");
    if (key >= 0 && static_cast<std::size_t>(key) < keys.size() &&
        keys[static_cast<std::size_t>(key)] == kEntityIdKey &&
        as_int(triple[1], "property type") == kInteger) {
      return as_int(triple[2], "id");
    }
  }
  return engine_id;
}

Value decode(std::int64_t type, const RespValue& v, const std::vector<std::string>& keys) {
  switch (type) {
    case kNull: return Value::null();
    case kString: return Value::text(v.str);
    case kInteger: return Value::integer(as_int(v, "integer"));
    case kBoolean:
      if (v.str == "true") return Value::boolean(true);
      if (v.str == "false") return Value::boolean(false);
      throw RespError("bad boolean '" + v.str + "'");
    case kDouble: {
      char* end = nullptr;
      const double d = std::strtod(v.str.c_str(), &end);
      if (v.str.empty() || *end != '\0') throw RespError("bad double '" + v.str + "'");
      return Value::floating(d);
    }
    case kArray: {
      ValueList items;
      for (const auto& cell : as_array(v, "list")) {
        const auto& pair = as_array(cell, "list element");
        if (pair.size() != 2) throw RespError("bad list element");
        items.push_back(decode(as_int(pair[0], "type"), pair[1], keys));
      }
      return Value::list(std::move(items));
    }
    case kEdge: {
      const auto& f = as_array(v, "edge");
      if (f.size() != 5) throw RespError("bad edge");
      return Value::relationship(entity_id(as_int(f[0], "edge id"), f[4], keys));
    }
    case kNode: {
      const auto& f = as_array(v, "node");
      if (f.size() != 3) throw RespError("bad node");
      return Value::node(entity_id(as_int(f[0], "node id"), f[2], keys));
    }
    default:
      throw RespError("unsupported compact type " + std::to_string(type));
  }
}

}  // namespace

GraphReply parse_compact_reply(const RespValue& reply,
                               const std::vector<std::string>& property_keys) {
  GraphReply out;
  if (reply.is_error()) {
    out.error = reply.str;
    return out;
  }
  const auto& parts = as_array(reply, "reply");
  for (const auto& p : parts) {
    if (p.is_error()) {
      out.error = p.str;
      return out;
    }
  }
  if (parts.size() == 1) return out;  // statistics only
  if (parts.size() != 3) throw RespError("unexpected reply arity");
  for (const auto& h : as_array(parts[0], "header")) {
    if (h.type == RespValue::Type::kArray && h.array.size() == 2) {
      out.result.columns.push_back(h.array[1].str);
    } else {
      out.result.columns.push_back(h.str);
    }
  }
  for (const auto& r : as_array(parts[1], "rows")) {
    Row row;
    for (const auto& cell : as_array(r, "row")) {
      const auto& pair = as_array(cell, "cell");
      if (pair.size() != 2) throw RespError("bad cell");
      row.push_back(decode(as_int(pair[0], "type"), pair[1], property_keys));
    }
    if (row.size() != out.result.columns.size()) throw RespError("row arity mismatch");
    out.result.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace cypherdiff
