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

#ifndef CYPHERDIFF_EXEC_RESP_H_
#define CYPHERDIFF_EXEC_RESP_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cypherdiff/exec/outcome.h"
#include "cypherdiff/exec/socket.h"

namespace cypherdiff {

struct RespValue {
  enum class Type { kSimple, kError, kInteger, kBulk, kNil, kArray };

  Type type = Type::kNil;
  std::string str;
  std::int64_t integer = 0;
  std::vector<RespValue> array;

  static RespValue simple(std::string s) { return {Type::kSimple, std::move(s), 0, {}}; }
  static RespValue error(std::string s) { return {Type::kError, std::move(s), 0, {}}; }
  static RespValue bulk(std::string s) { return {Type::kBulk, std::move(s), 0, {}}; }
  static RespValue of_int(std::int64_t i) { return {Type::kInteger, {}, i, {}}; }
  static RespValue nil() { return {}; }
  static RespValue of_array(std::vector<RespValue> items) {
    return {Type::kArray, {}, 0, std::move(items)};
  }

  bool is_error() const { return type == Type::kError; }
  bool operator==(const RespValue&) const = default;
};

class RespError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace resp {
std::string encode_command(const std::vector<std::string>& args);
std::string encode(const RespValue& value);
RespValue read_reply(TcpConnection& conn, Deadline deadline);
}  // namespace resp

class RespClient {
 public:
  void connect(const std::string& host, std::uint16_t port, Deadline deadline);
  bool connected() const { return conn_.is_open(); }
  void close() { conn_.close(); }

  // Throws ConnectionError or DeadlineExceeded.
  RespValue command(const std::vector<std::string>& args, Deadline deadline);

 private:
  TcpConnection conn_;
};

// Decoded reply of GRAPH.QUERY ... --compact.
struct GraphReply {
  ResultSet result;
  std::optional<std::string> error;
};

// `property_keys` maps compact key ids to names (CALL db.propertyKeys()).
// Throws RespError on malformed replies.
GraphReply parse_compact_reply(const RespValue& reply,
                               const std::vector<std::string>& property_keys);

}  // namespace cypherdiff

#endif  // CYPHERDIFF_EXEC_RESP_H_
