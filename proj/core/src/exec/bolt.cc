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

#include "cypherdiff/exec/bolt.h"

namespace cypherdiff {
namespace bolt {

std::vector<std::uint8_t> frame(const PackStructure& message) {
  std::vector<std::uint8_t> body;
  pack(PackValue(message), body);
  std::vector<std::uint8_t> out;
  std::size_t pos = 0;
  while (pos < body.size()) {
    const std::size_t n = std::min<std::size_t>(0xFFFF, body.size() - pos);
    out.push_back(static_cast<std::uint8_t>(n >> 8));
    out.push_back(static_cast<std::uint8_t>(n & 0xFF));
    out.insert(out.end(), body.begin() + static_cast<std::ptrdiff_t>(pos),
               body.begin() + static_cast<std::ptrdiff_t>(pos + n));
    pos += n;
  }
  out.push_back(0);
  out.push_back(0);
  return out;
}

PackStructure read_message(TcpConnection& conn, Deadline deadline) {
  std::vector<std::uint8_t> body;
  while (true) {
    const auto header = conn.read_exact(2, deadline);
    const std::size_t n = (static_cast<std::size_t>(header[0]) << 8) | header[1];
    if (n == 0) {
      if (body.empty()) continue;  // NOOP keep-alive chunk
      break;
    }
    const auto chunk = conn.read_exact(n, deadline);
    body.insert(body.end(), chunk.begin(), chunk.end());
  }
  std::size_t pos = 0;
  PackValue v = unpack(body, pos);
  auto* s = std::get_if<PackStructure>(&v.data);
  if (!s) throw PackStreamError("Bolt message is not a structure");
  return std::move(*s);
}

}  // namespace bolt

void BoltClient::send(const PackStructure& message, Deadline deadline) {
  conn_.write_all(bolt::frame(message), deadline);
}

void BoltClient::close() {
  if (conn_.is_open()) {
    try {
      send(PackStructure{bolt::kGoodbye, {}},
           std::chrono::steady_clock::now() + std::chrono::milliseconds(200));
    } catch (const std::exception&) {
    }
  }
  conn_.close();
}

void BoltClient::connect(Deadline deadline) {
  conn_ = TcpConnection::connect(options_.host, options_.port, deadline);
  const std::uint8_t handshake[] = {0x60, 0x60, 0xB0, 0x17,  // magic
                                    0, 0, 4, 4, 0, 0, 3, 4, 0, 0, 1, 4, 0, 0, 0, 4};
  conn_.write_all(handshake, deadline);
  const auto v = conn_.read_exact(4, deadline);
  version_ = (static_cast<std::uint32_t>(v[0]) << 24) | (v[1] << 16) | (v[2] << 8) | v[3];
  if (version_ == 0) {
    conn_.close();
    throw ConnectionError("server supports none of the offered Bolt versions");
  }
  PackMap hello{{"user_agent", options_.user_agent}};
  if (options_.user.empty()) {
    hello.emplace_back("scheme", "none");
  } else {
    hello.emplace_back("scheme", "basic");
    hello.emplace_back("principal", options_.user);
    hello.emplace_back("credentials", options_.password);
  }
  send(PackStructure{bolt::kHello, {PackValue(std::move(hello))}}, deadline);
  PackStructure reply = bolt::read_message(conn_, deadline);
  if (reply.tag != bolt::kSuccess) {
    std::string message = "HELLO refused";
    if (!reply.fields.empty()) {
      if (const PackValue* m = reply.fields[0].get("message"); m && m->text()) {
        message += ": " + *m->text();
      }
    }
    conn_.close();
    throw ConnectionError(message);
  }
  server_agent_.clear();
  if (!reply.fields.empty()) {
    if (const PackValue* s = reply.fields[0].get("server"); s && s->text()) {
      server_agent_ = *s->text();
    }
  }
}

BoltResult BoltClient::run(const std::string& query, Deadline deadline,
                           std::int64_t tx_timeout_ms) {
  if (!conn_.is_open()) throw ConnectionError("not connected");
  PackMap extra;
  if (tx_timeout_ms > 0) extra.emplace_back("tx_timeout", PackValue(tx_timeout_ms));
  send(PackStructure{bolt::kRun, {query, PackMap{}, std::move(extra)}}, deadline);
  send(PackStructure{bolt::kPull, {PackMap{{"n", PackValue(std::int64_t{-1})}}}}, deadline);

  BoltResult result;
  auto failure_of = [](const PackStructure& m) {
    BoltFailure f;
    if (!m.fields.empty()) {
      if (const PackValue* c = m.fields[0].get("code"); c && c->text()) f.code = *c->text();
      if (const PackValue* s = m.fields[0].get("message"); s && s->text()) f.message = *s->text();
    }
    return f;
  };
  auto recover = [&] {
    send(PackStructure{bolt::kReset, {}}, deadline);
    while (bolt::read_message(conn_, deadline).tag != bolt::kSuccess) {
    }
  };

  PackStructure reply = bolt::read_message(conn_, deadline);
  if (reply.tag == bolt::kFailure) {
    result.failure = failure_of(reply);
    bolt::read_message(conn_, deadline);  // IGNORED for PULL
    recover();
    return result;
  }
  if (!reply.fields.empty()) {
    if (const PackValue* f = reply.fields[0].get("fields")) {
      if (const auto* list = std::get_if<PackList>(&f->data)) {
        for (const auto& name : *list) {
          if (name.text()) result.fields.push_back(*name.text());
        }
      }
    }
  }
  while (true) {
    PackStructure m = bolt::read_message(conn_, deadline);
    if (m.tag == bolt::kRecord) {
      if (!m.fields.empty()) {
        if (auto* list = std::get_if<PackList>(&m.fields[0].data)) {
          result.records.push_back(std::move(*list));
        }
      }
      continue;
    }
    if (m.tag == bolt::kFailure) {
      result.failure = failure_of(m);
      result.records.clear();
      recover();
    }
    break;
  }
  return result;
}

}  // namespace cypherdiff
