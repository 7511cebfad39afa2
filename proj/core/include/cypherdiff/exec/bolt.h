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

#ifndef CYPHERDIFF_EXEC_BOLT_H_
#define CYPHERDIFF_EXEC_BOLT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cypherdiff/exec/packstream.h"
#include "cypherdiff/exec/socket.h"

namespace cypherdiff {

namespace bolt {
inline constexpr std::uint8_t kHello = 0x01;
inline constexpr std::uint8_t kGoodbye = 0x02;
inline constexpr std::uint8_t kReset = 0x0F;
inline constexpr std::uint8_t kRun = 0x10;
inline constexpr std::uint8_t kPull = 0x3F;
inline constexpr std::uint8_t kSuccess = 0x70;
inline constexpr std::uint8_t kRecord = 0x71;
inline constexpr std::uint8_t kIgnored = 0x7E;
inline constexpr std::uint8_t kFailure = 0x7F;

// Chunked message framing.
std::vector<std::uint8_t> frame(const PackStructure& message);
PackStructure read_message(TcpConnection& conn, Deadline deadline);
}  // namespace bolt

struct BoltFailure {
  std::string code;
  std::string message;
};

struct BoltResult {
  std::vector<std::string> fields;
  std::vector<std::vector<PackValue>> records;
  std::optional<BoltFailure> failure;
};

// Minimal Bolt 4.x client: HELLO, auto-commit RUN + PULL, RESET on failure.
class BoltClient {
 public:
  struct Options {
    std::string host = "localhost";
    std::uint16_t port = 7687;
    std::string user;
    std::string password;
    std::string user_agent = "cypherdiff/0.1";
  };

  explicit BoltClient(Options options) : options_(std::move(options)) {}

  // Throws ConnectionError, DeadlineExceeded, or ConnectionError with the
  // server's message when HELLO is refused.
  void connect(Deadline deadline);
  bool connected() const { return conn_.is_open(); }
  void close();

  // Throws ConnectionError or DeadlineExceeded; server-side failures are
  // returned in the result. A positive `tx_timeout_ms` is passed to the
  // server as the transaction timeout.
  BoltResult run(const std::string& query, Deadline deadline,
                 std::int64_t tx_timeout_ms = 0);

  const std::string& server_agent() const { return server_agent_; }
  std::uint32_t version() const { return version_; }

 private:
  void send(const PackStructure& message, Deadline deadline);

  Options options_;
  TcpConnection conn_;
  std::string server_agent_;
  std::uint32_t version_ = 0;
};

}  // namespace cypherdiff

#endif  // CYPHERDIFF_EXEC_BOLT_H_
