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

#ifndef CYPHERDIFF_EXEC_SOCKET_H_
#define CYPHERDIFF_EXEC_SOCKET_H_

#include <chrono>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cypherdiff {

using Deadline = std::chrono::steady_clock::time_point;

// The peer closed or reset the connection, or it could not be opened.
class ConnectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DeadlineExceeded : public std::runtime_error {
 public:
  DeadlineExceeded() : std::runtime_error("deadline exceeded") {}
};

// Blocking TCP client with per-call deadlines.
class TcpConnection {
 public:
  TcpConnection() = default;
  ~TcpConnection();
  TcpConnection(TcpConnection&& other) noexcept;
  TcpConnection& operator=(TcpConnection&& other) noexcept;
  TcpConnection(const TcpConnection&) = delete;
  TcpConnection& operator=(const TcpConnection&) = delete;

  static TcpConnection connect(const std::string& host, std::uint16_t port,
                               Deadline deadline);

  bool is_open() const { return fd_ >= 0; }
  void close();

  void write_all(std::span<const std::uint8_t> data, Deadline deadline);
  void write_all(const std::string& data, Deadline deadline);
  std::vector<std::uint8_t> read_exact(std::size_t n, Deadline deadline);
  std::uint8_t read_byte(Deadline deadline);

 private:
  explicit TcpConnection(int fd) : fd_(fd) {}
  void wait(short events, Deadline deadline);

  int fd_ = -1;
  std::vector<std::uint8_t> buffer_;
  std::size_t buffer_pos_ = 0;
};

}  // namespace cypherdiff

#endif  // CYPHERDIFF_EXEC_SOCKET_H_
