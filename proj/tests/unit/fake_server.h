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


#ifndef CYPHERDIFF_TESTS_UNIT_FAKE_SERVER_H_
#define CYPHERDIFF_TESTS_UNIT_FAKE_SERVER_H_

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace cypherdiff::testing {

// Blocking reads and writes on the server side of a test connection.
class ServerStream {
 public:
  explicit ServerStream(int fd) : fd_(fd) {}

  std::vector<std::uint8_t> read(std::size_t n) {
    std::vector<std::uint8_t> out(n);
    std::size_t got = 0;
    while (got < n) {
      const ssize_t r = ::recv(fd_, out.data() + got, n - got, 0);
      if (r <= 0) throw std::runtime_error("peer closed");
      got += static_cast<std::size_t>(r);
    }
    return out;
  }

  std::string read_line() {
    std::string line;
    while (line.size() < 2 || line.compare(line.size() - 2, 2, "\r\n") != 0) {
      line += static_cast<char>(read(1)[0]);
    }
    return line.substr(0, line.size() - 2);
  }

  void write(const std::vector<std::uint8_t>& data) { write(data.data(), data.size()); }
  void write(const std::string& data) { write(data.data(), data.size()); }

 private:
  void write(const void* data, std::size_t n) {
    const auto* p = static_cast<const char*>(data);
    while (n > 0) {
      const ssize_t w = ::send(fd_, p, n, MSG_NOSIGNAL);
      if (w <= 0) throw std::runtime_error("peer closed");
      p += w;
      n -= static_cast<std::size_t>(w);
    }
  }

  int fd_;
};

// Listens on an ephemeral loopback port and serves `connections` clients in
// turn on a background thread. Handler exceptions end the connection.
class FakeServer {
 public:
  using Handler = std::function<void(ServerStream&)>;

  explicit FakeServer(Handler handler, int connections = 1) : handler_(std::move(handler)) {
    listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    addr.sin_port = 0;
    if (::bind(listen_fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0 ||
        ::listen(listen_fd_, 4) != 0) {
      throw std::runtime_error("cannot listen");
    }
    socklen_t len = sizeof addr;
    ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &len);
    port_ = ntohs(addr.sin_port);
    thread_ = std::thread([this, connections] {
      for (int i = 0; i < connections; ++i) {
        const int fd = ::accept(listen_fd_, nullptr, nullptr);
        if (fd < 0) return;
        ServerStream stream(fd);
        try {
          handler_(stream);
        } catch (const std::exception&) {
        }
        ::close(fd);
      }
    });
  }

  ~FakeServer() {
    ::shutdown(listen_fd_, SHUT_RDWR);
    ::close(listen_fd_);
    if (thread_.joinable()) thread_.join();
  }

  std::uint16_t port() const { return port_; }

 private:
  Handler handler_;
  int listen_fd_ = -1;
  std::uint16_t port_ = 0;
  std::thread thread_;
};

}  // namespace cypherdiff::testing

#endif  // CYPHERDIFF_TESTS_UNIT_FAKE_SERVER_H_
