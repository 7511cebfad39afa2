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

#include "cypherdiff/exec/socket.h"

#include <fcntl.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

namespace cypherdiff {
namespace {

int remaining_ms(Deadline deadline) {
  const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
      deadline - std::chrono::steady_clock::now());
  if (left.count() <= 0) return 0;
  return static_cast<int>(std::min<long long>(left.count(), 1 << 30));
}

}  // namespace

TcpConnection::~TcpConnection() { close(); }

TcpConnection::TcpConnection(TcpConnection&& other) noexcept
    : fd_(other.fd_),
      buffer_(std::move(other.buffer_)),
      buffer_pos_(other.buffer_pos_) {
  other.fd_ = -1;
}

TcpConnection& TcpConnection::operator=(TcpConnection&& other) noexcept {
  if (this != &other) {
    close();
    fd_ = other.fd_;
    buffer_ = std::move(other.buffer_);
    buffer_pos_ = other.buffer_pos_;
    other.fd_ = -1;
  }
  return *this;
}

void TcpConnection::close() {
  if (fd_ >= 0) ::close(fd_);
  fd_ = -1;
  buffer_.clear();
  buffer_pos_ = 0;
}

TcpConnection TcpConnection::connect(const std::string& host, std::uint16_t port,
                                     Deadline deadline) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* results = nullptr;
  const std::string service = std::to_string(port);
  if (int rc = ::getaddrinfo(host.c_str(), service.c_str(), &hints, &results); rc != 0) {
    throw ConnectionError("cannot resolve " + host + ": " + ::gai_strerror(rc));
  }
  std::string last_error = "no addresses";
  for (addrinfo* ai = results; ai; ai = ai->ai_next) {
    int fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd < 0) continue;
    ::fcntl(fd, F_SETFL, ::fcntl(fd, F_GETFL, 0) | O_NONBLOCK);
    int rc = ::connect(fd, ai->ai_addr, ai->ai_addrlen);
    if (rc < 0 && errno == EINPROGRESS) {
      pollfd p{fd, POLLOUT, 0};
      rc = ::poll(&p, 1, remaining_ms(deadline));
      if (rc == 0) {
        ::close(fd);
        ::freeaddrinfo(results);
        throw DeadlineExceeded();
      }
      int err = 0;
      socklen_t len = sizeof(err);
      ::getsockopt(fd, SOL_SOCKET, SO_ERROR, &err, &len);
      rc = err == 0 ? 0 : -1;
      errno = err;
    }
    if (rc == 0) {
      int one = 1;
      ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
      ::freeaddrinfo(results);
      return TcpConnection(fd);
    }
    last_error = std::strerror(errno);
    ::close(fd);
  }
  ::freeaddrinfo(results);
  throw ConnectionError("cannot connect to " + host + ":" + service + ": " +
                        last_error);
}

void TcpConnection::wait(short events, Deadline deadline) {
  pollfd p{fd_, events, 0};
  while (true) {
    const int rc = ::poll(&p, 1, remaining_ms(deadline));
    if (rc > 0) return;
    if (rc == 0) throw DeadlineExceeded();
    if (errno != EINTR) throw ConnectionError(std::strerror(errno));
  }
}

void TcpConnection::write_all(std::span<const std::uint8_t> data,
                              Deadline deadline) {
  if (fd_ < 0) throw ConnectionError("connection is closed");
  std::size_t sent = 0;
  while (sent < data.size()) {
    wait(POLLOUT, deadline);
    const ssize_t n = ::send(fd_, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EAGAIN || errno == EINTR) continue;
      const std::string err = std::strerror(errno);
      close();
      throw ConnectionError("send failed: " + err);
    }
    sent += static_cast<std::size_t>(n);
  }
}

void TcpConnection::write_all(const std::string& data, Deadline deadline) {
  write_all(std::span(reinterpret_cast<const std::uint8_t*>(data.data()), data.size()),
            deadline);
}

std::vector<std::uint8_t> TcpConnection::read_exact(std::size_t n,
                                                    Deadline deadline) {
  if (fd_ < 0) throw ConnectionError("connection is closed");
  std::vector<std::uint8_t> out;
  out.reserve(n);
  while (out.size() < n) {
    if (buffer_pos_ < buffer_.size()) {
      const std::size_t take = std::min(n - out.size(), buffer_.size() - buffer_pos_);
      out.insert(out.end(), buffer_.begin() + static_cast<std::ptrdiff_t>(buffer_pos_),
                 buffer_.begin() + static_cast<std::ptrdiff_t>(buffer_pos_ + take));
      buffer_pos_ += take;
      continue;
    }
    wait(POLLIN, deadline);
    buffer_.resize(16384);
    buffer_pos_ = 0;
    const ssize_t got = ::recv(fd_, buffer_.data(), buffer_.size(), 0);
    if (got < 0 && (errno == EAGAIN || errno == EINTR)) {
      buffer_.clear();
      continue;
    }
    if (got <= 0) {
      const std::string err = got == 0 ? "peer closed the connection" : std::strerror(errno);
      close();
      throw ConnectionError(err);
    }
    buffer_.resize(static_cast<std::size_t>(got));
  }
  return out;
}

std::uint8_t TcpConnection::read_byte(Deadline deadline) {
  return read_exact(1, deadline)[0];
}

}  // namespace cypherdiff
