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

#ifndef CYPHERDIFF_ERRORS_H_
#define CYPHERDIFF_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cypherdiff {

// Invalid limits, flags, or config file contents.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Schema or graph generation could not satisfy its postcondition.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Skeleton completion exhausted its retry budget.
class CompletionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A clause referenced a variable that is not in its local environment.
class ScopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position,
             bool unsupported = false)
      : std::runtime_error(message + " at offset " + std::to_string(position)),
        position_(position),
        unsupported_(unsupported) {}

  std::size_t position() const { return position_; }
  // True when the input is well-formed Cypher outside the supported subset.
  bool unsupported() const { return unsupported_; }

 private:
  std::size_t position_;
  bool unsupported_;
};

class PoolEmptyError : public std::runtime_error {
 public:
  PoolEmptyError() : std::runtime_error("query pool is empty") {}
};

// The requested mutation strategy has nothing to act on.
class StrategyInapplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Connection, authentication, or schema-creation failure on a target.
class SetupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A metric was requested over an empty corpus.
class UndefinedMetric : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cypherdiff

#endif  // CYPHERDIFF_ERRORS_H_
