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

#ifndef CYPHERDIFF_EXEC_TARGET_H_
#define CYPHERDIFF_EXEC_TARGET_H_

#include <chrono>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cypherdiff/ast.h"
#include "cypherdiff/exec/outcome.h"
#include "cypherdiff/exec/reference.h"
#include "cypherdiff/graph.h"
#include "cypherdiff/graph_gen.h"
#include "cypherdiff/skeleton.h"

namespace cypherdiff {

enum class TargetKind { kReference, kNeo4j, kMemgraph, kRedisGraph };
enum class SchemaMode { kSchemaFree, kSchemaBased };

const char* to_string(TargetKind kind);

struct EngineTarget {
  std::string label;
  TargetKind kind = TargetKind::kReference;
  EngineCaps caps;
  SchemaMode schema_mode = SchemaMode::kSchemaFree;
  std::string host;
  std::uint16_t port = 0;
  std::string user;
  std::string password;
  std::string graph;  // RedisGraph key
  FaultSet faults;    // reference only
  std::string descriptor;
};

// Accepted forms:
//   reference
//   reference:count-empty-no-row
//   reference:optional-where-drops-matched
//   neo4j://[user:password@]host[:port]
//   memgraph://[user:password@]host[:port]
//   redisgraph://host[:port][/graph]
// Throws ConfigError.
EngineTarget parse_target(const std::string& descriptor);

EngineCaps common_caps(std::span<const EngineTarget> targets);

// Engine error classification, per adapter.
OutcomeKind classify_neo4j_failure(const std::string& code, const std::string& message);
OutcomeKind classify_memgraph_failure(const std::string& code, const std::string& message);
OutcomeKind classify_redisgraph_error(const std::string& message);

class TargetSession {
 public:
  explicit TargetSession(EngineTarget target) : target_(std::move(target)) {}
  virtual ~TargetSession() = default;

  const EngineTarget& target() const { return target_; }

  // Replaces the database content with `graph` and `indexes`. Throws
  // SetupError.
  virtual void setup(const PropertyGraph& graph, const std::vector<IndexSpec>& indexes) = 0;

  // Never throws; every failure is an outcome.
  virtual ExecOutcome execute(const Query& query, std::chrono::milliseconds time_limit) = 0;

  // Engine name and version once known, else the target label.
  virtual std::string version() const { return target_.label; }

 protected:
  EngineTarget target_;
};

// External sessions connect lazily in setup().
std::unique_ptr<TargetSession> open_session(const EngineTarget& target);

}  // namespace cypherdiff

#endif  // CYPHERDIFF_EXEC_TARGET_H_
