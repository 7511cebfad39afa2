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

#ifndef CYPHERDIFF_EXEC_OUTCOME_H_
#define CYPHERDIFF_EXEC_OUTCOME_H_

#include <string>
#include <vector>

#include "cypherdiff/value.h"

namespace cypherdiff {

using Row = std::vector<Value>;

// Property written on every loaded entity so external engines report the
// generator's ids.
inline constexpr const char* kEntityIdKey = "_cdid";

struct ResultSet {
  std::vector<std::string> columns;
  std::vector<Row> rows;
  // Row order is meaningful (the final RETURN has ORDER BY).
  bool ordered = false;

  bool operator==(const ResultSet&) const = default;
};

enum class OutcomeKind {
  kSuccess,
  kSemanticRejection,
  kRuntimeError,
  kTimeout,
  kConnectionLost,
};

const char* to_string(OutcomeKind kind);
OutcomeKind outcome_kind_from_string(const std::string& name);

struct ExecOutcome {
  OutcomeKind kind = OutcomeKind::kSuccess;
  ResultSet result;     // kSuccess only
  std::string message;  // failures only

  static ExecOutcome success(ResultSet result);
  static ExecOutcome failure(OutcomeKind kind, std::string message);

  bool ok() const { return kind == OutcomeKind::kSuccess; }
  bool non_empty() const { return ok() && !result.rows.empty(); }
  bool operator==(const ExecOutcome&) const = default;
};

}  // namespace cypherdiff

#endif  // CYPHERDIFF_EXEC_OUTCOME_H_
