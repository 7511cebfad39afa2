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

#include "cypherdiff/exec/outcome.h"

#include <stdexcept>

namespace cypherdiff {

const char* to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::kSuccess: return "success";
    case OutcomeKind::kSemanticRejection: return "semantic_rejection";
    case OutcomeKind::kRuntimeError: return "runtime_error";
    case OutcomeKind::kTimeout: return "timeout";
    case OutcomeKind::kConnectionLost: return "connection_lost";
  }
  return "?";
}

OutcomeKind outcome_kind_from_string(const std::string& name) {
  for (OutcomeKind k :
       {OutcomeKind::kSuccess, OutcomeKind::kSemanticRejection,
        OutcomeKind::kRuntimeError, OutcomeKind::kTimeout,
        OutcomeKind::kConnectionLost}) {
    if (name == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown outcome kind: " + name);
}

ExecOutcome ExecOutcome::success(ResultSet result) {
  ExecOutcome out;
  out.result = std::move(result);
  return out;
}

ExecOutcome ExecOutcome::failure(OutcomeKind kind, std::string message) {
  ExecOutcome out;
  out.kind = kind;
  out.message = std::move(message);
  return out;
}

}  // namespace cypherdiff
