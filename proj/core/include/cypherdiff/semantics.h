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

#ifndef CYPHERDIFF_SEMANTICS_H_
#define CYPHERDIFF_SEMANTICS_H_

#include <optional>
#include <string>
#include <vector>

#include "cypherdiff/ast.h"
#include "cypherdiff/graph.h"
#include "cypherdiff/types.h"

namespace cypherdiff {

enum class SemanticCategory {
  kScope,
  kOperandType,
  kPropertyKey,
  kSchema,     // unknown label or relationship type
  kStructure,  // misplaced aggregate, reused relationship variable, ...
};

const char* to_string(SemanticCategory category);

struct SemanticError {
  SemanticCategory category;
  std::size_t clause = 0;
  std::string message;
};

struct SemanticReport {
  std::vector<SemanticError> errors;
  bool ok() const { return errors.empty(); }
  bool has(SemanticCategory category) const;
  std::string summary() const;
};

struct SemanticOptions {
  // When false, labels, types and keys are not checked against the schema
  // and property accesses have unknown type.
  bool check_schema = true;
};

SemanticReport validate_semantics(const Query& query, const GraphSchema& schema,
                                  SemanticOptions options = {});

// Type of an expression in a context; nullopt when it is ill-typed or reads
// an unbound variable.
std::optional<TypeInfo> infer_type(const Expression& expr,
                                   const ClauseContext& ctx,
                                   const GraphSchema& schema);

}  // namespace cypherdiff

#endif  // CYPHERDIFF_SEMANTICS_H_
