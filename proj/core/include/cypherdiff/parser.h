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

#ifndef CYPHERDIFF_PARSER_H_
#define CYPHERDIFF_PARSER_H_

#include <string_view>
#include <vector>

#include "cypherdiff/ast.h"

namespace cypherdiff {

// Parses one query of the supported subset. Throws ParseError; constructs
// outside the subset (UNION, CALL, write clauses, variable-length patterns,
// parameters, ...) raise it with unsupported() == true.
Query parse_query(std::string_view text);

// Parses "CREATE pattern, pattern, ...;" as emitted for graph setup scripts.
std::vector<Pattern> parse_create_statement(std::string_view text);

}  // namespace cypherdiff

#endif  // CYPHERDIFF_PARSER_H_
