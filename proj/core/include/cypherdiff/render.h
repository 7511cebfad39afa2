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

#ifndef CYPHERDIFF_RENDER_H_
#define CYPHERDIFF_RENDER_H_

#include <string>

#include "cypherdiff/ast.h"

namespace cypherdiff {

// Canonical single-line Cypher text: uppercase keywords, single spaces
// between tokens, terminated by ';'. Nested operator expressions are
// parenthesized so the text parses back to the same tree.
std::string render(const Query& query);
std::string render(const Clause& clause);
std::string render(const Expression& expr);
std::string render(const Pattern& pattern);
std::string render(const NodePattern& node);
std::string render_property_map(const PropertyMap& properties);

const char* operator_text(ExprOp op);

}  // namespace cypherdiff

#endif  // CYPHERDIFF_RENDER_H_
