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

#ifndef CYPHERDIFF_PRODUCTIONS_H_
#define CYPHERDIFF_PRODUCTIONS_H_

#include <cstddef>
#include <set>
#include <string_view>

#include "cypherdiff/ast.h"

namespace cypherdiff {

enum class Production {
#define X(id, rule) id,
#include "cypherdiff/productions.def"
#undef X
};

inline constexpr int kProductionRegistryVersion = 1;

std::size_t production_count();
std::string_view production_name(Production p);
std::string_view production_rule(Production p);

using ProductionSet = std::set<Production>;

// Exact set of registry productions exercised by the query.
ProductionSet productions_covered(const Query& query);

}  // namespace cypherdiff

#endif  // CYPHERDIFF_PRODUCTIONS_H_
