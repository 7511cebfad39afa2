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

#ifndef CYPHERDIFF_REDUCER_H_
#define CYPHERDIFF_REDUCER_H_

#include <functional>
#include <vector>

#include "cypherdiff/ast.h"
#include "cypherdiff/graph.h"

namespace cypherdiff {

// All single-step deletions of `query`: clauses, WHERE sub-clauses and
// connective operands, return items, patterns, hops, labels, property maps,
// SKIP, LIMIT and ORDER BY. Candidates are not checked for validity.
std::vector<Query> reduction_candidates(const Query& query);

// Greedy fixpoint over reduction_candidates, keeping a candidate iff it is
// semantically valid and `still_fails` holds. The result is 1-minimal.
Query reduce_query(const Query& query, const GraphSchema& schema,
                   const std::function<bool(const Query&)>& still_fails);

}  // namespace cypherdiff

#endif  // CYPHERDIFF_REDUCER_H_
