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

#ifndef CYPHERDIFF_SKELETON_H_
#define CYPHERDIFF_SKELETON_H_

#include <string>
#include <vector>

#include "cypherdiff/ast.h"
#include "cypherdiff/rng.h"

namespace cypherdiff {

enum class ClauseKind { kMatch, kOptionalMatch, kWith, kUnwind, kReturn };

const char* to_string(ClauseKind kind);

// One clause with holes. has_where is meaningful for MATCH and WITH only.
struct SkeletonClause {
  ClauseKind kind = ClauseKind::kReturn;
  bool has_where = false;
  bool operator==(const SkeletonClause&) const = default;
};

struct Skeleton {
  std::vector<SkeletonClause> clauses;

  // e.g. "MATCH □ WHERE □ RETURN □"
  std::string to_string() const;
  bool operator==(const Skeleton&) const = default;
};

// Engine-specific restrictions on clause sequences.
struct EngineCaps {
  // False: a MATCH may not follow an OPTIONAL MATCH unless a WITH comes
  // between them.
  bool allows_match_after_optional_match = true;

  EngineCaps intersect(const EngineCaps& other) const;
  bool permits(const Skeleton& skeleton) const;
  bool operator==(const EngineCaps&) const = default;
};

inline constexpr int kSkeletonRetryCap = 100;

// Throws ConfigError when n_clauses < 1, GenerationError when no permitted
// skeleton is found within kSkeletonRetryCap attempts.
Skeleton generate_skeleton(Rng& rng, int n_clauses, const EngineCaps& caps);

Skeleton skeleton_of(const Query& query);

// Membership in the skeleton grammar: clauses* RETURN, WHERE only on MATCH
// and WITH.
bool is_skeleton_word(const Skeleton& skeleton);

}  // namespace cypherdiff

#endif  // CYPHERDIFF_SKELETON_H_
