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

#include "cypherdiff/skeleton.h"

#include <variant>

#include "cypherdiff/errors.h"

namespace cypherdiff {

const char* to_string(ClauseKind kind) {
  switch (kind) {
    case ClauseKind::kMatch: return "MATCH";
    case ClauseKind::kOptionalMatch: return "OPTIONAL MATCH";
    case ClauseKind::kWith: return "WITH";
    case ClauseKind::kUnwind: return "UNWIND";
    case ClauseKind::kReturn: return "RETURN";
  }
  return "?";
}

std::string Skeleton::to_string() const {
  std::string out;
  for (const SkeletonClause& c : clauses) {
    if (!out.empty()) out += ' ';
    out += cypherdiff::to_string(c.kind);
    out += c.kind == ClauseKind::kUnwind ? " □ AS □" : " □";
    if (c.has_where) out += " WHERE □";
  }
  return out;
}

EngineCaps EngineCaps::intersect(const EngineCaps& other) const {
  EngineCaps out;
  out.allows_match_after_optional_match =
      allows_match_after_optional_match && other.allows_match_after_optional_match;
  return out;
}

bool EngineCaps::permits(const Skeleton& skeleton) const {
  if (allows_match_after_optional_match) return true;
  bool open_optional = false;
  for (const SkeletonClause& c : skeleton.clauses) {
    switch (c.kind) {
      case ClauseKind::kOptionalMatch: open_optional = true; break;
      case ClauseKind::kWith: open_optional = false; break;
      case ClauseKind::kMatch:
        if (open_optional) return false;
        break;
      default: break;
    }
  }
  return true;
}

Skeleton generate_skeleton(Rng& rng, int n_clauses, const EngineCaps& caps) {
  if (n_clauses < 1) {
    throw ConfigError("skeleton needs at least one clause, got " +
                      std::to_string(n_clauses));
  }
  static constexpr ClauseKind kKinds[] = {ClauseKind::kMatch,
                                          ClauseKind::kOptionalMatch,
                                          ClauseKind::kWith, ClauseKind::kUnwind};
  for (int attempt = 0; attempt < kSkeletonRetryCap; ++attempt) {
    Skeleton s;
    for (int i = 0; i + 1 < n_clauses; ++i) {
      SkeletonClause c;
      c.kind = kKinds[rng.index(std::size(kKinds))];
      if (c.kind != ClauseKind::kUnwind) c.has_where = rng.chance(0.5);
      s.clauses.push_back(c);
    }
    s.clauses.push_back({ClauseKind::kReturn, false});
    if (caps.permits(s)) return s;
  }
  throw GenerationError("no permitted skeleton of length " +
                        std::to_string(n_clauses) + " after " +
                        std::to_string(kSkeletonRetryCap) + " attempts");
}

Skeleton skeleton_of(const Query& query) {
  Skeleton s;
  for (const Clause& clause : query.clauses) {
    SkeletonClause c;
    if (const auto* m = std::get_if<MatchClause>(&clause)) {
      c.kind = m->optional ? ClauseKind::kOptionalMatch : ClauseKind::kMatch;
      c.has_where = m->where != nullptr;
    } else if (const auto* w = std::get_if<WithClause>(&clause)) {
      c.kind = ClauseKind::kWith;
      c.has_where = w->where != nullptr;
    } else if (std::holds_alternative<UnwindClause>(clause)) {
      c.kind = ClauseKind::kUnwind;
    } else {
      c.kind = ClauseKind::kReturn;
    }
    s.clauses.push_back(c);
  }
  return s;
}

bool is_skeleton_word(const Skeleton& skeleton) {
  if (skeleton.clauses.empty()) return false;
  for (std::size_t i = 0; i < skeleton.clauses.size(); ++i) {
    const SkeletonClause& c = skeleton.clauses[i];
    const bool last = i + 1 == skeleton.clauses.size();
    if ((c.kind == ClauseKind::kReturn) != last) return false;
    if (c.has_where && c.kind != ClauseKind::kMatch &&
        c.kind != ClauseKind::kOptionalMatch && c.kind != ClauseKind::kWith) {
      return false;
    }
  }
  return true;
}

}  // namespace cypherdiff
