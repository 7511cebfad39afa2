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

#ifndef CYPHERDIFF_ORACLE_H_
#define CYPHERDIFF_ORACLE_H_

#include <cstddef>
#include <span>
#include <string>

#include "cypherdiff/exec/outcome.h"

namespace cypherdiff {

enum class VerdictKind { kConsistent, kErrorBug, kWrongResultBug, kNonComparable };

const char* to_string(VerdictKind kind);
VerdictKind verdict_kind_from_string(const std::string& name);

struct Verdict {
  VerdictKind kind = VerdictKind::kConsistent;
  std::string details;
  // Disagreeing pair (error and wrong-result bugs), as outcome indexes.
  std::size_t first = 0;
  std::size_t second = 0;
  // A target rejected a query the generator considers valid.
  bool self_check_failure = false;

  bool is_bug() const {
    return kind == VerdictKind::kErrorBug || kind == VerdictKind::kWrongResultBug;
  }
};

inline constexpr double kFloatTolerance = 1e-9;

// Result-cell identity: null equals null, kinds must match, floats within a
// relative tolerance.
bool cell_equal(const Value& a, const Value& b);

bool result_set_equal(const ResultSet& a, const ResultSet& b);

// Throws std::invalid_argument on fewer than two outcomes.
Verdict compare(std::span<const ExecOutcome> outcomes);

// Single-target mode: only a lost connection counts.
Verdict crash_only(const ExecOutcome& outcome);

}  // namespace cypherdiff

#endif  // CYPHERDIFF_ORACLE_H_
