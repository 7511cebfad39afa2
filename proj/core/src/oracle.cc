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

#include "cypherdiff/oracle.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cypherdiff/exec/reference.h"

namespace cypherdiff {

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::kConsistent: return "consistent";
    case VerdictKind::kErrorBug: return "error_bug";
    case VerdictKind::kWrongResultBug: return "wrong_result_bug";
    case VerdictKind::kNonComparable: return "non_comparable";
  }
  return "?";
}

VerdictKind verdict_kind_from_string(const std::string& name) {
  for (VerdictKind k : {VerdictKind::kConsistent, VerdictKind::kErrorBug,
                        VerdictKind::kWrongResultBug, VerdictKind::kNonComparable}) {
    if (name == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown verdict '" + name + "'");
}

bool cell_equal(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ValueKind::kFloat: {
      const double x = a.as_float();
      const double y = b.as_float();
      if (x == y || (std::isnan(x) && std::isnan(y))) return true;
      return std::abs(x - y) <= kFloatTolerance * std::max(std::abs(x), std::abs(y));
    }
    case ValueKind::kList: {
      const auto& xs = a.as_list();
      const auto& ys = b.as_list();
      if (xs.size() != ys.size()) return false;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!cell_equal(xs[i], ys[i])) return false;
      }
      return true;
    }
    default:
      return a == b;
  }
}

namespace {

bool row_equal(const Row& a, const Row& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!cell_equal(a[i], b[i])) return false;
  }
  return true;
}

bool row_less(const Row& a, const Row& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (const int c = order_compare(a[i], b[i]); c != 0) return c < 0;
  }
  return a.size() < b.size();
}

bool sequence_equal(const std::vector<Row>& a, const std::vector<Row>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), row_equal);
}

// Multiset equality up to tolerance: sorted comparison first, then greedy
// matching for rows that near-equal floats may have reordered.
bool multiset_equal(std::vector<Row> a, std::vector<Row> b) {
  if (a.size() != b.size()) return false;
  std::stable_sort(a.begin(), a.end(), row_less);
  std::stable_sort(b.begin(), b.end(), row_less);
  if (sequence_equal(a, b)) return true;
  if (a.size() > 4096) return false;
  std::vector<bool> used(b.size(), false);
  for (const Row& r : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && row_equal(r, b[j])) {
        used[j] = found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool is_error(const ExecOutcome& o) {
  return o.kind == OutcomeKind::kRuntimeError || o.kind == OutcomeKind::kConnectionLost;
}

std::string describe(const ExecOutcome& o) {
  if (o.ok()) return std::to_string(o.result.rows.size()) + " row(s)";
  return std::string(to_string(o.kind)) + (o.message.empty() ? "" : " (" + o.message + ")");
}

}  // namespace

bool result_set_equal(const ResultSet& a, const ResultSet& b) {
  if (a.columns.size() != b.columns.size()) return false;
  if (a.ordered || b.ordered) return sequence_equal(a.rows, b.rows);
  return multiset_equal(a.rows, b.rows);
}

Verdict compare(std::span<const ExecOutcome> outcomes) {
  if (outcomes.size() < 2) throw std::invalid_argument("compare needs at least two outcomes");
  Verdict v;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto k = outcomes[i].kind;
    if (k == OutcomeKind::kSemanticRejection) {
      v.kind = VerdictKind::kNonComparable;
      v.self_check_failure = true;
      v.first = i;
      v.details = "target " + std::to_string(i) + " rejected the query: " + outcomes[i].message;
      return v;
    }
  }
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].kind == OutcomeKind::kTimeout) {
      v.kind = VerdictKind::kNonComparable;
      v.first = i;
      v.details = "target " + std::to_string(i) + " timed out";
      return v;
    }
  }
  // Error bugs: a failing target alongside a succeeding one, or any crash.
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (!is_error(outcomes[i])) continue;
    for (std::size_t j = 0; j < outcomes.size(); ++j) {
      if (j != i && (outcomes[j].ok() || outcomes[i].kind == OutcomeKind::kConnectionLost)) {
        v.kind = VerdictKind::kErrorBug;
        v.first = i;
        v.second = j;
        v.details = "target " + std::to_string(i) + ": " + describe(outcomes[i]) +
                    "; target " + std::to_string(j) + ": " + describe(outcomes[j]);
        return v;
      }
    }
  }
  if (!std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.ok(); })) {
    v.details = "all targets failed alike";
    return v;
  }
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    for (std::size_t j = i + 1; j < outcomes.size(); ++j) {
      if (!result_set_equal(outcomes[i].result, outcomes[j].result)) {
        v.kind = VerdictKind::kWrongResultBug;
        v.first = i;
        v.second = j;
        v.details = "target " + std::to_string(i) + " returned " + describe(outcomes[i]) +
                    ", target " + std::to_string(j) + " returned " + describe(outcomes[j]);
        return v;
      }
    }
  }
  return v;
}

Verdict crash_only(const ExecOutcome& outcome) {
  Verdict v;
  if (outcome.kind == OutcomeKind::kConnectionLost) {
    v.kind = VerdictKind::kErrorBug;
    v.details = "target 0: " + describe(outcome);
  } else if (outcome.kind == OutcomeKind::kSemanticRejection) {
    v.kind = VerdictKind::kNonComparable;
    v.self_check_failure = true;
    v.details = "target 0 rejected the query: " + outcome.message;
  } else if (outcome.kind == OutcomeKind::kTimeout) {
    v.kind = VerdictKind::kNonComparable;
    v.details = "target 0 timed out";
  }
  return v;
}

}  // namespace cypherdiff
