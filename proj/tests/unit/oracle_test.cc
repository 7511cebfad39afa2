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


#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "cypherdiff/oracle.h"

namespace cypherdiff {
namespace {

ResultSet rows(std::vector<Row> r, bool ordered = false) {
  ResultSet rs;
  rs.columns = {"a"};
  rs.rows = std::move(r);
  rs.ordered = ordered;
  return rs;
}

ExecOutcome ok(std::vector<Row> r) { return ExecOutcome::success(rows(std::move(r))); }

Verdict judge(std::vector<ExecOutcome> outcomes) { return compare(outcomes); }

TEST(CellEqual, Rules) {
  EXPECT_TRUE(cell_equal(Value::null(), Value::null()));
  EXPECT_FALSE(cell_equal(Value::null(), Value::integer(0)));
  EXPECT_FALSE(cell_equal(Value::integer(1), Value::floating(1.0)));
  EXPECT_TRUE(cell_equal(Value::floating(1.0), Value::floating(1.0 + 1e-12)));
  EXPECT_FALSE(cell_equal(Value::floating(1.0), Value::floating(1.0 + 1e-6)));
  EXPECT_TRUE(cell_equal(Value::list({Value::integer(1), Value::null()}),
                         Value::list({Value::integer(1), Value::null()})));
  EXPECT_FALSE(cell_equal(Value::node(1), Value::relationship(1)));
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_TRUE(cell_equal(Value::floating(inf), Value::floating(inf)));
}

TEST(ResultSetEqual, UnorderedIsMultiset) {
  EXPECT_TRUE(result_set_equal(rows({{Value::integer(1)}, {Value::integer(2)}}),
                               rows({{Value::integer(2)}, {Value::integer(1)}})));
  EXPECT_FALSE(result_set_equal(rows({{Value::integer(1)}, {Value::integer(1)}}),
                                rows({{Value::integer(1)}})));
  EXPECT_FALSE(result_set_equal(rows({{Value::integer(1)}, {Value::integer(1)}}),
                                rows({{Value::integer(1)}, {Value::integer(2)}})));
}

TEST(ResultSetEqual, OrderedIsSequence) {
  EXPECT_FALSE(result_set_equal(rows({{Value::integer(1)}, {Value::integer(2)}}, true),
                                rows({{Value::integer(2)}, {Value::integer(1)}}, true)));
  EXPECT_TRUE(result_set_equal(rows({{Value::integer(1)}, {Value::integer(2)}}, true),
                               rows({{Value::integer(1)}, {Value::integer(2)}}, true)));
}

TEST(ResultSetEqual, NullCells) {
  EXPECT_TRUE(result_set_equal(rows({{Value::null()}}), rows({{Value::null()}})));
}

TEST(ResultSetEqual, FloatToleranceInsideMultisets) {
  EXPECT_TRUE(result_set_equal(
      rows({{Value::floating(0.1 + 0.2)}, {Value::floating(1.0)}}),
      rows({{Value::floating(1.0)}, {Value::floating(0.3)}})));
}

TEST(Compare, Consistent) {
  const Verdict v = judge({ok({{Value::integer(1)}}), ok({{Value::integer(1)}})});
  EXPECT_EQ(v.kind, VerdictKind::kConsistent);
  EXPECT_FALSE(v.is_bug());
}

TEST(Compare, ExceptionOnOneSideIsAnErrorBug) {
  const Verdict v = judge({ok({{Value::integer(1)}}),
                           ExecOutcome::failure(OutcomeKind::kRuntimeError, "boom")});
  EXPECT_EQ(v.kind, VerdictKind::kErrorBug);
  EXPECT_EQ(v.first, 1u);  // the failing target
  EXPECT_EQ(v.second, 0u);
}

TEST(Compare, DifferentRowsAreAWrongResult) {
  const Verdict v = judge({ok({{Value::integer(1)}}), ok({})});
  EXPECT_EQ(v.kind, VerdictKind::kWrongResultBug);
}

TEST(Compare, FirstDisagreeingPair) {
  const Verdict v = judge({ok({{Value::integer(1)}}), ok({{Value::integer(1)}}), ok({})});
  EXPECT_EQ(v.kind, VerdictKind::kWrongResultBug);
  EXPECT_EQ(v.first, 0u);
  EXPECT_EQ(v.second, 2u);
}

TEST(Compare, RejectionIsNotComparable) {
  const Verdict v = judge({ok({}), ExecOutcome::failure(OutcomeKind::kSemanticRejection, "no")});
  EXPECT_EQ(v.kind, VerdictKind::kNonComparable);
  EXPECT_TRUE(v.self_check_failure);
}

TEST(Compare, TimeoutIsNotComparable) {
  const Verdict v = judge({ok({}), ExecOutcome::failure(OutcomeKind::kTimeout, "slow")});
  EXPECT_EQ(v.kind, VerdictKind::kNonComparable);
  EXPECT_FALSE(v.self_check_failure);
}

TEST(Compare, LostConnectionIsAnErrorBug) {
  const Verdict v = judge({ExecOutcome::failure(OutcomeKind::kConnectionLost, "gone"),
                           ExecOutcome::failure(OutcomeKind::kRuntimeError, "boom")});
  EXPECT_EQ(v.kind, VerdictKind::kErrorBug);
}

TEST(Compare, IdenticalFailuresAreConsistent) {
  const Verdict v = judge({ExecOutcome::failure(OutcomeKind::kRuntimeError, "a"),
                           ExecOutcome::failure(OutcomeKind::kRuntimeError, "b")});
  EXPECT_EQ(v.kind, VerdictKind::kConsistent);
}

TEST(Compare, NeedsTwoOutcomes) {
  EXPECT_THROW(judge({ok({})}), std::invalid_argument);
}

TEST(CrashOnly, OnlyLostConnections) {
  EXPECT_EQ(crash_only(ok({})).kind, VerdictKind::kConsistent);
  EXPECT_EQ(crash_only(ExecOutcome::failure(OutcomeKind::kRuntimeError, "x")).kind,
            VerdictKind::kConsistent);
  EXPECT_EQ(crash_only(ExecOutcome::failure(OutcomeKind::kConnectionLost, "x")).kind,
            VerdictKind::kErrorBug);
}

TEST(VerdictKind, NamesRoundTrip) {
  for (VerdictKind k : {VerdictKind::kConsistent, VerdictKind::kErrorBug,
                        VerdictKind::kWrongResultBug, VerdictKind::kNonComparable}) {
    EXPECT_EQ(verdict_kind_from_string(to_string(k)), k);
  }
  EXPECT_STREQ(to_string(VerdictKind::kWrongResultBug), "wrong_result_bug");
}

}  // namespace
}  // namespace cypherdiff
