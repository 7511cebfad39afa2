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


#include <gtest/gtest.h>

#include "cypherdiff/completion.h"
#include "cypherdiff/errors.h"
#include "cypherdiff/frequency.h"
#include "cypherdiff/parser.h"
#include "cypherdiff/rng.h"
#include "cypherdiff/skeleton.h"
#include "test_util.h"

namespace cypherdiff {
namespace {

TEST(Skeleton, SingleClauseIsReturn) {
  Rng rng(1);
  EXPECT_EQ(generate_skeleton(rng, 1, {}).to_string(), "RETURN □");
}

TEST(Skeleton, RejectsZeroClauses) {
  Rng rng(1);
  EXPECT_THROW(generate_skeleton(rng, 0, {}), ConfigError);
}

TEST(Skeleton, OfQuery) {
  EXPECT_EQ(skeleton_of(parse_query("MATCH (n) RETURN n;")).to_string(),
            "MATCH □ RETURN □");
  EXPECT_EQ(skeleton_of(parse_query("MATCH (user:User)-[r1:FRIEND]-()-[r2:FRIEND]-(fof:User) "
                                    "WHERE user.name = 'Bob' RETURN fof.name AS fofName;"))
                .to_string(),
            "MATCH □ WHERE □ RETURN □");
}

TEST(Skeleton, GeneratedWordsAreInGrammar) {
  Rng rng(2);
  for (int i = 0; i < 1000; ++i) {
    const int n = static_cast<int>(rng.uniform_int(1, 8));
    const Skeleton s = generate_skeleton(rng, n, {});
    EXPECT_EQ(s.clauses.size(), static_cast<std::size_t>(n));
    EXPECT_TRUE(is_skeleton_word(s)) << s.to_string();
  }
}

TEST(Skeleton, CapsForbidMatchAfterOptionalMatch) {
  EngineCaps caps;
  caps.allows_match_after_optional_match = false;
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const Skeleton s = generate_skeleton(rng, 6, caps);
    for (std::size_t c = 1; c < s.clauses.size(); ++c) {
      EXPECT_FALSE(s.clauses[c - 1].kind == ClauseKind::kOptionalMatch &&
                   s.clauses[c].kind == ClauseKind::kMatch)
          << s.to_string();
    }
    EXPECT_TRUE(caps.permits(s));
  }
}

TEST(Skeleton, CapsIntersect) {
  EngineCaps strict;
  strict.allows_match_after_optional_match = false;
  EXPECT_FALSE(EngineCaps{}.intersect(strict).allows_match_after_optional_match);
  EXPECT_TRUE(EngineCaps{}.intersect(EngineCaps{}).allows_match_after_optional_match);
}

TEST(Skeleton, WhereOnlyOnMatchAndWith) {
  Skeleton bad;
  bad.clauses = {{ClauseKind::kUnwind, true}, {ClauseKind::kReturn, false}};
  EXPECT_FALSE(is_skeleton_word(bad));
  Skeleton no_return;
  no_return.clauses = {{ClauseKind::kMatch, false}};
  EXPECT_FALSE(is_skeleton_word(no_return));
}

TEST(Skeleton, FillPreservesShape) {
  const PropertyGraph g = testing::small_graph();
  const Completer completer(g.schema);
  const FrequencyList freq(g.schema);
  Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    const Skeleton s = generate_skeleton(rng, static_cast<int>(rng.uniform_int(1, 6)), {});
    const Query q = completer.fill_skeleton(s, freq, rng);
    EXPECT_EQ(skeleton_of(q), s);
  }
}

}  // namespace
}  // namespace cypherdiff
