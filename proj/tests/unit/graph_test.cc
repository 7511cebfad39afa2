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


#include <set>
#include <utility>

#include <gtest/gtest.h>

#include "cypherdiff/errors.h"
#include "cypherdiff/graph.h"
#include "cypherdiff/graph_gen.h"
#include "cypherdiff/rng.h"
#include "test_util.h"

namespace cypherdiff {
namespace {

using testing::small_graph;

TEST(ValidateGraph, EmptyGraphIsOk) {
  EXPECT_TRUE(validate_schema(GraphSchema{}).ok());
  EXPECT_TRUE(validate_graph(PropertyGraph{}).ok());
}

TEST(ValidateGraph, SmallFixtureIsOk) {
  const auto report = validate_graph(small_graph());
  EXPECT_TRUE(report.ok());
}

TEST(ValidateGraph, DanglingEndpoint) {
  PropertyGraph g = small_graph();
  g.relationships[0].target = 42;
  EXPECT_TRUE(validate_graph(g).has("dangling endpoint"));
}

TEST(ValidateGraph, UnknownPropertyKey) {
  PropertyGraph g = small_graph();
  g.nodes[2].properties["k0"] = Value::integer(3);  // k0 belongs to L0
  EXPECT_TRUE(validate_graph(g).has("unknown property key"));
}

TEST(Rng, ChildrenAreIndependentOfParentPosition) {
  Rng a(7);
  Rng b(7);
  b.next();
  b.next();
  Rng ca = a.child("graph");
  Rng cb = b.child("graph");
  for (int i = 0; i < 16; ++i) EXPECT_EQ(ca.next(), cb.next());
  EXPECT_NE(a.child("graph").next(), a.child("schema").next());
  EXPECT_NE(a.child("query", 1).next(), a.child("query", 2).next());
}

TEST(Rng, UniformIntStaysInRange) {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const auto v = rng.uniform_int(-2, 2);
    EXPECT_GE(v, -2);
    EXPECT_LE(v, 2);
  }
}

TEST(Rng, WeightedIndexSkipsZeroWeights) {
  Rng rng(11);
  const double w[] = {0.0, 1.0, 0.0, 3.0};
  for (int i = 0; i < 500; ++i) {
    const auto k = rng.weighted_index(w);
    EXPECT_TRUE(k == 1 || k == 3);
  }
}

TEST(GenerateSchema, RespectsLabelBound) {
  GenLimits limits;
  limits.max_labels = 3;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const GraphSchema s = generate_schema(rng, limits);
    EXPECT_GE(s.labels.size(), 1u);
    EXPECT_LE(s.labels.size(), 3u);
    std::set<std::string> names;
    for (const auto& l : s.labels) names.insert(l.name);
    EXPECT_EQ(names.size(), s.labels.size());
    EXPECT_TRUE(validate_schema(s).ok());
  }
}

TEST(GenerateSchema, Deterministic) {
  GenLimits limits;
  Rng a(99);
  Rng b(99);
  EXPECT_EQ(generate_schema(a, limits), generate_schema(b, limits));
}

TEST(GenerateSchema, ZeroKeysPerEntity) {
  GenLimits limits;
  limits.max_keys_per_entity = 0;
  Rng rng(5);
  const GraphSchema s = generate_schema(rng, limits);
  EXPECT_TRUE(s.keys.empty());
  for (const auto& l : s.labels) EXPECT_TRUE(l.keys.empty());
  for (const auto& t : s.rel_types) EXPECT_TRUE(t.keys.empty());
}

TEST(GenerateGraph, EmptyCounts) {
  GenLimits limits;
  limits.node_count = 0;
  limits.relationship_count = 0;
  Rng rng(1);
  const GraphSchema s = generate_schema(rng, limits);
  const PropertyGraph g = generate_graph(rng, s, limits);
  EXPECT_TRUE(g.nodes.empty());
  EXPECT_TRUE(g.relationships.empty());
  EXPECT_TRUE(validate_graph(g).ok());
}

TEST(GenerateGraph, OutputAlwaysValid) {
  for (const GenLimits& limits : {GenLimits{}, GenLimits::desk_small(), GenLimits::desk_mutation()}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      Rng rng(seed);
      Rng schema_rng = rng.child("schema");
      Rng graph_rng = rng.child("graph");
      const GraphSchema s = generate_schema(schema_rng, limits);
      const PropertyGraph g = generate_graph(graph_rng, s, limits);
      const auto report = validate_graph(g);
      EXPECT_TRUE(report.ok()) << "seed " << seed << ": " << report.violations[0].kind;
      EXPECT_EQ(g.nodes.size(), static_cast<std::size_t>(limits.node_count));
    }
  }
}

TEST(GenerateGraph, Deterministic) {
  GenLimits limits;
  limits.node_count = 10;
  limits.relationship_count = 5;
  auto make = [&] {
    Rng rng(1234);
    Rng schema_rng = rng.child("schema");
    Rng graph_rng = rng.child("graph");
    const GraphSchema s = generate_schema(schema_rng, limits);
    return generate_graph(graph_rng, s, limits);
  };
  EXPECT_EQ(make(), make());
}

TEST(GenerateIndexes, ZeroCount) {
  Rng rng(1);
  EXPECT_TRUE(generate_indexes(rng, testing::small_schema(), 0).empty());
}

TEST(GenerateIndexes, BoundedByCandidatesWithoutDuplicates) {
  GraphSchema s;
  s.labels = {{"L", {"k"}}};
  s.keys = {{"k", PropertyKind::kInteger}};
  Rng rng(1);
  const auto indexes = generate_indexes(rng, s, 5);
  ASSERT_EQ(indexes.size(), 1u);
  EXPECT_EQ(indexes[0].target, "L");
  EXPECT_EQ(indexes[0].key, "k");
  EXPECT_TRUE(index_is_valid(indexes[0], s));
}

TEST(GenerateIndexes, Deterministic) {
  Rng a(8);
  Rng b(8);
  EXPECT_EQ(generate_indexes(a, testing::small_schema(), 3),
            generate_indexes(b, testing::small_schema(), 3));
}

TEST(GraphMutants, SinglePropertyYieldsOneMutant) {
  PropertyGraph g;
  g.schema.labels = {{"L", {"k"}}};
  g.schema.keys = {{"k", PropertyKind::kInteger}};
  g.nodes = {{0, {"L"}, {{"k", Value::integer(1)}}}};
  Rng rng(1);
  const auto mutants = generate_graph_mutants(g, 50, rng);
  ASSERT_EQ(mutants.size(), 1u);
  EXPECT_TRUE(mutants[0].graph.nodes[0].properties.empty());
}

TEST(GraphMutants, DistinctAndFaithful) {
  GenLimits limits = GenLimits::desk_mutation();
  limits.node_count = 30;
  limits.relationship_count = 30;
  Rng rng(3);
  const GraphSchema s = generate_schema(rng, limits);
  const PropertyGraph g = generate_graph(rng, s, limits);
  ASSERT_GE(g.property_count(), 50u);
  const auto mutants = generate_graph_mutants(g, 50, rng);
  ASSERT_EQ(mutants.size(), 50u);
  std::set<std::pair<EntityRef, std::string>> sites;
  for (const auto& m : mutants) {
    sites.insert({m.entity, m.key});
    EXPECT_EQ(m.graph.property_count() + 1, g.property_count());
    PropertyGraph restored = m.graph;
    auto& props = m.entity.is_relationship
                      ? restored.relationships[static_cast<std::size_t>(m.entity.id)].properties
                      : restored.nodes[static_cast<std::size_t>(m.entity.id)].properties;
    EXPECT_FALSE(props.contains(m.key));
    props[m.key] = m.removed_value;
    EXPECT_EQ(restored, g);
  }
  EXPECT_EQ(sites.size(), 50u);
}

TEST(GenLimits, RejectsInvertedRanges) {
  GenLimits limits;
  limits.int_min = 5;
  limits.int_max = 1;
  EXPECT_THROW(limits.validate(), ConfigError);
}

}  // namespace
}  // namespace cypherdiff
