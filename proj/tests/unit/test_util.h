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

#ifndef CYPHERDIFF_TESTS_UNIT_TEST_UTIL_H_
#define CYPHERDIFF_TESTS_UNIT_TEST_UTIL_H_

#include <string>
#include <vector>

#include "cypherdiff/graph.h"
#include "cypherdiff/value.h"

namespace cypherdiff::testing {

// User nodes with a text `name`, FRIEND relationships between them.
inline GraphSchema social_schema() {
  GraphSchema s;
  s.labels = {{"User", {"name"}}};
  s.rel_types = {{"FRIEND", {{"User", "User"}}, {"since"}}};
  s.keys = {{"name", PropertyKind::kText}, {"since", PropertyKind::kInteger}};
  return s;
}

// Labels L0 {k0 int, k1 int, k2 text}, L1 {k3 bool}; type T0 L0->L1 {k4 float}.
inline GraphSchema small_schema() {
  GraphSchema s;
  s.labels = {{"L0", {"k0", "k1", "k2"}}, {"L1", {"k3"}}};
  s.rel_types = {{"T0", {{"L0", "L1"}}, {"k4"}}};
  s.keys = {{"k0", PropertyKind::kInteger},
            {"k1", PropertyKind::kInteger},
            {"k2", PropertyKind::kText},
            {"k3", PropertyKind::kBoolean},
            {"k4", PropertyKind::kFloat}};
  return s;
}

// Two L0 nodes, one L1 node, T0 edges 0->2 and 1->2.
inline PropertyGraph small_graph() {
  PropertyGraph g;
  g.schema = small_schema();
  g.nodes = {
      {0, {"L0"}, {{"k0", Value::integer(1)}, {"k1", Value::integer(5)}, {"k2", Value::text("ab")}}},
      {1, {"L0"}, {{"k0", Value::integer(2)}, {"k2", Value::text("b")}}},
      {2, {"L1"}, {{"k3", Value::boolean(true)}}},
  };
  g.relationships = {
      {0, "T0", 0, 2, {{"k4", Value::floating(0.5)}}},
      {1, "T0", 1, 2, {}},
  };
  return g;
}

}  // namespace cypherdiff::testing

#endif  // CYPHERDIFF_TESTS_UNIT_TEST_UTIL_H_
