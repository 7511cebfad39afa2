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

#ifndef CYPHERDIFF_CONFIG_H_
#define CYPHERDIFF_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cypherdiff/graph_gen.h"

namespace cypherdiff {

struct CampaignConfig {
  std::vector<std::string> targets{"reference"};
  int num_generated = 100;  // per graph
  int num_mutated = 100;    // per graph
  double timeout_seconds = 1800;
  std::uint64_t seed = 0;
  std::optional<int> max_iterations;
  int query_timeout_ms = 10'000;
  GenLimits limits;
  int min_len = 3;
  int max_len = 6;
  int retention_min = 3;
  int retention_max = 6;
  int pool_capacity = 256;
  int index_count = 1;
  int graph_mutants = 50;  // 0 skips the graph mutation score
  bool frequency_feedback = true;
  bool stop_on_first_bug = false;
  bool reduce = true;
  int max_expression_depth = 3;
  std::string output_dir = "cypherdiff-out";

  // Throws ConfigError.
  void validate() const;
};

// Unknown keys and ill-typed values throw ConfigError.
CampaignConfig parse_config(std::string_view json_text);
CampaignConfig load_config(const std::string& path);
std::string to_json(const CampaignConfig& config);

}  // namespace cypherdiff

#endif  // CYPHERDIFF_CONFIG_H_
