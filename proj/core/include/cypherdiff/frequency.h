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

#ifndef CYPHERDIFF_FREQUENCY_H_
#define CYPHERDIFF_FREQUENCY_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cypherdiff/ast.h"
#include "cypherdiff/graph.h"
#include "cypherdiff/rng.h"

namespace cypherdiff {

// Per-key usage counts over queries that returned rows.
class FrequencyList {
 public:
  FrequencyList() = default;
  // All schema keys at zero.
  explicit FrequencyList(const GraphSchema& schema);

  std::int64_t count(const std::string& key) const;
  void add(const std::string& key, std::int64_t n = 1) { counts_[key] += n; }
  const std::map<std::string, std::int64_t>& counts() const { return counts_; }
  bool operator==(const FrequencyList&) const = default;

 private:
  std::map<std::string, std::int64_t> counts_;
};

// P_i = (S - F_i) / ((N - 1) S) with S the candidates' total; uniform when
// S == 0, {1} when N == 1. Throws std::invalid_argument on no candidates.
std::vector<double> selection_probabilities(
    std::span<const std::string> candidates, const FrequencyList& freq);

std::string select_property_key(std::span<const std::string> candidates,
                                 const FrequencyList& freq, Rng& rng);

// Occurrences of each key in property accesses and pattern property maps.
std::map<std::string, std::int64_t> key_occurrences(const Query& query);

FrequencyList update_frequencies(const FrequencyList& freq, const Query& query);
// No-op unless the query's execution returned rows.
FrequencyList update_frequencies(const FrequencyList& freq, const Query& query,
                                 bool non_empty);

}  // namespace cypherdiff

#endif  // CYPHERDIFF_FREQUENCY_H_
