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

#include "cypherdiff/frequency.h"

#include <stdexcept>
#include <variant>

namespace cypherdiff {

FrequencyList::FrequencyList(const GraphSchema& schema) {
  for (const auto& key : schema.keys) counts_[key.name] = 0;
}

std::int64_t FrequencyList::count(const std::string& key) const {
  auto it = counts_.find(key);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<double> selection_probabilities(
    std::span<const std::string> candidates, const FrequencyList& freq) {
  if (candidates.empty()) {
    throw std::invalid_argument("select_property_key: no candidate keys");
  }
  const std::size_t n = candidates.size();
  if (n == 1) return {1.0};
  double total = 0;
  for (const auto& key : candidates) total += static_cast<double>(freq.count(key));
  std::vector<double> p(n, 1.0 / static_cast<double>(n));
  if (total == 0) return p;
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = (total - static_cast<double>(freq.count(candidates[i]))) /
           (static_cast<double>(n - 1) * total);
  }
  return p;
}

std::string select_property_key(std::span<const std::string> candidates,
                                 const FrequencyList& freq, Rng& rng) {
  const auto p = selection_probabilities(candidates, freq);
  return candidates[rng.weighted_index(p)];
}

std::map<std::string, std::int64_t> key_occurrences(const Query& query) {
  std::map<std::string, std::int64_t> out;
  for (const Clause& clause : query.clauses) {
    const auto* m = std::get_if<MatchClause>(&clause);
    if (!m) continue;
    for (const Pattern& p : m->patterns) {
      for (const auto& n : p.nodes) {
        for (const auto& [key, v] : n.properties) ++out[key];
      }
      for (const auto& r : p.rels) {
        for (const auto& [key, v] : r.properties) ++out[key];
      }
    }
  }
  for_each_expression(query, [&](const Expression& root) {
    visit(root, [&](const Expression& e) {
      if (e.op == ExprOp::kProperty) ++out[e.key];
    });
  });
  return out;
}

FrequencyList update_frequencies(const FrequencyList& freq, const Query& query) {
  FrequencyList out = freq;
  for (const auto& [key, n] : key_occurrences(query)) out.add(key, n);
  return out;
}

FrequencyList update_frequencies(const FrequencyList& freq, const Query& query,
                                 bool non_empty) {
  return non_empty ? update_frequencies(freq, query) : freq;
}

}  // namespace cypherdiff
