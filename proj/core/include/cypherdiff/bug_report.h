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

#ifndef CYPHERDIFF_BUG_REPORT_H_
#define CYPHERDIFF_BUG_REPORT_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cypherdiff/ast.h"
#include "cypherdiff/exec/outcome.h"
#include "cypherdiff/graph.h"
#include "cypherdiff/graph_gen.h"
#include "cypherdiff/oracle.h"

namespace cypherdiff {

const char* toolkit_version();

struct TargetRecord {
  std::string descriptor;
  std::string version;
  ExecOutcome outcome;
};

struct BugReport {
  std::uint64_t seed = 0;
  int iteration = 0;
  int query_index = 0;
  Verdict verdict;
  std::string toolkit_version;
  GraphSchema schema;
  std::vector<IndexSpec> indexes;
  PropertyGraph graph;
  Query query;
  // Query text before reduction, when reduction changed it.
  std::optional<std::string> original_query;
  std::vector<TargetRecord> outcomes;
};

class BundleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rows as JSON arrays; floats with 17 significant digits.
std::string outcomes_json(std::span<const TargetRecord> records);
std::vector<TargetRecord> parse_outcomes_json(std::string_view text);

std::string manifest_json(const BugReport& report);

// Writes manifest.json, schema.cypher, graph.cypher, query.cypher and
// outcomes.json into `dir`, creating it. Throws BundleError.
void emit_bug_report(const BugReport& report, const std::filesystem::path& dir);
BugReport load_bug_report(const std::filesystem::path& dir);

// Everything one campaign iteration executed.
struct CorpusIteration {
  GraphSchema schema;
  std::vector<IndexSpec> indexes;
  PropertyGraph graph;
  std::vector<Query> queries;
  std::vector<std::vector<TargetRecord>> outcomes;  // parallel to queries
};

// schema.cypher, graph.cypher, queries.cypher (one per line) and
// outcomes.jsonl (one line per query).
void emit_corpus_iteration(const CorpusIteration& iteration, const std::filesystem::path& dir);
CorpusIteration load_corpus_iteration(const std::filesystem::path& dir);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace cypherdiff

#endif  // CYPHERDIFF_BUG_REPORT_H_
