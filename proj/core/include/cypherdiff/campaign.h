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

#ifndef CYPHERDIFF_CAMPAIGN_H_
#define CYPHERDIFF_CAMPAIGN_H_

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "cypherdiff/bug_report.h"
#include "cypherdiff/config.h"
#include "cypherdiff/metrics.h"

namespace cypherdiff {

struct CampaignOptions {
  std::ostream* log = nullptr;
  // Write bundles, corpus and summary under config.output_dir.
  bool write_output = true;
  // Replace a previous campaign's files in the output directory.
  bool overwrite = false;
  // Keep every executed query in CampaignResult::corpus.
  bool keep_corpus = false;
};

struct CampaignResult {
  std::vector<BugReport> bugs;
  std::vector<std::filesystem::path> bundle_dirs;
  MetricsReport metrics;
  int iterations = 0;
  int skipped_iterations = 0;
  std::size_t generated = 0;
  std::size_t mutated = 0;
  std::size_t mutation_fallbacks = 0;
  std::size_t generation_failures = 0;
  std::size_t self_check_failures = 0;
  std::map<std::string, std::size_t> verdicts;
  std::vector<std::string> diagnostics;
  std::vector<CorpusEntry> corpus;
  std::chrono::duration<double> elapsed{0};
};

// Throws ConfigError on invalid config or output directory, SetupError when
// targets cannot be set up, BundleError on I/O failure.
CampaignResult run_campaign(const CampaignConfig& config, const CampaignOptions& options = {});

std::string summary_json(const CampaignConfig& config, const CampaignResult& result);

struct ReplayResult {
  Verdict verdict;
  std::vector<TargetRecord> outcomes;
  bool reproduced = false;
};

// Runs the bundle's query on `targets` (the recorded ones when empty).
ReplayResult replay(const BugReport& report, const std::vector<std::string>& targets = {},
                    int query_timeout_ms = 10'000);

// Minimizes the query while the recorded verdict persists; the report is
// returned unchanged when the verdict does not reproduce.
BugReport reduce_report(const BugReport& report, const std::vector<std::string>& targets = {},
                        int query_timeout_ms = 10'000);

}  // namespace cypherdiff

#endif  // CYPHERDIFF_CAMPAIGN_H_
