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

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cypherdiff/bug_report.h"
#include "cypherdiff/campaign.h"
#include "cypherdiff/config.h"
#include "cypherdiff/errors.h"
#include "cypherdiff/exec/reference.h"
#include "cypherdiff/metrics.h"
#include "cypherdiff/render.h"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace cypherdiff;

namespace {

constexpr int kExitClean = 0;
constexpr int kExitBugs = 1;
constexpr int kExitError = 2;

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct FuzzFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> timeout;
  std::optional<int> num_generated;
  std::optional<int> num_mutated;
  std::optional<int> min_len;
  std::optional<int> max_len;
  std::optional<int> max_iterations;
  std::optional<std::string> targets;
  std::optional<std::string> out;
  bool stop_on_first_bug = false;
  bool no_reduce = false;
  bool overwrite = false;
  bool quiet = false;
};

int run_fuzz(const FuzzFlags& f) {
  CampaignConfig config = f.config_path.empty() ? CampaignConfig{} : load_config(f.config_path);
  if (f.seed) config.seed = *f.seed;
  if (f.timeout) config.timeout_seconds = *f.timeout;
  if (f.num_generated) config.num_generated = *f.num_generated;
  if (f.num_mutated) config.num_mutated = *f.num_mutated;
  if (f.min_len) config.min_len = *f.min_len;
  if (f.max_len) config.max_len = *f.max_len;
  if (f.max_iterations) config.max_iterations = *f.max_iterations;
  if (f.targets) config.targets = split_list(*f.targets);
  if (f.out) config.output_dir = *f.out;
  if (f.stop_on_first_bug) config.stop_on_first_bug = true;
  if (f.no_reduce) config.reduce = false;
  config.validate();

  CampaignOptions options;
  options.log = f.quiet ? nullptr : &std::cerr;
  options.overwrite = f.overwrite;
  const CampaignResult r = run_campaign(config, options);
  std::cout << r.iterations << " iteration(s), " << r.metrics.queries << " queries, "
            << r.bugs.size() << " bug(s); results in " << config.output_dir << "\n";
  for (const auto& dir : r.bundle_dirs) std::cout << "  " << dir.string() << "\n";
  return r.bugs.empty() ? kExitClean : kExitBugs;
}

int run_replay(const std::string& bundle, const std::string& targets, int timeout_ms) {
  const BugReport report = load_bug_report(bundle);
  const ReplayResult r = replay(report, split_list(targets), timeout_ms);
  std::cout << "recorded: " << to_string(report.verdict.kind) << "\n"
            << "replayed: " << to_string(r.verdict.kind) << "\n"
            << (r.reproduced ? "reproduced" : "not reproduced") << "\n";
  if (!r.verdict.details.empty()) std::cout << r.verdict.details << "\n";
  return r.verdict.is_bug() ? kExitBugs : kExitClean;
}

int run_reduce(const std::string& bundle, const std::string& targets, int timeout_ms,
               std::string out) {
  const BugReport report = load_bug_report(bundle);
  const BugReport reduced = reduce_report(report, split_list(targets), timeout_ms);
  if (out.empty()) out = fs::path(bundle).lexically_normal().string() + "-reduced";
  emit_bug_report(reduced, out);
  std::cout << render(reduced.query) << "\n" << "written to " << out << "\n";
  return reduced.verdict.is_bug() ? kExitBugs : kExitClean;
}

int run_metrics(const std::string& dir, int graph_mutants, std::uint64_t seed) {
  fs::path root = dir;
  if (fs::is_directory(root / "corpus")) root /= "corpus";
  std::vector<fs::path> iterations;
  for (const auto& e : fs::directory_iterator(root)) {
    if (e.is_directory()) iterations.push_back(e.path());
  }
  std::sort(iterations.begin(), iterations.end());
  MetricsAccumulator metrics;
  for (const auto& p : iterations) {
    const CorpusIteration it = load_corpus_iteration(p);
    for (std::size_t i = 0; i < it.queries.size(); ++i) {
      std::vector<ExecOutcome> outcomes;
      for (const auto& rec : it.outcomes[i]) outcomes.push_back(rec.outcome);
      metrics.add(it.queries[i], outcomes);
    }
    if (graph_mutants > 0) {
      Rng rng(seed);
      const auto mutants = generate_graph_mutants(it.graph, graph_mutants, rng);
      const Evaluator eval = [](const PropertyGraph& g, const Query& q) {
        return reference_eval(g, q);
      };
      metrics.add_mutation_score(graph_mutation_score(it.queries, it.graph, mutants, eval));
    }
  }
  const MetricsReport report = metrics.report();
  if (report.queries == 0) throw UndefinedMetric("corpus " + dir + " holds no queries");
  std::cout << to_json(report);
  return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential tester for Cypher graph database engines"};
  app.require_subcommand(1);
  app.set_version_flag("--version", toolkit_version());

  FuzzFlags fuzz;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Run a differential testing campaign");
  fuzz_cmd->add_option("--config", fuzz.config_path, "Campaign config (JSON)")->check(CLI::ExistingFile);
  fuzz_cmd->add_option("--seed", fuzz.seed, "RNG seed");
  fuzz_cmd->add_option("--timeout", fuzz.timeout, "Wall-clock budget in seconds");
  fuzz_cmd->add_option("--num-generated", fuzz.num_generated, "Generated queries per graph");
  fuzz_cmd->add_option("--num-mutated", fuzz.num_mutated, "Mutated queries per graph");
  fuzz_cmd->add_option("--min-len", fuzz.min_len, "Minimum clause count");
  fuzz_cmd->add_option("--max-len", fuzz.max_len, "Maximum clause count");
  fuzz_cmd->add_option("--max-iterations", fuzz.max_iterations, "Stop after this many graphs");
  fuzz_cmd->add_option("--targets", fuzz.targets, "Comma-separated target descriptors");
  fuzz_cmd->add_option("--out", fuzz.out, "Output directory");
  fuzz_cmd->add_flag("--stop-on-first-bug", fuzz.stop_on_first_bug, "Stop at the first bug");
  fuzz_cmd->add_flag("--no-reduce", fuzz.no_reduce, "Keep bug queries unreduced");
  fuzz_cmd->add_flag("--overwrite", fuzz.overwrite, "Replace results of a previous campaign");
  fuzz_cmd->add_flag("--quiet", fuzz.quiet, "No progress log");

  std::string bundle;
  std::string targets;
  int query_timeout_ms = 10'000;
  auto* replay_cmd = app.add_subcommand("replay", "Re-run a bug bundle and compare verdicts");
  replay_cmd->add_option("bundle", bundle, "Bundle directory")->required()->check(CLI::ExistingDirectory);
  replay_cmd->add_option("--targets", targets, "Override the recorded targets");
  replay_cmd->add_option("--query-timeout-ms", query_timeout_ms, "Per-query time limit");

  std::string reduce_out;
  auto* reduce_cmd = app.add_subcommand("reduce", "Minimize a bug bundle's query");
  reduce_cmd->add_option("bundle", bundle, "Bundle directory")->required()->check(CLI::ExistingDirectory);
  reduce_cmd->add_option("--targets", targets, "Override the recorded targets");
  reduce_cmd->add_option("--query-timeout-ms", query_timeout_ms, "Per-query time limit");
  reduce_cmd->add_option("--out", reduce_out, "Output bundle (default <bundle>-reduced)");

  std::string corpus_dir;
  int graph_mutants = 0;
  std::uint64_t mutant_seed = 0;
  auto* metrics_cmd = app.add_subcommand("metrics", "Compute metrics over a campaign corpus");
  metrics_cmd->add_option("corpus", corpus_dir, "Campaign output or corpus directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  metrics_cmd->add_option("--graph-mutants", graph_mutants, "Mutants per graph for the mutation score");
  metrics_cmd->add_option("--seed", mutant_seed, "Seed for mutant selection");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitClean : kExitError;
  }

  try {
    if (*fuzz_cmd) return run_fuzz(fuzz);
    if (*replay_cmd) return run_replay(bundle, targets, query_timeout_ms);
    if (*reduce_cmd) return run_reduce(bundle, targets, query_timeout_ms, reduce_out);
    if (*metrics_cmd) return run_metrics(corpus_dir, graph_mutants, mutant_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
