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

#include "cypherdiff/campaign.h"

#include <algorithm>
#include <cstdio>
#include <memory>
#include <optional>
#include <set>

#include "cypherdiff/completion.h"
#include "cypherdiff/errors.h"
#include "cypherdiff/exec/reference.h"
#include "cypherdiff/exec/target.h"
#include "cypherdiff/frequency.h"
#include "cypherdiff/graph_gen.h"
#include "cypherdiff/mutation.h"
#include "cypherdiff/reducer.h"
#include "cypherdiff/render.h"
#include "cypherdiff/skeleton.h"
#include "json.hpp"

namespace cypherdiff {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Consecutive failed setups, before any success, that abort a campaign.
constexpr int kSetupAttempts = 3;

std::string numbered(std::size_t n) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04zu", n);
  return buf;
}

bool is_campaign_entry(const fs::path& p) {
  const std::string name = p.filename().string();
  if (name == "summary.json" || name == "timing.json" || name == "corpus") return true;
  return name.size() >= 4 && name.find_first_not_of("0123456789") == std::string::npos;
}

void prepare_output(const fs::path& dir, bool overwrite) {
  std::error_code ec;
  if (fs::exists(dir)) {
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (!is_campaign_entry(entry.path())) continue;
      if (!overwrite) {
        throw ConfigError("output directory " + dir.string() +
                          " already holds campaign results (use --overwrite)");
      }
      fs::remove_all(entry.path(), ec);
      if (ec) throw BundleError("cannot clear " + entry.path().string() + ": " + ec.message());
    }
  }
  fs::create_directories(dir, ec);
  if (ec) throw BundleError("cannot create " + dir.string() + ": " + ec.message());
}

struct Fleet {
  std::vector<EngineTarget> targets;
  std::vector<std::unique_ptr<TargetSession>> sessions;

  explicit Fleet(const std::vector<std::string>& descriptors) {
    for (const auto& d : descriptors) {
      targets.push_back(parse_target(d));
      sessions.push_back(open_session(targets.back()));
    }
  }

  void setup(const PropertyGraph& graph, const std::vector<IndexSpec>& indexes) {
    for (auto& s : sessions) s->setup(graph, indexes);
  }

  std::vector<ExecOutcome> execute(const Query& query, std::chrono::milliseconds limit) {
    std::vector<ExecOutcome> out;
    out.reserve(sessions.size());
    for (auto& s : sessions) out.push_back(s->execute(query, limit));
    return out;
  }

  Verdict judge(std::span<const ExecOutcome> outcomes) const {
    return outcomes.size() >= 2 ? compare(outcomes) : crash_only(outcomes[0]);
  }

  std::vector<TargetRecord> records(std::vector<ExecOutcome> outcomes) const {
    std::vector<TargetRecord> out;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      out.push_back({targets[i].descriptor, sessions[i]->version(), std::move(outcomes[i])});
    }
    return out;
  }
};

// Reduces `query` on an already set-up fleet while the verdict kind holds.
Query reduce_on(Fleet& fleet, const Query& query, const GraphSchema& schema, VerdictKind kind,
                std::chrono::milliseconds limit) {
  return reduce_query(query, schema, [&](const Query& candidate) {
    const auto outcomes = fleet.execute(candidate, limit);
    return fleet.judge(outcomes).kind == kind;
  });
}

}  // namespace

CampaignResult run_campaign(const CampaignConfig& config, const CampaignOptions& options) {
  config.validate();
  const auto start = Clock::now();
  const fs::path out_dir = config.output_dir;
  if (options.write_output) prepare_output(out_dir, options.overwrite);

  Fleet fleet(config.targets);
  const EngineCaps caps = common_caps(fleet.targets);
  const std::chrono::milliseconds limit(config.query_timeout_ms);
  const auto budget = std::chrono::duration<double>(config.timeout_seconds);
  auto log = [&](const std::string& line) {
    if (options.log) *options.log << line << '\n' << std::flush;
  };

  CampaignResult result;
  MetricsAccumulator metrics;
  const Rng root(config.seed);
  bool any_setup = false;
  int failed_setups = 0;
  bool stop = false;

  for (int iter = 0; !stop; ++iter) {
    if (config.max_iterations && iter >= *config.max_iterations) break;
    if (Clock::now() - start >= budget) break;
    const Rng it_rng = root.child("iteration", static_cast<std::uint64_t>(iter));

    Rng schema_rng = it_rng.child("schema");
    Rng graph_rng = it_rng.child("graph");
    Rng index_rng = it_rng.child("indexes");
    GraphSchema schema;
    PropertyGraph graph;
    try {
      schema = generate_schema(schema_rng, config.limits);
      graph = generate_graph(graph_rng, schema, config.limits);
    } catch (const GenerationError& e) {
      ++result.skipped_iterations;
      result.diagnostics.push_back("iteration " + std::to_string(iter) + ": " + e.what());
      continue;
    }
    const std::vector<IndexSpec> indexes = generate_indexes(index_rng, schema, config.index_count);

    try {
      fleet.setup(graph, indexes);
      any_setup = true;
    } catch (const SetupError& e) {
      ++result.skipped_iterations;
      result.diagnostics.push_back("iteration " + std::to_string(iter) + ": " + e.what());
      log("iteration " + std::to_string(iter) + " skipped: " + e.what());
      if (!any_setup && ++failed_setups >= kSetupAttempts) {
        throw SetupError(std::string("target setup failed repeatedly; last error: ") + e.what());
      }
      continue;
    }

    CompletionOptions copts;
    copts.max_depth = config.max_expression_depth;
    copts.literals = config.limits;
    copts.expected_nodes = std::max(1, config.limits.node_count);
    copts.expected_relationships = config.limits.relationship_count;
    const Completer completer(schema, copts);
    const Mutator mutator(completer, static_cast<std::size_t>(config.max_len), caps);
    QueryPool pool({static_cast<std::size_t>(config.pool_capacity),
                    static_cast<std::size_t>(config.retention_min),
                    static_cast<std::size_t>(config.retention_max)},
                   &schema);
    FrequencyList freq(schema);

    std::vector<GraphMutant> mutants;
    if (config.graph_mutants > 0) {
      Rng mutant_rng = it_rng.child("mutants");
      mutants = generate_graph_mutants(graph, config.graph_mutants, mutant_rng);
    }
    std::vector<std::set<std::size_t>> kill_sets;
    const Evaluator reference = [&](const PropertyGraph& g, const Query& q) {
      EvalOptions eo;
      eo.deadline = Clock::now() + limit;
      return reference_eval(g, q, eo);
    };

    CorpusIteration corpus;
    const int total = config.num_generated + config.num_mutated;
    int executed = 0;
    int bugs_here = 0;
    for (int qi = 0; qi < total && !stop; ++qi) {
      if (Clock::now() - start >= budget) {
        stop = true;
        break;
      }
      Rng qr = it_rng.child("query", static_cast<std::uint64_t>(qi));
      std::optional<Query> query;
      try {
        if (qi >= config.num_generated) {
          try {
            query = mutator.mutate(pool, freq, qr).query;
            ++result.mutated;
          } catch (const PoolEmptyError&) {
            ++result.mutation_fallbacks;
          } catch (const StrategyInapplicable&) {
            ++result.mutation_fallbacks;
          }
        }
        if (!query) {
          const auto len = static_cast<int>(qr.uniform_int(config.min_len, config.max_len));
          query = completer.fill_skeleton(generate_skeleton(qr, len, caps), freq, qr);
          ++result.generated;
        }
      } catch (const GenerationError&) {
        ++result.generation_failures;
        continue;
      } catch (const CompletionError&) {
        ++result.generation_failures;
        continue;
      }

      std::vector<ExecOutcome> outcomes = fleet.execute(*query, limit);
      const Verdict verdict = fleet.judge(outcomes);
      ++executed;
      ++result.verdicts[to_string(verdict.kind)];
      if (verdict.self_check_failure) {
        ++result.self_check_failures;
        log("self-check failure: " + render(*query) + " -- " + verdict.details);
      }
      metrics.add(*query, outcomes);
      if (!mutants.empty()) {
        kill_sets.push_back(kill_set(*query, reference(graph, *query), mutants, reference));
      }
      const bool non_empty = std::any_of(outcomes.begin(), outcomes.end(),
                                         [](const ExecOutcome& o) { return o.non_empty(); });
      pool.admit(*query, non_empty);
      if (config.frequency_feedback) freq = update_frequencies(freq, *query, non_empty);
      if (options.keep_corpus) result.corpus.push_back({*query, outcomes});

      if (verdict.is_bug()) {
        BugReport report;
        report.seed = config.seed;
        report.iteration = iter;
        report.query_index = qi;
        report.toolkit_version = toolkit_version();
        report.schema = schema;
        report.indexes = indexes;
        report.graph = graph;
        report.query = *query;
        report.verdict = verdict;
        report.outcomes = fleet.records(outcomes);
        if (config.reduce) {
          const Query reduced = reduce_on(fleet, *query, schema, verdict.kind, limit);
          if (!query_equal(reduced, *query)) {
            const auto again = fleet.execute(reduced, limit);
            const Verdict v2 = fleet.judge(again);
            if (v2.kind == verdict.kind) {
              report.original_query = render(*query);
              report.query = reduced;
              report.verdict = v2;
              report.outcomes = fleet.records(again);
            }
          }
        }
        log("bug " + std::to_string(result.bugs.size()) + " (" + to_string(report.verdict.kind) +
            "): " + render(report.query));
        if (options.write_output) {
          const fs::path dir = out_dir / numbered(result.bugs.size());
          emit_bug_report(report, dir);
          result.bundle_dirs.push_back(dir);
        }
        result.bugs.push_back(std::move(report));
        ++bugs_here;
        if (config.stop_on_first_bug) stop = true;
      }
      corpus.queries.push_back(*query);
      corpus.outcomes.push_back(fleet.records(std::move(outcomes)));
    }
    if (!mutants.empty()) metrics.add_mutation_score(count_distinct_kill_sets(kill_sets));
    if (options.write_output) {
      corpus.schema = schema;
      corpus.indexes = indexes;
      corpus.graph = graph;
      emit_corpus_iteration(corpus, out_dir / "corpus" / numbered(static_cast<std::size_t>(iter)));
    }
    ++result.iterations;
    log("iteration " + std::to_string(iter) + ": " + std::to_string(executed) + " queries, " +
        std::to_string(bugs_here) + " bug(s)");
  }
  if (result.iterations == 0 && result.skipped_iterations > 0) {
    throw SetupError("every iteration failed target setup");
  }
  result.metrics = metrics.report();
  result.elapsed = Clock::now() - start;
  if (options.write_output) {
    write_file(out_dir / "summary.json", summary_json(config, result));
    nlohmann::ordered_json timing;
    timing["elapsed_seconds"] = result.elapsed.count();
    write_file(out_dir / "timing.json", timing.dump(2) + "\n");
  }
  return result;
}

std::string summary_json(const CampaignConfig& config, const CampaignResult& result) {
  nlohmann::ordered_json j;
  j["toolkit_version"] = toolkit_version();
  j["config"] = nlohmann::ordered_json::parse(to_json(config));
  j["config"].erase("output_dir");  // runs compared byte-for-byte differ only here
  j["iterations"] = result.iterations;
  j["skipped_iterations"] = result.skipped_iterations;
  j["generated"] = result.generated;
  j["mutated"] = result.mutated;
  j["mutation_fallbacks"] = result.mutation_fallbacks;
  j["generation_failures"] = result.generation_failures;
  j["self_check_failures"] = result.self_check_failures;
  j["verdicts"] = result.verdicts;
  auto bugs = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < result.bugs.size(); ++i) {
    bugs.push_back({{"bundle", numbered(i)},
                    {"verdict", to_string(result.bugs[i].verdict.kind)},
                    {"iteration", result.bugs[i].iteration},
                    {"query_index", result.bugs[i].query_index}});
  }
  j["bugs"] = bugs;
  j["diagnostics"] = result.diagnostics;
  j["metrics"] = nlohmann::ordered_json::parse(to_json(result.metrics));
  return j.dump(2) + "\n";
}

namespace {

std::vector<std::string> replay_targets(const BugReport& report,
                                        const std::vector<std::string>& targets) {
  if (!targets.empty()) return targets;
  std::vector<std::string> out;
  for (const auto& r : report.outcomes) out.push_back(r.descriptor);
  if (out.empty()) throw ConfigError("bundle records no targets");
  return out;
}

}  // namespace

ReplayResult replay(const BugReport& report, const std::vector<std::string>& targets,
                    int query_timeout_ms) {
  Fleet fleet(replay_targets(report, targets));
  fleet.setup(report.graph, report.indexes);
  auto outcomes = fleet.execute(report.query, std::chrono::milliseconds(query_timeout_ms));
  ReplayResult r;
  r.verdict = fleet.judge(outcomes);
  r.reproduced = r.verdict.kind == report.verdict.kind;
  r.outcomes = fleet.records(std::move(outcomes));
  return r;
}

BugReport reduce_report(const BugReport& report, const std::vector<std::string>& targets,
                        int query_timeout_ms) {
  Fleet fleet(replay_targets(report, targets));
  fleet.setup(report.graph, report.indexes);
  const std::chrono::milliseconds limit(query_timeout_ms);
  if (fleet.judge(fleet.execute(report.query, limit)).kind != report.verdict.kind) return report;
  const Query reduced = reduce_on(fleet, report.query, report.schema, report.verdict.kind, limit);
  if (query_equal(reduced, report.query)) return report;
  auto outcomes = fleet.execute(reduced, limit);
  BugReport out = report;
  if (!out.original_query) out.original_query = render(report.query);
  out.query = reduced;
  out.verdict = fleet.judge(outcomes);
  out.outcomes = fleet.records(std::move(outcomes));
  return out;
}

}  // namespace cypherdiff
