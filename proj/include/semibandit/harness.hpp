#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "semibandit/action_set.hpp"
#include "semibandit/environments.hpp"
#include "semibandit/learners.hpp"

namespace semibandit {

struct SetSpec {
  SetKind kind = SetKind::kMSet;
  std::filesystem::path path;  // enumerated sets only
};

// "hypercube", "mset" or "enumerated:<file>".
SetSpec parse_set_spec(std::string_view text);
ActionSet build_action_set(const SetSpec& spec, int d, int m);

struct ExperimentConfig {
  EnvironmentSpec env;
  SetSpec set;
  // Learner names accepted by make_learner, plus "oracle" (always plays x*).
  std::vector<std::string> algorithms{"hybrid"};
  int runs = 20;
  std::uint64_t base_seed = 1;
  int log_points = 50;
  // Rounds logged in addition to the geometric grid.
  std::vector<std::int64_t> extra_log_times;
  std::filesystem::path output;
  bool summary = false;
  LearnerOptions learner;
  // Sweep lr_scale over 2^i, i = -5..5, for the FTRL learners.
  bool lr_grid = false;
  // 0 means hardware concurrency.
  int threads = 0;

  void validate() const;
};

// Flat key=value file; '#' starts a comment line.
std::map<std::string, std::string> read_config_file(const std::filesystem::path& path);

// Keys: env, set, algo, d, m, gap, phase_base, horizon, runs, seed,
// log_points, out, summary, gamma_override, lr_scale, lr_grid, threads.
// Unknown keys are errors.
ExperimentConfig config_from_map(const std::map<std::string, std::string>& values);

// Geometrically spaced rounds in [1, horizon], min(n, horizon) of them,
// always ending at horizon.
std::vector<std::int64_t> log_times(std::int64_t horizon, int n);

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b);

struct TraceRow {
  std::int64_t t;
  int run;
  std::string algo;
  std::string env;
  double pseudo_regret;
};

struct RegretTrace {
  std::vector<TraceRow> rows;
};

struct SummaryRow {
  std::int64_t t;
  std::string algo;
  std::string env;
  double mean;
  double se;
  int runs;
};

// Per-round callback: round, decision, mean vector, regret increment.
using RoundObserver = std::function<void(std::int64_t, const Decision&, const Vector&, double)>;

// Best vertex for the average mean vector over the horizon.
Action comparator_action(const ActionSet& set, const EnvironmentSpec& env);

struct AlgorithmEntry {
  std::string label;
  std::string algo;
  LearnerOptions options;
};

std::vector<AlgorithmEntry> expand_algorithms(const ExperimentConfig& config);

// One (run, algorithm) pair, sequentially.
std::vector<TraceRow> run_single(const ExperimentConfig& config, int run, std::size_t algo_index,
                                 const RoundObserver& observer = {});

// All pairs, in parallel. Rows are ordered by (run, algo, t).
RegretTrace run_experiment(const ExperimentConfig& config);

// Mean and standard error per (algo, t), in first-seen algorithm order.
std::vector<SummaryRow> summarize(const RegretTrace& trace);

void write_csv(const RegretTrace& trace, const std::filesystem::path& path);
void write_csv(const std::vector<SummaryRow>& summary, const std::filesystem::path& path);
std::string to_csv(const RegretTrace& trace);
std::string to_csv(const std::vector<SummaryRow>& summary);

}  // namespace semibandit
