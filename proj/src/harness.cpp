#include "semibandit/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

namespace semibandit {
namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::int64_t parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const long long out = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    // Allow 1e5-style horizons.
    try {
      std::size_t pos = 0;
      const double d = std::stod(v, &pos);
      if (pos == v.size() && d == std::floor(d) && std::abs(d) < 9e18) {
        return static_cast<std::int64_t>(d);
      }
    } catch (const std::exception&) {
    }
    throw ConfigError("key '" + key + "': expected an integer, got '" + v + "'");
  }
}

double parse_real(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double out = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': expected a number, got '" + v + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw ConfigError("key '" + key + "': expected a boolean, got '" + v + "'");
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

bool is_ftrl(const std::string& algo) {
  return algo == "hybrid" || algo == "exp2" || algo == "logbarrier" || algo == "bandit-hybrid";
}

void write_text(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out << text;
  out.close();
  if (!out) throw Error("write to '" + path.string() + "' failed");
}

}  // namespace

SetSpec parse_set_spec(std::string_view text) {
  SetSpec spec;
  if (text == "hypercube") {
    spec.kind = SetKind::kHypercube;
  } else if (text == "mset") {
    spec.kind = SetKind::kMSet;
  } else if (text.starts_with("enumerated:") && text.size() > 11) {
    spec.kind = SetKind::kEnumerated;
    spec.path = std::string(text.substr(11));
  } else {
    throw ConfigError("unknown action set '" + std::string(text) + "'");
  }
  return spec;
}

ActionSet build_action_set(const SetSpec& spec, int d, int m) {
  switch (spec.kind) {
    case SetKind::kHypercube:
      return ActionSet::hypercube(d);
    case SetKind::kMSet:
      return ActionSet::mset(d, m);
    case SetKind::kEnumerated: {
      ActionSet set = ActionSet::load_enumerated(spec.path);
      if (set.dim() != d) {
        throw DimensionError("enumerated set has dimension " + std::to_string(set.dim()) +
                             ", environment has " + std::to_string(d));
      }
      return set;
    }
  }
  throw ConfigError("unknown action set kind");
}

void ExperimentConfig::validate() const {
  env.validate();
  if (runs < 1) throw ConfigError("runs must be >= 1");
  if (log_points < 2) throw ConfigError("log_points must be >= 2");
  if (env.horizon < 10) throw ConfigError("horizon must be >= 10");
  if (algorithms.empty()) throw ConfigError("no algorithm selected");
  if (threads < 0) throw ConfigError("threads must be >= 0");
  if (!(learner.lr_scale > 0.0)) throw ConfigError("lr_scale must be positive");
}

std::map<std::string, std::string> read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected key=value");
    }
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

ExperimentConfig config_from_map(const std::map<std::string, std::string>& values) {
  ExperimentConfig c;
  for (const auto& [key, v] : values) {
    if (key == "env") {
      c.env.kind = parse_environment_kind(v);
    } else if (key == "set") {
      c.set = parse_set_spec(v);
    } else if (key == "algo") {
      c.algorithms = split_list(v);
    } else if (key == "d") {
      c.env.d = static_cast<int>(parse_int(key, v));
    } else if (key == "m") {
      c.env.m = static_cast<int>(parse_int(key, v));
    } else if (key == "gap") {
      c.env.gap = parse_real(key, v);
    } else if (key == "phase_base") {
      c.env.phase_base = parse_real(key, v);
    } else if (key == "horizon") {
      c.env.horizon = parse_int(key, v);
    } else if (key == "runs") {
      c.runs = static_cast<int>(parse_int(key, v));
    } else if (key == "seed") {
      c.base_seed = static_cast<std::uint64_t>(parse_int(key, v));
    } else if (key == "log_points") {
      c.log_points = static_cast<int>(parse_int(key, v));
    } else if (key == "out") {
      c.output = v;
    } else if (key == "summary") {
      c.summary = parse_bool(key, v);
    } else if (key == "gamma_override") {
      if (!v.empty()) c.learner.gamma_override = parse_real(key, v);
    } else if (key == "lr_scale") {
      c.learner.lr_scale = parse_real(key, v);
    } else if (key == "lr_grid") {
      c.lr_grid = parse_bool(key, v);
    } else if (key == "threads") {
      c.threads = static_cast<int>(parse_int(key, v));
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  return c;
}

std::vector<std::int64_t> log_times(std::int64_t horizon, int n) {
  if (horizon < 1 || n < 1) throw ConfigError("log_times needs horizon >= 1 and n >= 1");
  std::vector<std::int64_t> out;
  if (n >= horizon) {
    for (std::int64_t t = 1; t <= horizon; ++t) out.push_back(t);
    return out;
  }
  if (n == 1) return {horizon};
  const double log_t = std::log(static_cast<double>(horizon));
  std::int64_t prev = 0;
  for (int k = 0; k < n; ++k) {
    auto t = static_cast<std::int64_t>(std::llround(std::exp(log_t * k / (n - 1))));
    t = std::max(t, prev + 1);
    t = std::min(t, horizon - (n - 1 - k));
    out.push_back(t);
    prev = t;
  }
  out.back() = horizon;
  return out;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(base) ^ a) ^ b);
}

Action comparator_action(const ActionSet& set, const EnvironmentSpec& env) {
  Vector total(env.d, 0.0);
  if (env.kind == EnvironmentKind::kPhasedAdversarial) {
    std::int64_t start = 1;
    const auto lengths = phase_lengths(env.phase_base, env.horizon);
    for (std::size_t s = 0; s < lengths.size(); ++s) {
      const std::int64_t len = std::min(lengths[s], env.horizon - start + 1);
      const Vector mu = phased_means(start, env);
      for (int i = 0; i < env.d; ++i) total[i] += static_cast<double>(len) * mu[i];
      start += lengths[s];
    }
  } else {
    const Vector mu = env.kind == EnvironmentKind::kStochastic ? stochastic_means(env)
                                                               : bandit_means(env);
    for (int i = 0; i < env.d; ++i) total[i] = static_cast<double>(env.horizon) * mu[i];
  }
  for (double& v : total) v /= static_cast<double>(env.horizon);
  return set.linear_min_oracle(total);
}

std::vector<AlgorithmEntry> expand_algorithms(const ExperimentConfig& config) {
  std::vector<AlgorithmEntry> out;
  for (const auto& algo : config.algorithms) {
    if (config.lr_grid && is_ftrl(algo)) {
      for (int i = -5; i <= 5; ++i) {
        LearnerOptions opts = config.learner;
        opts.lr_scale = std::ldexp(1.0, i);
        out.push_back({algo + "@lr=2^" + std::to_string(i), algo, opts});
      }
    } else {
      out.push_back({algo, algo, config.learner});
    }
  }
  return out;
}

std::vector<TraceRow> run_single(const ExperimentConfig& config, int run, std::size_t algo_index,
                                 const RoundObserver& observer) {
  const auto algos = expand_algorithms(config);
  if (algo_index >= algos.size()) throw ConfigError("algorithm index out of range");
  const AlgorithmEntry& entry = algos[algo_index];
  const std::string env_name = environment_name(config.env.kind);
  std::int64_t t = 0;
  try {
    const ActionSet set = build_action_set(config.set, config.env.d, config.env.m);
    const Action best = comparator_action(set, config.env);
    std::unique_ptr<Learner> learner;
    if (entry.algo == "oracle") {
      learner = std::make_unique<FixedActionLearner>(best, "oracle");
    } else {
      learner = make_learner(entry.algo, set, entry.options);
    }
    const bool bandit = learner->feedback_kind() == FeedbackKind::kBandit;

    Environment env(config.env, derive_seed(config.base_seed, static_cast<std::uint64_t>(run),
                                            ~std::uint64_t{0}));
    Rng rng(derive_seed(config.base_seed, static_cast<std::uint64_t>(run), algo_index));

    std::vector<std::int64_t> times = log_times(config.env.horizon, config.log_points);
    for (std::int64_t x : config.extra_log_times) {
      if (x >= 1 && x <= config.env.horizon) times.push_back(x);
    }
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());

    std::vector<TraceRow> rows;
    rows.reserve(times.size());
    std::size_t next_log = 0;
    double regret = 0.0;
    Feedback feedback;
    for (t = 1; t <= config.env.horizon; ++t) {
      const LossRealization real = env.next();
      const Decision decision = learner->next_action(rng);
      const std::size_t d = real.loss.size();

      double inc = 0.0;
      if (decision.fractional) {
        const FractionalPoint& x = *decision.fractional;
        for (std::size_t i = 0; i < d; ++i) inc += (x[i] - best[i]) * real.mean[i];
      } else {
        for (std::size_t i = 0; i < d; ++i) {
          inc += (static_cast<double>(decision.action[i]) - best[i]) * real.mean[i];
        }
      }
      regret += inc;
      if (observer) observer(t, decision, real.mean, inc);

      feedback.action = decision.action;
      feedback.total_loss = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        if (decision.action[i]) feedback.total_loss += real.loss[i];
      }
      if (bandit) {
        feedback.observed.clear();
      } else {
        feedback.observed.assign(d, 0.0);
        for (std::size_t i = 0; i < d; ++i) {
          if (decision.action[i]) feedback.observed[i] = real.loss[i];
        }
      }
      learner->observe(feedback);

      if (next_log < times.size() && times[next_log] == t) {
        rows.push_back({t, run, entry.label, env_name, regret});
        ++next_log;
      }
    }
    return rows;
  } catch (const std::exception& e) {
    throw Error("algo=" + entry.label + " run=" + std::to_string(run) + " t=" +
                std::to_string(t) + ": " + e.what());
  }
}

RegretTrace run_experiment(const ExperimentConfig& config) {
  config.validate();
  const std::size_t n_algos = expand_algorithms(config).size();
  const std::size_t n_tasks = static_cast<std::size_t>(config.runs) * n_algos;
  std::vector<std::vector<TraceRow>> results(n_tasks);
  std::vector<std::exception_ptr> errors(n_tasks);

  std::size_t n_threads = config.threads > 0 ? static_cast<std::size_t>(config.threads)
                                             : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min(n_threads, n_tasks);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < n_tasks; k = next++) {
      try {
        results[k] = run_single(config, static_cast<int>(k / n_algos), k % n_algos);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  RegretTrace trace;
  for (auto& rows : results) {
    trace.rows.insert(trace.rows.end(), std::make_move_iterator(rows.begin()),
                      std::make_move_iterator(rows.end()));
  }
  return trace;
}

std::vector<SummaryRow> summarize(const RegretTrace& trace) {
  if (trace.rows.empty()) throw Error("cannot summarize an empty trace");
  std::vector<std::string> order;
  std::map<std::string, std::map<std::int64_t, std::vector<double>>> groups;
  std::map<std::string, std::string> env_of;
  for (const auto& row : trace.rows) {
    if (!groups.count(row.algo)) order.push_back(row.algo);
    groups[row.algo][row.t].push_back(row.pseudo_regret);
    env_of[row.algo] = row.env;
  }
  std::vector<SummaryRow> out;
  for (const auto& algo : order) {
    for (const auto& [t, values] : groups[algo]) {
      const double n = static_cast<double>(values.size());
      double mean = 0.0;
      for (double v : values) mean += v;
      mean /= n;
      double se = 0.0;
      if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - mean) * (v - mean);
        se = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
      }
      out.push_back({t, algo, env_of[algo], mean, se, static_cast<int>(values.size())});
    }
  }
  return out;
}

std::string to_csv(const RegretTrace& trace) {
  std::string out = "t,run,algo,env,pseudo_regret\n";
  for (const auto& r : trace.rows) {
    out += std::to_string(r.t) + "," + std::to_string(r.run) + "," + r.algo + "," + r.env + "," +
           format_double(r.pseudo_regret) + "\n";
  }
  return out;
}

std::string to_csv(const std::vector<SummaryRow>& summary) {
  std::string out = "t,algo,env,mean,se,runs\n";
  for (const auto& r : summary) {
    out += std::to_string(r.t) + "," + r.algo + "," + r.env + "," + format_double(r.mean) + "," +
           format_double(r.se) + "," + std::to_string(r.runs) + "\n";
  }
  return out;
}

void write_csv(const RegretTrace& trace, const std::filesystem::path& path) {
  write_text(to_csv(trace), path);
}

void write_csv(const std::vector<SummaryRow>& summary, const std::filesystem::path& path) {
  write_text(to_csv(summary), path);
}

}  // namespace semibandit
