#include "semibandit/learners.hpp"

#include <algorithm>
#include <cmath>

#include "semibandit/sampling.hpp"

namespace semibandit {
namespace {

void check_round_inputs(std::span<const std::uint8_t> action, std::span<const double> x,
                        std::size_t n) {
  if (action.size() != x.size() || n != x.size()) {
    throw DimensionError("estimator inputs differ in length");
  }
}

Action sample_from(const ActionSet& set, const FtrlSolver& solver, std::span<const double> x,
                   Rng& rng) {
  switch (set.kind()) {
    case SetKind::kHypercube:
      return sample_hypercube(x, rng);
    case SetKind::kMSet:
      return sample_mset(x, set.subset_size(), rng);
    case SetKind::kEnumerated:
      return sample_enumerated(set, solver.weights(), rng);
  }
  return {};
}

// Draw from Beta(a, b) as a ratio of gamma variates.
double sample_beta(double a, double b, Rng& rng) {
  std::gamma_distribution<double> ga(a, 1.0);
  std::gamma_distribution<double> gb(b, 1.0);
  const double x = ga(rng);
  const double y = gb(rng);
  return x / (x + y);
}

}  // namespace

Vector semibandit_estimate(std::span<const double> observed, std::span<const std::uint8_t> action,
                           std::span<const double> x) {
  check_round_inputs(action, x, observed.size());
  Vector est(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (action[i]) {
      if (!(x[i] > 0.0)) throw Error("played arm has zero probability in the iterate");
      est[i] = (observed[i] + 1.0) / x[i] - 1.0;
    } else {
      est[i] = -1.0;
    }
  }
  return est;
}

Vector importance_weighted_estimate(std::span<const double> observed,
                                    std::span<const std::uint8_t> action,
                                    std::span<const double> x) {
  check_round_inputs(action, x, observed.size());
  Vector est(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!action[i]) continue;
    if (!(x[i] > 0.0)) throw Error("played arm has zero probability in the iterate");
    est[i] = observed[i] / x[i];
  }
  return est;
}

Vector bandit_estimate(double total_loss, std::span<const std::uint8_t> action,
                       std::span<const double> x) {
  check_round_inputs(action, x, x.size());
  Vector est(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (action[i]) {
      if (!(x[i] > 0.0)) throw Error("played arm has zero probability in the iterate");
      est[i] = total_loss / x[i];
    } else {
      if (!(x[i] < 1.0)) throw Error("skipped arm has probability one in the iterate");
      est[i] = -total_loss / (1.0 - x[i]);
    }
  }
  return est;
}

double learning_rate(LearningRate schedule, std::int64_t t) {
  if (t < 1) throw ConfigError("rounds start at 1");
  const double td = static_cast<double>(t);
  switch (schedule) {
    case LearningRate::kInverseSqrt:
      return 1.0 / std::sqrt(td);
    case LearningRate::kQuarterInverseSqrt:
      return 1.0 / (4.0 * std::sqrt(td));
    case LearningRate::kLogBarrier:
      // log(1) = 0 would make eta_1 vanish; the schedule is shifted by one.
      return 4.0 * std::sqrt(std::log(td + 1.0) / (td + 1.0));
  }
  return 0.0;
}

// -- SemiBanditFtrl -----------------------------------------------------------

SemiBanditFtrl::SemiBanditFtrl(std::string name, ActionSet set, Regularizer reg,
                               LearningRate schedule, Estimator estimator, double lr_scale)
    : name_(std::move(name)),
      solver_(std::move(set), reg),
      schedule_(schedule),
      estimator_(estimator),
      lr_scale_(lr_scale),
      cumulative_(solver_.set().dim(), 0.0) {
  if (!(lr_scale > 0.0)) throw ConfigError("lr_scale must be positive");
}

double SemiBanditFtrl::eta() const { return lr_scale_ * learning_rate(schedule_, t_); }

Decision SemiBanditFtrl::next_action(Rng& rng) {
  const SolveReport& report = solver_.solve(cumulative_, 1.0 / eta());
  last_x_ = report.x;
  last_action_ = sample_from(solver_.set(), solver_, last_x_, rng);
  pending_ = true;
  return Decision{last_action_, last_x_};
}

void SemiBanditFtrl::observe(const Feedback& feedback) {
  if (!pending_) throw Error(name_ + ": observe() without a pending action");
  if (feedback.action != last_action_) throw Error(name_ + ": feedback for a different action");
  const Vector est = estimator_ == Estimator::kShiftedImportance
                         ? semibandit_estimate(feedback.observed, last_action_, last_x_)
                         : importance_weighted_estimate(feedback.observed, last_action_, last_x_);
  for (std::size_t i = 0; i < est.size(); ++i) cumulative_[i] += est[i];
  ++t_;
  pending_ = false;
}

// -- BanditHybridFtrl ---------------------------------------------------------

BanditHybridFtrl::BanditHybridFtrl(ActionSet set, double lr_scale, double loss_offset)
    : solver_(set, Regularizer::symmetric_tsallis()),
      lr_scale_(lr_scale),
      loss_offset_(loss_offset),
      cumulative_(set.dim(), 0.0) {
  if (set.kind() != SetKind::kHypercube) {
    throw UnsupportedError("bandit-feedback hybrid FTRL needs the hypercube action set");
  }
  if (!(lr_scale > 0.0)) throw ConfigError("lr_scale must be positive");
  if (!std::isfinite(loss_offset)) throw ConfigError("loss offset must be finite");
}

Decision BanditHybridFtrl::next_action(Rng& rng) {
  const double eta = lr_scale_ * learning_rate(LearningRate::kInverseSqrt, t_);
  last_x_ = solver_.solve(cumulative_, 1.0 / eta).x;
  last_action_ = sample_hypercube(last_x_, rng);
  pending_ = true;
  return Decision{last_action_, last_x_};
}

void BanditHybridFtrl::observe(const Feedback& feedback) {
  if (!pending_) throw Error("bandit-hybrid: observe() without a pending action");
  if (feedback.action != last_action_) throw Error("bandit-hybrid: feedback for a different action");
  const Vector est = bandit_estimate(feedback.total_loss + loss_offset_, last_action_, last_x_);
  for (std::size_t i = 0; i < est.size(); ++i) cumulative_[i] += est[i];
  ++t_;
  pending_ = false;
}

// -- CombUcb ------------------------------------------------------------------

CombUcb::CombUcb(ActionSet set)
    : set_(std::move(set)),
      counts_(set_.dim(), 0),
      sums_(set_.dim(), 0.0),
      uncoverable_(set_.dim(), 0) {}

double CombUcb::mean_loss(int arm) const {
  return 2.0 * sums_[arm] / static_cast<double>(counts_[arm]) - 1.0;
}

double CombUcb::index(int arm) const {
  if (counts_[arm] < 1) throw Error("combucb index needs at least one observation");
  const double mean = sums_[arm] / static_cast<double>(counts_[arm]);
  const double radius =
      std::sqrt(1.5 * std::log(static_cast<double>(t_)) / static_cast<double>(counts_[arm]));
  return 2.0 * (mean - radius) - 1.0;
}

Decision CombUcb::next_action(Rng&) {
  const int d = set_.dim();
  // Covering phase: prefer vertices with the most unobserved arms.
  bool covering = false;
  Vector cover(d, 0.0);
  for (int i = 0; i < d; ++i) {
    if (counts_[i] == 0 && !uncoverable_[i]) {
      cover[i] = -1.0;
      covering = true;
    }
  }
  if (covering) {
    Action a = set_.linear_min_oracle(cover);
    bool useful = false;
    for (int i = 0; i < d; ++i) useful = useful || (a[i] && cover[i] < 0.0);
    if (useful) return Decision{std::move(a), std::nullopt};
    for (int i = 0; i < d; ++i) {
      if (cover[i] < 0.0) uncoverable_[i] = 1;
    }
  }
  Vector idx(d, 0.0);
  for (int i = 0; i < d; ++i) {
    if (counts_[i] > 0) idx[i] = index(i);
  }
  return Decision{set_.linear_min_oracle(idx), std::nullopt};
}

void CombUcb::observe(const Feedback& feedback) {
  for (int i = 0; i < set_.dim(); ++i) {
    if (!feedback.action[i]) continue;
    ++counts_[i];
    sums_[i] += (feedback.observed[i] + 1.0) / 2.0;
  }
  ++t_;
}

// -- ThompsonSampling ---------------------------------------------------------

ThompsonSampling::ThompsonSampling(ActionSet set)
    : set_(std::move(set)), alpha_(set_.dim(), 1.0), beta_(set_.dim(), 1.0) {}

Decision ThompsonSampling::next_action(Rng& rng) {
  Vector pseudo_loss(set_.dim());
  for (int i = 0; i < set_.dim(); ++i) {
    pseudo_loss[i] = 2.0 * sample_beta(alpha_[i], beta_[i], rng) - 1.0;
  }
  return Decision{set_.linear_min_oracle(pseudo_loss), std::nullopt};
}

void ThompsonSampling::observe(const Feedback& feedback) {
  for (int i = 0; i < set_.dim(); ++i) {
    if (!feedback.action[i]) continue;
    const double success = (feedback.observed[i] + 1.0) / 2.0;
    alpha_[i] += success;
    beta_[i] += 1.0 - success;
  }
}

// -- FixedActionLearner -------------------------------------------------------

FixedActionLearner::FixedActionLearner(Action action, std::string name)
    : action_(std::move(action)), name_(std::move(name)) {}

Decision FixedActionLearner::next_action(Rng&) {
  FractionalPoint x(action_.begin(), action_.end());
  return Decision{action_, std::move(x)};
}

// -- factories ----------------------------------------------------------------

std::unique_ptr<SemiBanditFtrl> make_hybrid_ftrl(const ActionSet& set,
                                                 const LearnerOptions& options) {
  double gamma = 1.0;
  if (set.kind() == SetKind::kMSet) gamma = select_gamma(set.dim(), set.subset_size());
  if (options.gamma_override) gamma = *options.gamma_override;
  return std::make_unique<SemiBanditFtrl>("hybrid", set, Regularizer::hybrid(gamma),
                                          LearningRate::kInverseSqrt,
                                          Estimator::kShiftedImportance, options.lr_scale);
}

std::unique_ptr<SemiBanditFtrl> make_exp2(const ActionSet& set, const LearnerOptions& options) {
  if (set.kind() == SetKind::kEnumerated) {
    throw UnsupportedError("exp2 supports the hypercube and m-set only");
  }
  return std::make_unique<SemiBanditFtrl>("exp2", set, Regularizer::shannon(),
                                          LearningRate::kQuarterInverseSqrt, Estimator::kImportance,
                                          options.lr_scale);
}

std::unique_ptr<SemiBanditFtrl> make_log_barrier(const ActionSet& set,
                                                 const LearnerOptions& options) {
  if (set.kind() == SetKind::kEnumerated) {
    throw UnsupportedError("logbarrier supports the hypercube and m-set only");
  }
  return std::make_unique<SemiBanditFtrl>("logbarrier", set, Regularizer::log_barrier(),
                                          LearningRate::kLogBarrier, Estimator::kImportance,
                                          options.lr_scale);
}

std::unique_ptr<Learner> make_learner(std::string_view algo, const ActionSet& set,
                                      const LearnerOptions& options) {
  if (algo == "hybrid") return make_hybrid_ftrl(set, options);
  if (algo == "exp2") return make_exp2(set, options);
  if (algo == "logbarrier") return make_log_barrier(set, options);
  if (algo == "combucb") return std::make_unique<CombUcb>(set);
  if (algo == "thompson") return std::make_unique<ThompsonSampling>(set);
  if (algo == "bandit-hybrid") return std::make_unique<BanditHybridFtrl>(set, options.lr_scale);
  throw ConfigError("unknown algorithm '" + std::string(algo) + "'");
}

}  // namespace semibandit
