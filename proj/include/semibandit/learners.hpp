#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "semibandit/action_set.hpp"
#include "semibandit/common.hpp"
#include "semibandit/ftrl_solver.hpp"
#include "semibandit/regularizers.hpp"

namespace semibandit {

enum class FeedbackKind { kSemiBandit, kBandit };

// What the learner sees after playing `action`: the per-arm observation
// o = X ∘ ℓ (semi-bandit) or only the scalar <X, ℓ> (bandit).
struct Feedback {
  Action action;
  Vector observed;
  double total_loss = 0.0;
};

struct Decision {
  Action action;
  // The FTRL iterate x_t when the learner has one; the harness uses it for
  // exact pseudo-regret.
  std::optional<FractionalPoint> fractional;
};

// Uniform learner interface: next_action() then observe() once per round.
class Learner {
 public:
  virtual ~Learner() = default;
  virtual Decision next_action(Rng& rng) = 0;
  virtual void observe(const Feedback& feedback) = 0;
  virtual FeedbackKind feedback_kind() const { return FeedbackKind::kSemiBandit; }
  virtual std::string name() const = 0;
};

// Shifted importance-weighted estimate (o_i + 1) 1{X_i = 1} / x_i - 1.
// Every entry is >= -1.
Vector semibandit_estimate(std::span<const double> observed, std::span<const std::uint8_t> action,
                           std::span<const double> x);

// Plain importance weighting o_i 1{X_i = 1} / x_i.
Vector importance_weighted_estimate(std::span<const double> observed,
                                    std::span<const std::uint8_t> action,
                                    std::span<const double> x);

// Full-bandit estimate S X_i / x_i - S (1 - X_i) / (1 - x_i), S = <X, ℓ>.
Vector bandit_estimate(double total_loss, std::span<const std::uint8_t> action,
                       std::span<const double> x);

// Learning-rate schedules eta_t.
enum class LearningRate {
  kInverseSqrt,         // 1 / sqrt(t)
  kQuarterInverseSqrt,  // 1 / (4 sqrt(t))
  kLogBarrier,          // 4 sqrt(log(t+1) / (t+1))
};

double learning_rate(LearningRate schedule, std::int64_t t);

struct LearnerOptions {
  std::optional<double> gamma_override;
  // Multiplies eta_t.
  double lr_scale = 1.0;
};

enum class Estimator { kShiftedImportance, kImportance };

// FTRL over conv(X) with semi-bandit feedback. With the hybrid regularizer,
// eta_t = 1/sqrt(t) and the shifted estimator this is the hybrid
// best-of-both-worlds algorithm; Shannon and log-barrier instances give the
// Exp2 and LogBarrier baselines.
class SemiBanditFtrl : public Learner {
 public:
  SemiBanditFtrl(std::string name, ActionSet set, Regularizer reg, LearningRate schedule,
                 Estimator estimator, double lr_scale = 1.0);

  Decision next_action(Rng& rng) override;
  void observe(const Feedback& feedback) override;
  std::string name() const override { return name_; }

  const Vector& cumulative_loss() const { return cumulative_; }
  // Index of the next round to be played (starts at 1).
  std::int64_t round() const { return t_; }
  double eta() const;
  const Regularizer& regularizer() const { return solver_.regularizer(); }
  const FractionalPoint& last_x() const { return last_x_; }
  const SolveReport& last_report() const { return solver_.last(); }

 private:
  std::string name_;
  FtrlSolver solver_;
  LearningRate schedule_;
  Estimator estimator_;
  double lr_scale_;
  Vector cumulative_;
  std::int64_t t_ = 1;
  FractionalPoint last_x_;
  Action last_action_;
  bool pending_ = false;
};

// FTRL on the hypercube with full-bandit feedback, the symmetric Tsallis
// regularizer sum -sqrt(x_i) - sqrt(1 - x_i) and eta_t = 1/sqrt(t). The
// problem separates over coordinates.
//
// The observed total loss is offset by `loss_offset` before estimation. The
// estimate stays unbiased for any offset; the default 1 (the l1 bound on the
// losses) makes every per-coordinate loss nonnegative. With offset 0 and
// negative losses, single rounds with tiny x_i produce huge negative
// estimates and the regret becomes heavy-tailed.
class BanditHybridFtrl : public Learner {
 public:
  explicit BanditHybridFtrl(ActionSet set, double lr_scale = 1.0, double loss_offset = 1.0);

  Decision next_action(Rng& rng) override;
  void observe(const Feedback& feedback) override;
  FeedbackKind feedback_kind() const override { return FeedbackKind::kBandit; }
  std::string name() const override { return "bandit-hybrid"; }

  const Vector& cumulative_loss() const { return cumulative_; }
  std::int64_t round() const { return t_; }

 private:
  FtrlSolver solver_;
  double lr_scale_;
  double loss_offset_;
  Vector cumulative_;
  std::int64_t t_ = 1;
  FractionalPoint last_x_;
  Action last_action_;
  bool pending_ = false;
};

// CombUCB with lower confidence indices on losses rescaled to [0,1]:
// mean_i - sqrt(1.5 log t / T_i), mapped back to [-1,1]. Starts with a
// greedy covering phase until every coverable arm has been observed once.
class CombUcb : public Learner {
 public:
  explicit CombUcb(ActionSet set);

  Decision next_action(Rng& rng) override;
  void observe(const Feedback& feedback) override;
  std::string name() const override { return "combucb"; }

  // Lower confidence index in loss units; needs count(i) >= 1.
  double index(int arm) const;
  std::int64_t count(int arm) const { return counts_[arm]; }
  double mean_loss(int arm) const;
  std::int64_t round() const { return t_; }

 private:
  ActionSet set_;
  std::vector<std::int64_t> counts_;
  Vector sums_;  // of rescaled losses (l + 1) / 2
  std::vector<std::uint8_t> uncoverable_;
  std::int64_t t_ = 1;
};

// Thompson sampling with Beta(a_i, b_i) posteriors on the success
// probability (l + 1) / 2 of each arm, prior Beta(1, 1).
class ThompsonSampling : public Learner {
 public:
  explicit ThompsonSampling(ActionSet set);

  Decision next_action(Rng& rng) override;
  void observe(const Feedback& feedback) override;
  std::string name() const override { return "thompson"; }

  double alpha(int arm) const { return alpha_[arm]; }
  double beta(int arm) const { return beta_[arm]; }

 private:
  ActionSet set_;
  Vector alpha_;
  Vector beta_;
};

// Always plays the same vertex. Reference learner for harness checks.
class FixedActionLearner : public Learner {
 public:
  FixedActionLearner(Action action, std::string name = "fixed");

  Decision next_action(Rng& rng) override;
  void observe(const Feedback&) override {}
  std::string name() const override { return name_; }

 private:
  Action action_;
  std::string name_;
};

std::unique_ptr<SemiBanditFtrl> make_hybrid_ftrl(const ActionSet& set,
                                                 const LearnerOptions& options = {});
std::unique_ptr<SemiBanditFtrl> make_exp2(const ActionSet& set, const LearnerOptions& options = {});
std::unique_ptr<SemiBanditFtrl> make_log_barrier(const ActionSet& set,
                                                 const LearnerOptions& options = {});

// Names: hybrid, exp2, logbarrier, combucb, thompson, bandit-hybrid.
std::unique_ptr<Learner> make_learner(std::string_view algo, const ActionSet& set,
                                      const LearnerOptions& options = {});

}  // namespace semibandit
