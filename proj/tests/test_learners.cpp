#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "oracles.hpp"
#include "sampler_law.hpp"
#include "semibandit/learners.hpp"

using namespace semibandit;

TEST(Estimators, SemiBanditExamples) {
  EXPECT_DOUBLE_EQ(semibandit_estimate(Vector{1.0}, Action{1}, Vector{0.5})[0], 3.0);
  EXPECT_DOUBLE_EQ(semibandit_estimate(Vector{0.0}, Action{0}, Vector{0.5})[0], -1.0);
  EXPECT_DOUBLE_EQ(semibandit_estimate(Vector{-0.3}, Action{1}, Vector{1.0})[0], -0.3);
  EXPECT_THROW(semibandit_estimate(Vector{1.0}, Action{1}, Vector{0.0}), Error);
  EXPECT_THROW(semibandit_estimate(Vector{1.0, 0.0}, Action{1}, Vector{0.5}), DimensionError);
}

TEST(Estimators, BanditExamples) {
  EXPECT_DOUBLE_EQ(bandit_estimate(0.5, Action{1}, Vector{0.5})[0], 1.0);
  EXPECT_DOUBLE_EQ(bandit_estimate(0.0, Action{0}, Vector{0.5})[0], 0.0);
}

TEST(Estimators, SemiBanditUnbiasedOnHypercube) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int d = 1; d <= 3; ++d) {
    for (int rep = 0; rep < 100; ++rep) {
      Vector x(d), loss(d);
      for (int i = 0; i < d; ++i) {
        x[i] = 0.01 + 0.98 * u(rng);
        loss[i] = 2 * u(rng) - 1;
      }
      Vector expectation(d, 0.0);
      for (const auto& [v, p] : oracle::product_law(x)) {
        Vector o(d, 0.0);
        for (int i = 0; i < d; ++i) o[i] = v[i] ? loss[i] : 0.0;
        const Vector est = semibandit_estimate(o, v, x);
        for (int i = 0; i < d; ++i) {
          EXPECT_GE(est[i], -1.0);
          expectation[i] += p * est[i];
        }
      }
      for (int i = 0; i < d; ++i) EXPECT_NEAR(expectation[i], loss[i], 1e-12);
    }
  }
}

TEST(Estimators, SemiBanditUnbiasedOnMSet) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 100; ++rep) {
    const Vector x = oracle::random_interior_mset_point(3, 1, rng);
    Vector loss(3);
    for (double& v : loss) v = 2 * u(rng) - 1;
    Vector expectation(3, 0.0);
    for (const auto& [v, p] : mset_sampler_law(x, 1)) {
      Vector o(3, 0.0);
      for (int i = 0; i < 3; ++i) o[i] = v[i] ? loss[i] : 0.0;
      const Vector est = semibandit_estimate(o, v, x);
      for (int i = 0; i < 3; ++i) {
        EXPECT_GE(est[i], -1.0);
        expectation[i] += p * est[i];
      }
    }
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(expectation[i], loss[i], 1e-12);
  }
}

TEST(Estimators, BanditUnbiased) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int d = 1; d <= 2; ++d) {
    for (int rep = 0; rep < 100; ++rep) {
      Vector x(d), loss(d);
      for (int i = 0; i < d; ++i) {
        x[i] = 0.01 + 0.98 * u(rng);
        loss[i] = (2 * u(rng) - 1) / d;
      }
      Vector expectation(d, 0.0);
      for (const auto& [v, p] : oracle::product_law(x)) {
        double total = 0.0;
        for (int i = 0; i < d; ++i) total += v[i] * loss[i];
        const Vector est = bandit_estimate(total, v, x);
        for (int i = 0; i < d; ++i) expectation[i] += p * est[i];
      }
      for (int i = 0; i < d; ++i) EXPECT_NEAR(expectation[i], loss[i], 1e-12);
    }
  }
}

TEST(LearningRates, Schedules) {
  EXPECT_DOUBLE_EQ(learning_rate(LearningRate::kInverseSqrt, 4), 0.5);
  EXPECT_DOUBLE_EQ(learning_rate(LearningRate::kQuarterInverseSqrt, 4), 0.125);
  EXPECT_DOUBLE_EQ(learning_rate(LearningRate::kLogBarrier, 1), 4 * std::sqrt(std::log(2.0) / 2));
  EXPECT_GT(learning_rate(LearningRate::kLogBarrier, 1), 0.0);
  EXPECT_THROW(learning_rate(LearningRate::kInverseSqrt, 0), ConfigError);
}

TEST(HybridFtrl, FirstIterateIsSymmetric) {
  Rng rng(4);
  auto learner = make_hybrid_ftrl(ActionSet::mset(10, 5));
  const Decision d = learner->next_action(rng);
  ASSERT_TRUE(d.fractional.has_value());
  for (double v : *d.fractional) EXPECT_NEAR(v, 0.5, 1e-12);
  EXPECT_EQ(std::count(d.action.begin(), d.action.end(), 1), 5);

  auto cube = make_hybrid_ftrl(ActionSet::hypercube(3));
  const Decision c = cube->next_action(rng);
  EXPECT_NEAR((*c.fractional)[0], (*c.fractional)[2], 1e-15);
}

TEST(HybridFtrl, ObserveAccumulatesEstimates) {
  Rng rng(5);
  auto learner = make_hybrid_ftrl(ActionSet::hypercube(2));
  const Decision d = learner->next_action(rng);
  Feedback f{d.action, Vector{d.action[0] ? 0.5 : 0.0, d.action[1] ? -0.5 : 0.0}, 0.0};
  learner->observe(f);
  const Vector expected = semibandit_estimate(f.observed, d.action, *d.fractional);
  EXPECT_EQ(learner->cumulative_loss(), expected);
  EXPECT_EQ(learner->round(), 2);
  EXPECT_THROW(learner->observe(f), Error);
}

TEST(HybridFtrl, PersistentLossDrivesArmToZero) {
  // Trend test: x_1 averaged over 20 seeds and over blocks [2^k, 2^(k+1)).
  const int seeds = 20;
  std::vector<double> block_mean(7, 0.0);
  for (int seed = 0; seed < seeds; ++seed) {
    Rng rng(600 + seed);
    auto learner = make_hybrid_ftrl(ActionSet::hypercube(2));
    std::size_t block = 0;
    std::int64_t next_block = 512;
    double sum = 0.0;
    for (std::int64_t t = 1; t < 32768; ++t) {
      const Decision d = learner->next_action(rng);
      if (t >= 256) sum += (*d.fractional)[0];
      if (t + 1 == next_block) {
        block_mean[block++] += sum / (next_block / 2) / seeds;
        sum = 0.0;
        next_block *= 2;
      }
      learner->observe({d.action, Vector{d.action[0] ? 1.0 : 0.0, 0.0}, 0.0});
    }
  }
  for (std::size_t k = 1; k < block_mean.size(); ++k) EXPECT_LT(block_mean[k], block_mean[k - 1]);
  EXPECT_LT(block_mean.back(), 1e-3);
}

TEST(HybridFtrl, GammaSelection) {
  EXPECT_EQ(make_hybrid_ftrl(ActionSet::mset(10, 5))->regularizer().gamma(), 1.0);
  EXPECT_NEAR(make_hybrid_ftrl(ActionSet::mset(10, 9))->regularizer().gamma(),
              1 / std::sqrt(std::log(10.0)), 1e-15);
  LearnerOptions o;
  o.gamma_override = 0.25;
  EXPECT_EQ(make_hybrid_ftrl(ActionSet::mset(10, 9), o)->regularizer().gamma(), 0.25);
}

TEST(HybridFtrl, EnumeratedSetRuns) {
  Rng rng(7);
  const auto set = ActionSet::enumerated({{1, 1, 0}, {0, 1, 1}, {1, 0, 0}});
  auto learner = make_hybrid_ftrl(set);
  for (int t = 0; t < 200; ++t) {
    const Decision d = learner->next_action(rng);
    ASSERT_TRUE(set.contains(d.action));
    Vector o(3, 0.0);
    for (int i = 0; i < 3; ++i) o[i] = d.action[i] ? (i == 0 ? 1.0 : -1.0) : 0.0;
    learner->observe({d.action, o, 0.0});
  }
}

TEST(Baselines, Exp2AndLogBarrierStartUniform) {
  Rng rng(8);
  for (auto* make : {&make_exp2, &make_log_barrier}) {
    auto learner = make(ActionSet::mset(6, 2), {});
    const Decision d = learner->next_action(rng);
    for (double v : *d.fractional) EXPECT_NEAR(v, 1.0 / 3.0, 1e-12);
  }
  EXPECT_THROW(make_exp2(ActionSet::enumerated({{1, 0}}), {}), UnsupportedError);
  EXPECT_THROW(make_log_barrier(ActionSet::enumerated({{1, 0}}), {}), UnsupportedError);
}

TEST(Baselines, BanditHybridNeedsHypercube) {
  EXPECT_THROW(BanditHybridFtrl(ActionSet::mset(4, 2)), UnsupportedError);
  BanditHybridFtrl learner(ActionSet::hypercube(2));
  EXPECT_EQ(learner.feedback_kind(), FeedbackKind::kBandit);
  Rng rng(9);
  const Decision d = learner.next_action(rng);
  EXPECT_NEAR((*d.fractional)[0], 0.5, 1e-12);
}

TEST(Baselines, BanditHybridOffsetsTotalLoss) {
  for (double offset : {0.0, 1.0, 2.5}) {
    BanditHybridFtrl learner(ActionSet::hypercube(2), 1.0, offset);
    Rng rng(12);
    const Decision d = learner.next_action(rng);
    learner.observe({d.action, {}, -0.5});
    const Vector expected = bandit_estimate(-0.5 + offset, d.action, *d.fractional);
    for (int i = 0; i < 2; ++i) EXPECT_DOUBLE_EQ(learner.cumulative_loss()[i], expected[i]);
  }
  EXPECT_THROW(BanditHybridFtrl(ActionSet::hypercube(2), 1.0, NAN), ConfigError);
}

TEST(Baselines, CombUcbCoversThenUsesIndices) {
  Rng rng(10);
  CombUcb ucb(ActionSet::mset(6, 2));
  for (int t = 0; t < 3; ++t) {
    const Decision d = ucb.next_action(rng);
    EXPECT_FALSE(d.fractional.has_value());
    Vector o(6, 0.0);
    for (int i = 0; i < 6; ++i) o[i] = d.action[i] ? (i < 2 ? -1.0 : 1.0) : 0.0;
    ucb.observe({d.action, o, 0.0});
  }
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(ucb.count(i), 1);
    EXPECT_TRUE(std::isfinite(ucb.index(i)));
  }
  EXPECT_EQ(ucb.mean_loss(0), -1.0);
  EXPECT_EQ(ucb.mean_loss(5), 1.0);
}

TEST(Baselines, CombUcbReplaysBadArmLogarithmically) {
  Rng rng(11);
  CombUcb ucb(ActionSet::hypercube(1));
  // A loss of +1 every time: the arm is replayed only while its confidence
  // radius exceeds 1/2, i.e. about 6 log t times.
  for (int t = 1; t <= 2000; ++t) {
    const Decision d = ucb.next_action(rng);
    ucb.observe({d.action, Vector{d.action[0] ? 1.0 : 0.0}, 0.0});
  }
  EXPECT_LE(ucb.count(0), static_cast<std::int64_t>(6 * std::log(2001.0)) + 2);
}

TEST(Baselines, CombUcbHandlesUncoverableArms) {
  Rng rng(12);
  CombUcb ucb(ActionSet::enumerated({{1, 0, 0}, {0, 1, 0}}));
  for (int t = 0; t < 10; ++t) {
    const Decision d = ucb.next_action(rng);
    ucb.observe({d.action, Vector{d.action[0] * 0.5, d.action[1] * -0.5, 0.0}, 0.0});
  }
  EXPECT_EQ(ucb.count(2), 0);
}

TEST(Baselines, ThompsonPosterior) {
  Rng rng(13);
  ThompsonSampling ts(ActionSet::hypercube(2));
  const Decision d = ts.next_action(rng);
  ts.observe({Action{1, 0}, Vector{1.0, 0.0}, 0.0});
  (void)d;
  EXPECT_EQ(ts.alpha(0), 2.0);
  EXPECT_EQ(ts.beta(0), 1.0);
  EXPECT_EQ(ts.alpha(1), 1.0);
  ts.observe({Action{1, 0}, Vector{-1.0, 0.0}, 0.0});
  EXPECT_EQ(ts.beta(0), 2.0);
}

TEST(Learners, FactoryAndDeterminism) {
  for (const char* name : {"hybrid", "exp2", "logbarrier", "combucb", "thompson"}) {
    const auto set = ActionSet::mset(5, 2);
    auto a = make_learner(name, set);
    auto b = make_learner(name, set);
    EXPECT_EQ(a->name(), name);
    Rng ra(14), rb(14);
    for (int t = 0; t < 50; ++t) {
      const Decision da = a->next_action(ra);
      const Decision db = b->next_action(rb);
      ASSERT_EQ(da.action, db.action);
      Vector o(5, 0.0);
      for (int i = 0; i < 5; ++i) o[i] = da.action[i] ? ((t + i) % 3 == 0 ? 1.0 : -1.0) : 0.0;
      a->observe({da.action, o, 0.0});
      b->observe({db.action, o, 0.0});
    }
  }
  EXPECT_THROW(make_learner("nope", ActionSet::hypercube(2)), ConfigError);
}
