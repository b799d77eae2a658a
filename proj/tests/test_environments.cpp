#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "semibandit/environments.hpp"

using namespace semibandit;

namespace {

EnvironmentSpec spec_of(EnvironmentKind kind, int d = 10, int m = 5, double gap = 0.125) {
  EnvironmentSpec s;
  s.kind = kind;
  s.d = d;
  s.m = m;
  s.gap = gap;
  return s;
}

}  // namespace

TEST(Environments, StochasticMeans) {
  const Vector mu = stochastic_means(spec_of(EnvironmentKind::kStochastic));
  for (int i = 0; i < 10; ++i) EXPECT_EQ(mu[i], i < 5 ? -0.125 : 0.125);
}

TEST(Environments, PhaseLengthsCoverHorizon) {
  const auto lengths = phase_lengths(1.6, 100000);
  EXPECT_EQ(lengths[0], 2);  // round(1.6)
  EXPECT_EQ(lengths[1], 3);  // round(2.56)
  EXPECT_EQ(lengths[2], 4);  // round(4.096)
  const std::int64_t total = std::accumulate(lengths.begin(), lengths.end(), std::int64_t{0});
  EXPECT_GE(total, 100000);
  EXPECT_LT(total - lengths.back(), 100000);
  for (std::int64_t l : phase_lengths(1.01, 50)) EXPECT_GE(l, 1);

  std::int64_t start = 1;
  for (std::size_t s = 0; s < 12; ++s) {
    EXPECT_EQ(phase_of(start, 1.6), static_cast<std::int64_t>(s + 1));
    EXPECT_EQ(phase_of(start + lengths[s] - 1, 1.6), static_cast<std::int64_t>(s + 1));
    start += lengths[s];
  }
}

TEST(Environments, PhasedMeans) {
  const auto spec = spec_of(EnvironmentKind::kPhasedAdversarial);
  EXPECT_EQ(phased_means(1, spec)[0], 0.875);
  EXPECT_EQ(phased_means(1, spec)[5], 1.0);
  EXPECT_EQ(phased_means(3, spec)[0], -1.0);
  EXPECT_EQ(phased_means(3, spec)[5], -0.875);
  for (std::int64_t t = 1; t <= 3000; ++t) {
    const Vector mu = phased_means(t, spec);
    for (int i = 5; i < 10; ++i) {
      for (int j = 0; j < 5; ++j) EXPECT_DOUBLE_EQ(mu[i] - mu[j], 0.125);
    }
  }
}

TEST(Environments, SequentialMatchesPureMeans) {
  Environment env(spec_of(EnvironmentKind::kPhasedAdversarial), 1);
  for (std::int64_t t = 1; t <= 5000; ++t) {
    const auto r = env.next();
    ASSERT_EQ(r.mean, phased_means(t, env.spec()));
  }
}

TEST(Environments, DrawLossesLaw) {
  Rng rng(1);
  const Vector mean{1.0, 0.0, -0.875, -1.0};
  const int n = 1000000;
  Vector plus(4, 0.0);
  for (int k = 0; k < n; ++k) {
    const auto r = draw_losses(mean, rng);
    for (int i = 0; i < 4; ++i) {
      ASSERT_TRUE(r.loss[i] == 1.0 || r.loss[i] == -1.0);
      plus[i] += r.loss[i] > 0;
    }
  }
  EXPECT_EQ(plus[0], n);
  EXPECT_EQ(plus[3], 0);
  for (int i = 1; i <= 2; ++i) {
    const double p = 0.5 * (1 + mean[i]);
    EXPECT_NEAR(plus[i] / n, p, 5 * std::sqrt(p * (1 - p) / n));
  }
}

TEST(Environments, EmpiricalMeansMatch) {
  Environment env(spec_of(EnvironmentKind::kStochastic, 4, 2, 0.3), 7);
  const int n = 1000000;
  Vector sum(4, 0.0);
  for (int k = 0; k < n; ++k) {
    const auto r = env.next();
    for (int i = 0; i < 4; ++i) sum[i] += r.loss[i];
  }
  for (int i = 0; i < 4; ++i) {
    const double mu = i < 2 ? -0.3 : 0.3;
    EXPECT_NEAR(sum[i] / n, mu, 5 * std::sqrt((1 - mu * mu) / n));
  }
}

TEST(Environments, BanditLosses) {
  Rng rng(2);
  const auto spec = spec_of(EnvironmentKind::kBanditStochastic, 4, 1, 0.5);
  const int n = 1000000;
  Vector sum(4, 0.0);
  for (int k = 0; k < n; ++k) {
    const auto r = bandit_losses(spec, rng, k + 1);
    double l1 = 0.0;
    for (int i = 0; i < 4; ++i) {
      l1 += std::abs(r.loss[i]);
      sum[i] += r.loss[i];
    }
    ASSERT_DOUBLE_EQ(l1, 1.0);
  }
  const Vector mu = bandit_means(spec);
  EXPECT_EQ(mu[0], -0.125);
  EXPECT_EQ(mu[1], 0.125);
  for (int i = 0; i < 4; ++i) {
    const double sigma = std::sqrt(0.0625 - mu[i] * mu[i]) / std::sqrt(double(n));
    EXPECT_NEAR(sum[i] / n, mu[i], 4 * sigma);
  }
  const auto one = spec_of(EnvironmentKind::kBanditStochastic, 1, 1, 0.25);
  EXPECT_EQ(bandit_means(one)[0], -0.25);
}

TEST(Environments, Validation) {
  EXPECT_THROW(spec_of(EnvironmentKind::kStochastic, 4, 0).validate(), ConfigError);
  EXPECT_THROW(spec_of(EnvironmentKind::kStochastic, 4, 2, 0.0).validate(), ConfigError);
  EXPECT_NO_THROW(spec_of(EnvironmentKind::kBanditStochastic, 2, 0).validate());
  EXPECT_THROW(parse_environment_kind("nope"), ConfigError);
  EXPECT_EQ(parse_environment_kind("phased"), EnvironmentKind::kPhasedAdversarial);
}
