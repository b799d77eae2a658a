#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "semibandit/regularizers.hpp"

using namespace semibandit;

TEST(Regularizers, HybridValueExamples) {
  for (double g : {0.3, 1.0}) {
    EXPECT_EQ(hybrid_value(Vector{0, 0, 0}, g), 0.0);
    EXPECT_DOUBLE_EQ(hybrid_value(Vector{1, 1, 1, 1}, g), -4.0);
  }
  EXPECT_NEAR(hybrid_value(Vector{0.25}, 1.0), -0.5 + 0.75 * std::log(0.75), 1e-15);
  EXPECT_NEAR(hybrid_value(Vector{0.25}, 1.0), -0.7157616, 1e-6);
}

TEST(Regularizers, HybridGradientAndHessianExamples) {
  EXPECT_NEAR(hybrid_grad(Vector{0.25}, 1.0, 1.0)[0], -1.712318, 1e-6);
  EXPECT_DOUBLE_EQ(hybrid_grad(Vector{0.25}, 1.0, 2.0)[0], 2.0 * hybrid_grad(Vector{0.25}, 1.0, 1.0)[0]);
  EXPECT_NEAR(hybrid_hess_diag(Vector{0.25}, 1.0, 1.0)[0], 10.0 / 3.0, 1e-12);
}

TEST(Regularizers, DomainErrors) {
  EXPECT_THROW(hybrid_grad(Vector{0.0}, 1.0, 1.0), DomainError);
  EXPECT_THROW(hybrid_grad(Vector{1.0}, 1.0, 1.0), DomainError);
  EXPECT_THROW(hybrid_hess_diag(Vector{1.0}, 1.0, 1.0), DomainError);
  EXPECT_THROW(Regularizer::symmetric_tsallis().derivative(1.0), DomainError);
  EXPECT_THROW(Regularizer::log_barrier().value(0.0), DomainError);
  EXPECT_NO_THROW(Regularizer::shannon().derivative(1.0));
  EXPECT_THROW(Regularizer::hybrid(0.0), ConfigError);
  EXPECT_THROW(Regularizer::hybrid(1.5), ConfigError);
}

TEST(Regularizers, SelectGamma) {
  EXPECT_EQ(select_gamma(10, 5), 1.0);
  EXPECT_EQ(select_gamma(4, 2), 1.0);
  EXPECT_NEAR(select_gamma(10, 9), 1.0 / std::sqrt(std::log(10.0)), 1e-12);
  EXPECT_NEAR(select_gamma(10, 9), 0.659010, 1e-6);
  EXPECT_THROW(select_gamma(4, 4), ConfigError);
}

TEST(Regularizers, RegEvalExamples) {
  EXPECT_NEAR(reg_eval(Regularizer::shannon(), Vector{std::exp(-1.0)}, 1.0).grad[0], 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(reg_eval(Regularizer::log_barrier(), Vector{0.5}, 1.0).grad[0], -2.0);
  EXPECT_EQ(reg_eval(Regularizer::symmetric_tsallis(), Vector{0.5}, 1.0).grad[0], 0.0);
  const auto e = reg_eval(Regularizer::hybrid(1.0), Vector{0.25, 0.5}, 3.0);
  EXPECT_NEAR(e.value, 3.0 * hybrid_value(Vector{0.25, 0.5}, 1.0), 1e-14);
}

TEST(Regularizers, HybridMatchesIndependentFormula) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    const double x = u(rng);
    const double g = 0.05 + 0.95 * u(rng);
    EXPECT_NEAR(Regularizer::hybrid(g).value(x), oracle::hybrid(x, g), 1e-14);
  }
}

TEST(Regularizers, DerivativesMatchFiniteDifferences) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.02, 0.98);
  const Regularizer regs[] = {Regularizer::hybrid(1.0), Regularizer::hybrid(0.4),
                              Regularizer::shannon(), Regularizer::log_barrier(),
                              Regularizer::symmetric_tsallis()};
  for (const auto& reg : regs) {
    for (int k = 0; k < 100; ++k) {
      const double x = u(rng);
      const double h = 1e-6 * std::min(x, 1.0 - x);
      const double fd_grad = oracle::central_difference([&](double v) { return reg.value(v); }, x, h);
      const double fd_hess =
          oracle::central_difference([&](double v) { return reg.derivative(v); }, x, h);
      const double g = reg.derivative(x);
      const double c = reg.curvature(x);
      EXPECT_LE(std::abs(fd_grad - g), 1e-6 * std::max(1.0, std::abs(g)));
      EXPECT_LE(std::abs(fd_hess - c), 1e-5 * std::abs(c));
      EXPECT_GT(c, 0.0);
    }
  }
}

TEST(Regularizers, HybridSmallGammaLimit) {
  const Vector x{0.1, 0.5, 0.9};
  double tsallis = 0.0;
  for (double v : x) tsallis -= std::sqrt(v);
  EXPECT_NEAR(hybrid_value(x, 1e-8), tsallis, 1e-6);
}
