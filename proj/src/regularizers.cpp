#include "semibandit/regularizers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace semibandit {

Regularizer Regularizer::hybrid(double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw ConfigError("hybrid regularizer needs gamma in (0, 1], got " + std::to_string(gamma));
  }
  return Regularizer(RegularizerKind::kHybrid, gamma);
}

void Regularizer::check_domain(double x) const {
  const bool upper_ok = finite_at_one() ? x <= 1.0 : x < 1.0;
  if (!(x > 0.0 && upper_ok)) {
    throw DomainError("regularizer derivative evaluated at boundary point " + std::to_string(x));
  }
}

double Regularizer::value(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("regularizer evaluated outside [0,1]");
  switch (kind_) {
    case RegularizerKind::kHybrid: {
      const double complement = 1.0 - x;
      const double shannon = complement > 0.0 ? complement * std::log1p(-x) : 0.0;
      return -std::sqrt(x) + gamma_ * shannon;
    }
    case RegularizerKind::kShannonNegEntropy:
      return x > 0.0 ? x * std::log(x) : 0.0;
    case RegularizerKind::kLogBarrier:
      if (x == 0.0) throw DomainError("log-barrier is infinite at 0");
      return -std::log(x);
    case RegularizerKind::kSymmetricTsallisHalf:
      return -std::sqrt(x) - std::sqrt(1.0 - x);
  }
  return 0.0;
}

double Regularizer::derivative(double x) const {
  check_domain(x);
  return derivative_unchecked(x);
}

double Regularizer::curvature(double x) const {
  check_domain(x);
  return curvature_unchecked(x);
}

double Regularizer::derivative_unchecked(double x) const {
  switch (kind_) {
    case RegularizerKind::kHybrid:
      return -0.5 / std::sqrt(x) - gamma_ * std::log1p(-x) - gamma_;
    case RegularizerKind::kShannonNegEntropy:
      return std::log(x) + 1.0;
    case RegularizerKind::kLogBarrier:
      return -1.0 / x;
    case RegularizerKind::kSymmetricTsallisHalf:
      return -0.5 / std::sqrt(x) + 0.5 / std::sqrt(1.0 - x);
  }
  return 0.0;
}

double Regularizer::curvature_unchecked(double x) const {
  switch (kind_) {
    case RegularizerKind::kHybrid:
      return 0.25 / (x * std::sqrt(x)) + gamma_ / (1.0 - x);
    case RegularizerKind::kShannonNegEntropy:
      return 1.0 / x;
    case RegularizerKind::kLogBarrier:
      return 1.0 / (x * x);
    case RegularizerKind::kSymmetricTsallisHalf: {
      const double c = 1.0 - x;
      return 0.25 / (x * std::sqrt(x)) + 0.25 / (c * std::sqrt(c));
    }
  }
  return 0.0;
}

double hybrid_value(std::span<const double> x, double gamma) {
  const Regularizer reg = Regularizer::hybrid(gamma);
  double sum = 0.0;
  for (double v : x) sum += reg.value(v);
  return sum;
}

Vector hybrid_grad(std::span<const double> x, double gamma, double eta_inv) {
  const Regularizer reg = Regularizer::hybrid(gamma);
  Vector g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) g[i] = eta_inv * reg.derivative(x[i]);
  return g;
}

Vector hybrid_hess_diag(std::span<const double> x, double gamma, double eta_inv) {
  const Regularizer reg = Regularizer::hybrid(gamma);
  Vector h(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) h[i] = eta_inv * reg.curvature(x[i]);
  return h;
}

double select_gamma(int d, int m) {
  if (m < 1 || m > d - 1) throw ConfigError("select_gamma needs 1 <= m <= d-1");
  if (2 * m <= d) return 1.0;
  const double log_ratio = std::log(static_cast<double>(d) / (d - m));
  return std::min(1.0, 1.0 / std::sqrt(log_ratio));
}

RegularizerEval reg_eval(const Regularizer& reg, std::span<const double> x, double eta_inv) {
  RegularizerEval out{0.0, Vector(x.size()), Vector(x.size())};
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.value += reg.value(x[i]);
    out.grad[i] = eta_inv * reg.derivative(x[i]);
    out.hess_diag[i] = eta_inv * reg.curvature(x[i]);
  }
  out.value *= eta_inv;
  return out;
}

}  // namespace semibandit
