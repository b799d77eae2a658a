#pragma once

#include <span>

#include "semibandit/common.hpp"

namespace semibandit {

enum class RegularizerKind {
  // sum_i -sqrt(x_i) + gamma (1 - x_i) log(1 - x_i)
  kHybrid,
  // sum_i x_i log x_i
  kShannonNegEntropy,
  // sum_i -log x_i
  kLogBarrier,
  // sum_i -sqrt(x_i) - sqrt(1 - x_i)
  kSymmetricTsallisHalf,
};

// A separable regularizer Psi(x) = sum_i psi(x_i), strictly convex on (0,1).
// The scalar members evaluate psi and its derivatives for one coordinate.
class Regularizer {
 public:
  static Regularizer hybrid(double gamma);
  static Regularizer shannon() { return Regularizer(RegularizerKind::kShannonNegEntropy, 0.0); }
  static Regularizer log_barrier() { return Regularizer(RegularizerKind::kLogBarrier, 0.0); }
  static Regularizer symmetric_tsallis() {
    return Regularizer(RegularizerKind::kSymmetricTsallisHalf, 0.0);
  }

  RegularizerKind kind() const { return kind_; }
  double gamma() const { return gamma_; }

  // psi(x). Finite on [0,1] except LogBarrier at 0; 0 log 0 is taken as 0.
  double value(double x) const;
  // psi'(x) on the open domain; Shannon and LogBarrier also accept x = 1.
  double derivative(double x) const;
  // psi''(x) > 0 on the same domain as derivative().
  double curvature(double x) const;

  // Whether psi'(1^-) is finite, so that a minimizer can sit on the face x = 1.
  bool finite_at_one() const {
    return kind_ == RegularizerKind::kShannonNegEntropy || kind_ == RegularizerKind::kLogBarrier;
  }

  // Unchecked versions used in the solver inner loops; x must be in the domain.
  double derivative_unchecked(double x) const;
  double curvature_unchecked(double x) const;

 private:
  Regularizer(RegularizerKind kind, double gamma) : kind_(kind), gamma_(gamma) {}
  void check_domain(double x) const;

  RegularizerKind kind_;
  double gamma_;
};

double hybrid_value(std::span<const double> x, double gamma);
Vector hybrid_grad(std::span<const double> x, double gamma, double eta_inv);
Vector hybrid_hess_diag(std::span<const double> x, double gamma, double eta_inv);

// Tuning of gamma for the m-set: 1 when m <= d/2, otherwise
// min{1, 1/sqrt(log(d/(d-m)))}.
double select_gamma(int d, int m);

struct RegularizerEval {
  double value;
  Vector grad;
  Vector hess_diag;
};

// eta_inv * Psi(x) with its gradient and Hessian diagonal.
RegularizerEval reg_eval(const Regularizer& reg, std::span<const double> x, double eta_inv);

}  // namespace semibandit
