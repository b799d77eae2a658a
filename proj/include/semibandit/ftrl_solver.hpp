#pragma once

#include <optional>
#include <span>
#include <vector>

#include "semibandit/action_set.hpp"
#include "semibandit/common.hpp"
#include "semibandit/regularizers.hpp"

namespace semibandit {

// Coordinates of a solution are kept in [kDomainEpsilon, 1 - kDomainEpsilon]
// for regularizers whose gradient diverges at the boundary.
inline constexpr double kDomainEpsilon = 1e-14;

struct SolverOptions {
  // Bound on the stationarity residual (see kkt_residual) for box and m-set
  // solves.
  double stationarity_tolerance = 1e-10;
  // Bound on |sum(x) - m| for m-set solves.
  double sum_tolerance = 1e-9;
  int max_iterations = 200;
  // Enumerated solver: residual target, degraded-accuracy threshold and
  // Newton iteration cap.
  double enumerated_tolerance = 1e-11;
  double enumerated_degraded_tolerance = 1e-6;
  int enumerated_max_iterations = 500;
};

struct SolveReport {
  FractionalPoint x;
  double kkt_residual = 0.0;
  int iterations = 0;
  // m-set only: multiplier nu of the constraint sum(x) = m, in loss units.
  double dual_value = 0.0;
  // Enumerated only: iteration cap reached before the residual target.
  bool degraded = false;
};

struct EnumeratedSolution {
  Vector weights;  // convex weights over set.vertices()
  SolveReport report;
};

// Previous solution used to start the next one.
struct WarmStart {
  Vector x;
  double dual = 0.0;  // nu, loss units
  Vector weights;
};

// argmin over x in [lo, hi] of scaled_loss * x + psi(x), where [lo, hi] is
// [eps, 1 - eps] (or [eps, 1] for regularizers finite at 1). Safeguarded
// Newton on the increasing derivative with a maintained bracket.
double solve_coordinate(const Regularizer& reg, double scaled_loss, double warm,
                        int* iterations = nullptr);

// The objective <x, L> + eta_inv * Psi(x).
double ftrl_objective(std::span<const double> losses, double eta_inv, const Regularizer& reg,
                      std::span<const double> x);

SolveReport solve_box(std::span<const double> losses, double eta_inv, double gamma,
                      const SolverOptions& options = {});
SolveReport solve_box(std::span<const double> losses, double eta_inv, const Regularizer& reg,
                      const WarmStart* warm = nullptr, const SolverOptions& options = {});

SolveReport solve_mset(std::span<const double> losses, double eta_inv, double gamma, int m,
                       const SolverOptions& options = {});
SolveReport solve_mset(std::span<const double> losses, double eta_inv, const Regularizer& reg,
                       int m, const WarmStart* warm = nullptr, const SolverOptions& options = {});

EnumeratedSolution solve_enumerated(std::span<const double> losses, double eta_inv, double gamma,
                                    const ActionSet& set, const SolverOptions& options = {});
EnumeratedSolution solve_enumerated(std::span<const double> losses, double eta_inv,
                                    const Regularizer& reg, const ActionSet& set,
                                    const WarmStart* warm = nullptr,
                                    const SolverOptions& options = {});

// Stationarity residual of a candidate x.
//
// Box and m-set: the infinity norm of the projected Newton step
// x - clamp(x - H^{-1}(L + nu + eta_inv grad Psi(x)), lo, hi), with nu the
// multiplier that makes the step sum to zero over free coordinates (m-set),
// and |sum(x) - m| folded in. Measured in x units, it stays meaningful when
// the gradient is huge near the boundary.
//
// Enumerated: the same projected Newton step, with the projection onto the
// vertex hull taken in the metric of the (diagonal) Hessian. Coordinates
// shared by all vertices contribute their distance to the common value.
double kkt_residual(std::span<const double> losses, double eta_inv, double gamma,
                    const ActionSet& set, std::span<const double> x);
double kkt_residual(std::span<const double> losses, double eta_inv, const Regularizer& reg,
                    const ActionSet& set, std::span<const double> x);

// Simplex-projected gradient residual ||w - P(w - grad_w F(w))||_inf of the
// weight parametrization used by solve_enumerated.
double enumerated_weight_residual(std::span<const double> losses, double eta_inv,
                                  const Regularizer& reg, const ActionSet& set,
                                  std::span<const double> weights);

// Euclidean projection onto the probability simplex.
Vector project_to_simplex(std::span<const double> v);

// Warm-started FTRL solver bound to one action set and regularizer. Owned by
// a single learner; not thread-safe.
class FtrlSolver {
 public:
  FtrlSolver(ActionSet set, Regularizer reg, SolverOptions options = {});

  const SolveReport& solve(std::span<const double> losses, double eta_inv);

  const ActionSet& set() const { return set_; }
  const Regularizer& regularizer() const { return reg_; }
  const SolveReport& last() const { return last_; }
  // Vertex weights of the last enumerated solve.
  const Vector& weights() const { return warm_.weights; }

 private:
  ActionSet set_;
  Regularizer reg_;
  SolverOptions options_;
  WarmStart warm_;
  bool has_warm_ = false;
  SolveReport last_;
};

}  // namespace semibandit
