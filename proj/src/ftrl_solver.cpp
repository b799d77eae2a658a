#include "semibandit/ftrl_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Dense>

namespace semibandit {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();

double upper_bound(const Regularizer& reg) {
  return reg.finite_at_one() ? 1.0 : 1.0 - kDomainEpsilon;
}

// Splits a bracket. Geometric midpoints when the bracket spans orders of
// magnitude near 0 or near 1, where the solutions of interest live.
double split(double a, double b) {
  if (b <= 0.5 && b > 4.0 * a) return std::sqrt(a * b);
  if (a >= 0.5 && (1.0 - a) > 4.0 * (1.0 - b)) return 1.0 - std::sqrt((1.0 - a) * (1.0 - b));
  return 0.5 * (a + b);
}

void check_inputs(std::span<const double> losses, double eta_inv) {
  if (!(eta_inv > 0.0) || !std::isfinite(eta_inv)) {
    throw ConfigError("inverse learning rate must be positive and finite");
  }
  for (double l : losses) {
    if (!std::isfinite(l)) throw DomainError("cumulative losses must be finite");
  }
}

// Per-coordinate stationarity of the scaled problem at multiplier `shift`:
// projected Newton step |x - clamp(x - (s + shift + psi'(x)) / psi''(x))|.
double projected_step(const Regularizer& reg, double scaled_loss, double shift, double x) {
  const double lo = kDomainEpsilon;
  const double hi = upper_bound(reg);
  const double g = scaled_loss + shift + reg.derivative(x);
  const double h = reg.curvature(x);
  return std::abs(x - std::clamp(x - g / h, lo, hi));
}

double box_residual(std::span<const double> losses, double eta_inv, const Regularizer& reg,
                    std::span<const double> x) {
  double residual = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    residual = std::max(residual, projected_step(reg, losses[i] / eta_inv, 0.0, x[i]));
  }
  return residual;
}

double mset_residual(std::span<const double> losses, double eta_inv, const Regularizer& reg,
                     int m, std::span<const double> x) {
  const double lo = kDomainEpsilon;
  const double hi = upper_bound(reg);
  // Multiplier that makes the Newton step sum to zero over free coordinates.
  double weighted = 0.0;
  double total_weight = 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += x[i];
    if (x[i] <= lo || x[i] >= hi) continue;
    const double h = reg.curvature(x[i]);
    weighted += (losses[i] / eta_inv + reg.derivative(x[i])) / h;
    total_weight += 1.0 / h;
  }
  const double shift = total_weight > 0.0 ? -weighted / total_weight : 0.0;
  double residual = std::abs(sum - m);
  for (std::size_t i = 0; i < x.size(); ++i) {
    residual = std::max(residual, projected_step(reg, losses[i] / eta_inv, shift, x[i]));
  }
  return residual;
}

std::vector<std::uint8_t> varying_coordinates(const ActionSet& set) {
  const int d = set.dim();
  std::vector<std::uint8_t> varying(d, 0);
  const auto& vs = set.vertices();
  for (int i = 0; i < d; ++i) {
    for (const auto& v : vs) {
      if (v[i] != vs.front()[i]) {
        varying[i] = 1;
        break;
      }
    }
  }
  return varying;
}

// Objective of the enumerated problem over conv(vertices). Derivatives are
// taken at the point clamped into [lo, hi] so that iterates on a face of the
// unit cube (x_i exactly 0 or 1) still have a finite local model.
class EnumeratedObjective {
 public:
  EnumeratedObjective(std::span<const double> losses, double eta_inv, const Regularizer& reg,
                      const ActionSet& set)
      : losses_(losses),
        eta_inv_(eta_inv),
        reg_(reg),
        set_(set),
        varying_(varying_coordinates(set)),
        hi_(upper_bound(reg)) {}

  Vector point(std::span<const double> w) const {
    Vector x(set_.dim(), 0.0);
    const auto& vs = set_.vertices();
    for (std::size_t k = 0; k < vs.size(); ++k) {
      if (w[k] == 0.0) continue;
      for (int i = 0; i < set_.dim(); ++i) {
        if (vs[k][i]) x[i] += w[k];
      }
    }
    for (int i = 0; i < set_.dim(); ++i) {
      if (!varying_[i]) x[i] = vs.front()[i];
      x[i] = std::clamp(x[i], 0.0, 1.0);
    }
    return x;
  }

  double clamped(double x) const { return std::clamp(x, kDomainEpsilon, hi_); }

  double value(std::span<const double> x) const {
    double f = 0.0;
    for (int i = 0; i < set_.dim(); ++i) {
      f += losses_[i] * x[i];
      if (varying_[i]) f += eta_inv_ * reg_.value(clamped(x[i]));
    }
    return f;
  }

  double gradient(int i, double x) const {
    return losses_[i] + eta_inv_ * reg_.derivative(clamped(x));
  }
  double curvature(double x) const { return eta_inv_ * reg_.curvature(clamped(x)); }

  Vector x_gradient(std::span<const double> x) const {
    Vector g(set_.dim());
    for (int i = 0; i < set_.dim(); ++i) g[i] = varying_[i] ? gradient(i, x[i]) : losses_[i];
    return g;
  }

  Vector weight_gradient(std::span<const double> x) const {
    const Vector gx = x_gradient(x);
    const auto& vs = set_.vertices();
    Vector gw(vs.size(), 0.0);
    for (std::size_t k = 0; k < vs.size(); ++k) {
      double s = 0.0;
      for (int i = 0; i < set_.dim(); ++i) {
        if (vs[k][i]) s += gx[i];
      }
      gw[k] = s;
    }
    return gw;
  }

  const std::vector<std::uint8_t>& varying() const { return varying_; }

 private:
  std::span<const double> losses_;
  double eta_inv_;
  const Regularizer& reg_;
  const ActionSet& set_;
  std::vector<std::uint8_t> varying_;
  double hi_;
};

double projected_gradient_norm(std::span<const double> w, std::span<const double> grad) {
  Vector trial(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) trial[k] = w[k] - grad[k];
  const Vector p = project_to_simplex(trial);
  double r = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) r = std::max(r, std::abs(p[k] - w[k]));
  return r;
}

// Minimum-norm point of conv(q_0, ..., q_{n-1}) (Wolfe's algorithm). Returns
// convex weights over the points.
Vector min_norm_weights(const Eigen::MatrixXd& q) {
  const Eigen::Index n = q.cols();
  const Eigen::Index p = q.rows();
  Eigen::Index start = 0;
  q.colwise().squaredNorm().minCoeff(&start);
  std::vector<Eigen::Index> support{start};
  std::vector<double> lambda{1.0};
  Eigen::VectorXd y = q.col(start);

  const int max_major = 50 * static_cast<int>(p + 1) + 100;
  for (int major = 0; major < max_major; ++major) {
    Eigen::Index j = 0;
    (q.transpose() * y).minCoeff(&j);
    double scale = q.col(j).norm();
    for (Eigen::Index s : support) scale = std::max(scale, q.col(s).norm());
    if (y.squaredNorm() - q.col(j).dot(y) <= 1e-13 * scale * y.norm()) break;
    if (std::find(support.begin(), support.end(), j) != support.end()) break;
    support.push_back(j);
    lambda.push_back(0.0);

    while (true) {
      // Affine minimizer: min |q_s0 + B a|, mu = (1 - sum a, a).
      const std::size_t k = support.size();
      Eigen::MatrixXd b(p, static_cast<Eigen::Index>(k - 1));
      for (std::size_t s = 1; s < k; ++s) b.col(s - 1) = q.col(support[s]) - q.col(support[0]);
      std::vector<double> mu(k, 1.0);
      if (k > 1) {
        const Eigen::VectorXd a =
            b.completeOrthogonalDecomposition().solve(-q.col(support[0]));
        mu[0] = 1.0 - a.sum();
        for (std::size_t s = 1; s < k; ++s) mu[s] = a(static_cast<Eigen::Index>(s - 1));
      }
      if (std::all_of(mu.begin(), mu.end(), [](double v) { return v > 0.0; })) {
        lambda = mu;
        break;
      }
      double theta = 1.0;
      std::size_t leaving = 0;
      for (std::size_t s = 0; s < k; ++s) {
        if (mu[s] > 0.0) continue;
        const double t = lambda[s] / (lambda[s] - mu[s]);
        if (t < theta) {
          theta = t;
          leaving = s;
        }
      }
      for (std::size_t s = 0; s < k; ++s) lambda[s] += theta * (mu[s] - lambda[s]);
      lambda[leaving] = 0.0;
      std::vector<Eigen::Index> kept;
      std::vector<double> kept_lambda;
      for (std::size_t s = 0; s < k; ++s) {
        if (lambda[s] > 0.0) {
          kept.push_back(support[s]);
          kept_lambda.push_back(lambda[s]);
        }
      }
      support = std::move(kept);
      lambda = std::move(kept_lambda);
    }
    const double total = std::accumulate(lambda.begin(), lambda.end(), 0.0);
    y.setZero();
    for (std::size_t s = 0; s < support.size(); ++s) {
      lambda[s] /= total;
      y += lambda[s] * q.col(support[s]);
    }
  }
  Vector w(static_cast<std::size_t>(n), 0.0);
  for (std::size_t s = 0; s < support.size(); ++s) w[support[s]] = lambda[s];
  return w;
}

// Projected Newton point: argmin over u in conv(vertices) of
// sum_i h_i (u_i - (x_i - g_i / h_i))^2 over varying coordinates.
struct NewtonProjection {
  Vector weights;
  Vector point;
  double step_norm = 0.0;  // |point - x|_inf
  double slope = 0.0;      // <g, point - x>
};

NewtonProjection newton_projection(const EnumeratedObjective& objective, const ActionSet& set,
                                   std::span<const double> x) {
  const auto& varying = objective.varying();
  std::vector<int> free;
  for (int i = 0; i < set.dim(); ++i) {
    if (varying[i]) free.push_back(i);
  }
  const auto& vs = set.vertices();
  const Eigen::Index p = static_cast<Eigen::Index>(free.size());
  Eigen::VectorXd root_h(p);
  Eigen::VectorXd target(p);
  Vector g(set.dim(), 0.0);
  for (Eigen::Index r = 0; r < p; ++r) {
    const int i = free[r];
    g[i] = objective.gradient(i, x[i]);
    const double h = objective.curvature(x[i]);
    root_h(r) = std::sqrt(h);
    target(r) = x[i] - g[i] / h;
  }
  Eigen::MatrixXd q(p, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t k = 0; k < vs.size(); ++k) {
    for (Eigen::Index r = 0; r < p; ++r) {
      q(r, static_cast<Eigen::Index>(k)) = root_h(r) * (vs[k][free[r]] - target(r));
    }
  }
  NewtonProjection out;
  out.weights = p > 0 ? min_norm_weights(q) : Vector(vs.size(), 1.0 / vs.size());
  out.point = objective.point(out.weights);
  for (int i : free) {
    const double step = out.point[i] - x[i];
    out.step_norm = std::max(out.step_norm, std::abs(step));
    out.slope += g[i] * step;
  }
  for (int i = 0; i < set.dim(); ++i) {
    if (!varying[i]) out.step_norm = std::max(out.step_norm, std::abs(x[i] - vs.front()[i]));
  }
  return out;
}

}  // namespace

double solve_coordinate(const Regularizer& reg, double scaled_loss, double warm, int* iterations) {
  constexpr int kMaxIterations = 200;
  const double lo = kDomainEpsilon;
  const double hi = upper_bound(reg);
  auto gradient = [&](double x) { return scaled_loss + reg.derivative_unchecked(x); };

  if (iterations) *iterations = 0;
  if (gradient(hi) <= 0.0) return hi;
  if (gradient(lo) >= 0.0) return lo;

  double a = lo;
  double b = hi;
  double x = (warm > lo && warm < hi) ? warm : 0.5;
  for (int it = 1; it <= kMaxIterations; ++it) {
    if (iterations) *iterations = it;
    const double g = gradient(x);
    if (g == 0.0) return x;
    if (g < 0.0) {
      a = x;
    } else {
      b = x;
    }
    double next = x - g / reg.curvature_unchecked(x);
    if (std::abs(next - x) <= 1e-15 * x) return std::clamp(next, a, b);
    if (!(next > a && next < b)) next = split(a, b);
    x = next;
    if (b - a <= 4.0 * kEps * b) return x;
  }
  throw SolverError("coordinate solve did not converge", std::abs(gradient(x)));
}

double ftrl_objective(std::span<const double> losses, double eta_inv, const Regularizer& reg,
                      std::span<const double> x) {
  if (losses.size() != x.size()) throw DimensionError("losses and point differ in length");
  double f = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) f += losses[i] * x[i] + eta_inv * reg.value(x[i]);
  return f;
}

SolveReport solve_box(std::span<const double> losses, double eta_inv, double gamma,
                      const SolverOptions& options) {
  return solve_box(losses, eta_inv, Regularizer::hybrid(gamma), nullptr, options);
}

SolveReport solve_box(std::span<const double> losses, double eta_inv, const Regularizer& reg,
                      const WarmStart* warm, const SolverOptions& options) {
  check_inputs(losses, eta_inv);
  const std::size_t d = losses.size();
  const bool use_warm = warm && warm->x.size() == d;
  SolveReport report;
  report.x.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    int its = 0;
    report.x[i] = solve_coordinate(reg, losses[i] / eta_inv, use_warm ? warm->x[i] : 0.5, &its);
    report.iterations = std::max(report.iterations, its);
  }
  report.kkt_residual = box_residual(losses, eta_inv, reg, report.x);
  if (report.kkt_residual > options.stationarity_tolerance) {
    throw SolverError("box solve missed the stationarity tolerance", report.kkt_residual);
  }
  return report;
}

SolveReport solve_mset(std::span<const double> losses, double eta_inv, double gamma, int m,
                       const SolverOptions& options) {
  return solve_mset(losses, eta_inv, Regularizer::hybrid(gamma), m, nullptr, options);
}

SolveReport solve_mset(std::span<const double> losses, double eta_inv, const Regularizer& reg,
                       int m, const WarmStart* warm, const SolverOptions& options) {
  check_inputs(losses, eta_inv);
  const int d = static_cast<int>(losses.size());
  if (m < 1 || m > d - 1) throw ConfigError("m-set solve needs 1 <= m <= d-1");
  const double lo = kDomainEpsilon;
  const double hi = upper_bound(reg);

  Vector scaled(d);
  for (int i = 0; i < d; ++i) scaled[i] = losses[i] / eta_inv;

  const bool use_warm = warm && static_cast<int>(warm->x.size()) == d;
  Vector x = use_warm ? warm->x : Vector(d, static_cast<double>(m) / d);
  double shift;
  if (use_warm) {
    shift = warm->dual / eta_inv;
  } else {
    // Exact when all losses are equal.
    const double mean = std::accumulate(scaled.begin(), scaled.end(), 0.0) / d;
    shift = -mean - reg.derivative(static_cast<double>(m) / d);
  }

  // h(shift) = sum_i x_i(shift) - m is non-increasing; slope is -h'(shift).
  double slope = 0.0;
  auto evaluate = [&](double s) {
    double sum = 0.0;
    slope = 0.0;
    for (int i = 0; i < d; ++i) {
      x[i] = solve_coordinate(reg, scaled[i] + s, x[i]);
      sum += x[i];
      if (x[i] > lo && x[i] < hi) slope += 1.0 / reg.curvature_unchecked(x[i]);
    }
    return sum - m;
  };

  const double target = std::min(options.sum_tolerance, 1e-12);
  int evaluations = 1;
  double h = evaluate(shift);

  double a = shift, ha = h;  // h(a) >= 0
  double b = shift, hb = h;  // h(b) <= 0
  if (std::abs(h) > target) {
    // Bracketing: move in the direction of the root, expanding the step.
    const double direction = h > 0.0 ? 1.0 : -1.0;
    double step = slope > 0.0 ? 1.1 * std::abs(h) / slope : 1.0;
    if (!(step > 0.0) || !std::isfinite(step)) step = 1.0;
    double prev_s = shift, prev_h = h;
    while (true) {
      if (evaluations >= options.max_iterations) {
        throw SolverError("m-set dual bracketing did not terminate", std::abs(prev_h));
      }
      const double s = prev_s + direction * step;
      const double hs = evaluate(s);
      ++evaluations;
      if (direction * (hs - prev_h) > 1e-12 * (1.0 + std::abs(prev_h))) {
        throw SolverError("m-set dual function is not monotone", std::abs(hs - prev_h));
      }
      if (direction * hs <= 0.0 || std::abs(hs) <= target) {
        if (direction > 0.0) {
          a = prev_s, ha = prev_h, b = s, hb = hs;
        } else {
          a = s, ha = hs, b = prev_s, hb = prev_h;
        }
        shift = s;
        h = hs;
        break;
      }
      prev_s = s;
      prev_h = hs;
      step *= 2.0;
    }

    // Safeguarded Newton inside [a, b].
    while (std::abs(h) > target) {
      if (evaluations >= options.max_iterations) break;
      double next = slope > 0.0 ? shift + h / slope : 0.5 * (a + b);
      if (!(next > a && next < b)) next = 0.5 * (a + b);
      if (next == shift || b - a <= 4.0 * kEps * std::max(std::abs(a), std::abs(b))) break;
      shift = next;
      h = evaluate(shift);
      ++evaluations;
      if (h > 0.0) {
        a = shift, ha = h;
      } else {
        b = shift, hb = h;
      }
    }
  }
  (void)ha;
  (void)hb;

  SolveReport report;
  report.x = x;
  report.iterations = evaluations;
  report.dual_value = shift * eta_inv;
  report.kkt_residual = mset_residual(losses, eta_inv, reg, m, x);
  if (std::abs(h) > options.sum_tolerance) {
    throw SolverError("m-set solve missed the sum tolerance", std::abs(h));
  }
  if (report.kkt_residual > options.stationarity_tolerance) {
    throw SolverError("m-set solve missed the stationarity tolerance", report.kkt_residual);
  }
  return report;
}

Vector project_to_simplex(std::span<const double> v) {
  Vector sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0.0) theta = candidate;
  }
  Vector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = std::max(v[k] - theta, 0.0);
  return out;
}

double enumerated_weight_residual(std::span<const double> losses, double eta_inv,
                                  const Regularizer& reg, const ActionSet& set,
                                  std::span<const double> weights) {
  if (set.kind() != SetKind::kEnumerated) throw UnsupportedError("weights need an enumerated set");
  const EnumeratedObjective objective(losses, eta_inv, reg, set);
  const Vector x = objective.point(weights);
  return projected_gradient_norm(weights, objective.weight_gradient(x));
}

EnumeratedSolution solve_enumerated(std::span<const double> losses, double eta_inv, double gamma,
                                    const ActionSet& set, const SolverOptions& options) {
  return solve_enumerated(losses, eta_inv, Regularizer::hybrid(gamma), set, nullptr, options);
}

// Projected Newton over conv(vertices): each step moves towards the
// Hessian-metric projection of the Newton point, with Armijo backtracking.
// Vertex weights are carried along so the iterate stays an explicit mixture.
EnumeratedSolution solve_enumerated(std::span<const double> losses, double eta_inv,
                                    const Regularizer& reg, const ActionSet& set,
                                    const WarmStart* warm, const SolverOptions& options) {
  if (set.kind() != SetKind::kEnumerated) {
    throw UnsupportedError("solve_enumerated needs an enumerated action set");
  }
  if (static_cast<int>(losses.size()) != set.dim()) {
    throw DimensionError("losses do not match the action set dimension");
  }
  check_inputs(losses, eta_inv);
  const std::size_t n = set.vertices().size();
  const EnumeratedObjective objective(losses, eta_inv, reg, set);

  Vector w = (warm && warm->weights.size() == n) ? warm->weights : Vector(n, 1.0 / n);
  Vector x = objective.point(w);
  double f = objective.value(x);
  if (!std::isfinite(f)) {
    w.assign(n, 1.0 / n);
    x = objective.point(w);
    f = objective.value(x);
  }

  NewtonProjection proj = newton_projection(objective, set, x);
  int it = 0;
  while (proj.step_norm > options.enumerated_tolerance &&
         it < options.enumerated_max_iterations) {
    ++it;
    // Fraction to the boundary: the local model is poor beyond a face.
    double alpha_max = 1.0;
    for (int i = 0; i < set.dim(); ++i) {
      if (!objective.varying()[i]) continue;
      const double step = proj.point[i] - x[i];
      if (step < 0.0 && x[i] > 2.0 * kDomainEpsilon) {
        alpha_max = std::min(alpha_max, 0.99 * x[i] / -step);
      } else if (step > 0.0 && 1.0 - x[i] > 2.0 * kDomainEpsilon) {
        alpha_max = std::min(alpha_max, 0.99 * (1.0 - x[i]) / step);
      }
    }
    double alpha = alpha_max;
    bool accepted = false;
    Vector w_next(n);
    Vector x_next;
    double f_next = kInf;
    for (int ls = 0; ls < 60 && proj.slope < 0.0; ++ls) {
      for (std::size_t k = 0; k < n; ++k) w_next[k] = (1.0 - alpha) * w[k] + alpha * proj.weights[k];
      x_next = objective.point(w_next);
      f_next = objective.value(x_next);
      // Along the segment the objective is convex, so a directional
      // derivative still below c * slope also certifies sufficient decrease,
      // and unlike the value test it does not suffer from cancellation.
      double slope_next = 0.0;
      for (int i = 0; i < set.dim(); ++i) {
        if (objective.varying()[i]) {
          slope_next += objective.gradient(i, x_next[i]) * (proj.point[i] - x[i]);
        }
      }
      if (f_next <= f + 1e-4 * alpha * proj.slope || slope_next <= 1e-4 * proj.slope) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      // The decrease is below rounding of the slope: a full Newton step is
      // kept only if it shrinks the residual.
      for (std::size_t k = 0; k < n; ++k) {
        w_next[k] = (1.0 - alpha_max) * w[k] + alpha_max * proj.weights[k];
      }
      x_next = objective.point(w_next);
      NewtonProjection next = newton_projection(objective, set, x_next);
      if (!(next.step_norm < proj.step_norm)) break;
      w = std::move(w_next);
      x = std::move(x_next);
      f = objective.value(x);
      proj = std::move(next);
      continue;
    }
    w = std::move(w_next);
    x = std::move(x_next);
    f = f_next;
    proj = newton_projection(objective, set, x);
  }

  EnumeratedSolution out;
  out.weights = std::move(w);
  out.report.x = std::move(x);
  out.report.kkt_residual = proj.step_norm;
  out.report.iterations = it;
  out.report.degraded = proj.step_norm > options.enumerated_degraded_tolerance;
  return out;
}

double kkt_residual(std::span<const double> losses, double eta_inv, double gamma,
                    const ActionSet& set, std::span<const double> x) {
  return kkt_residual(losses, eta_inv, Regularizer::hybrid(gamma), set, x);
}

double kkt_residual(std::span<const double> losses, double eta_inv, const Regularizer& reg,
                    const ActionSet& set, std::span<const double> x) {
  if (static_cast<int>(losses.size()) != set.dim() || static_cast<int>(x.size()) != set.dim()) {
    throw DimensionError("losses/point do not match the action set dimension");
  }
  switch (set.kind()) {
    case SetKind::kHypercube:
      return box_residual(losses, eta_inv, reg, x);
    case SetKind::kMSet:
      return mset_residual(losses, eta_inv, reg, set.subset_size(), x);
    case SetKind::kEnumerated: {
      const EnumeratedObjective objective(losses, eta_inv, reg, set);
      return newton_projection(objective, set, x).step_norm;
    }
  }
  return 0.0;
}

FtrlSolver::FtrlSolver(ActionSet set, Regularizer reg, SolverOptions options)
    : set_(std::move(set)), reg_(reg), options_(options) {}

const SolveReport& FtrlSolver::solve(std::span<const double> losses, double eta_inv) {
  const WarmStart* warm = has_warm_ ? &warm_ : nullptr;
  switch (set_.kind()) {
    case SetKind::kHypercube:
      last_ = solve_box(losses, eta_inv, reg_, warm, options_);
      break;
    case SetKind::kMSet:
      last_ = solve_mset(losses, eta_inv, reg_, set_.subset_size(), warm, options_);
      warm_.dual = last_.dual_value;
      break;
    case SetKind::kEnumerated: {
      EnumeratedSolution sol = solve_enumerated(losses, eta_inv, reg_, set_, warm, options_);
      warm_.weights = std::move(sol.weights);
      last_ = std::move(sol.report);
      break;
    }
  }
  warm_.x = last_.x;
  has_warm_ = true;
  return last_;
}

}  // namespace semibandit
