#pragma once

#include <span>
#include <string>

namespace semibandit {

// Stochastic constant for the m-set: sum over suboptimal arms of 1/(4 gap_i).
double c_sto_mset(std::span<const double> gaps);

// Adversarial constant for the m-set at lambda = min(1, m/(d-m)):
// (d-m) (sqrt(lambda) + (1/gamma - gamma log((d-m) lambda / m)) lambda).
double c_adv_mset(int d, int m, double gamma);

// Order-of-magnitude bounds valid for any action set with at most m ones.
// Absolute constants are dropped.
struct GeneralBounds {
  double c_sto_upper;  // m d / (4 gap_min)
  double c_add_upper;  // m^2 / (gamma^2 gap_min)
  double c_adv_upper;  // sqrt(m d) / gamma
};

GeneralBounds general_bounds(int d, int m, double gamma, double gap_min);

struct BoundReport {
  double c_sto = 0.0;
  double c_adv = 0.0;
  double c_add_upper = 0.0;
  double general_c_sto_upper = 0.0;
  double gamma_used = 0.0;
};

// Report for the m-set under the stochastic environment with mean gap
// `env_gap`: every suboptimal arm has per-arm gap 2 * env_gap.
BoundReport mset_bound_report(int d, int m, double env_gap);

// Labeled key=value lines.
std::string format_report(const BoundReport& report);

}  // namespace semibandit
