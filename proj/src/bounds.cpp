#include "semibandit/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "semibandit/common.hpp"
#include "semibandit/regularizers.hpp"

namespace semibandit {

double c_sto_mset(std::span<const double> gaps) {
  if (gaps.empty()) throw ConfigError("c_sto needs at least one suboptimal arm");
  double sum = 0.0;
  for (double g : gaps) {
    if (!(g > 0.0)) throw ConfigError("gaps must be positive");
    sum += 1.0 / (4.0 * g);
  }
  return sum;
}

double c_adv_mset(int d, int m, double gamma) {
  if (m < 1 || m > d - 1) throw ConfigError("c_adv needs 1 <= m <= d-1");
  if (!(gamma > 0.0 && gamma <= 1.0)) throw ConfigError("c_adv needs gamma in (0, 1]");
  const double k = d - m;
  const double lambda = std::min(1.0, m / k);
  return k * (std::sqrt(lambda) + (1.0 / gamma - gamma * std::log(k * lambda / m)) * lambda);
}

GeneralBounds general_bounds(int d, int m, double gamma, double gap_min) {
  if (d < 1 || m < 1 || m > d) throw ConfigError("general bounds need 1 <= m <= d");
  if (!(gamma > 0.0)) throw ConfigError("gamma must be positive");
  if (!(gap_min > 0.0)) throw ConfigError("gap_min must be positive");
  const double md = static_cast<double>(m) * d;
  return {md / (4.0 * gap_min), static_cast<double>(m) * m / (gamma * gamma * gap_min),
          std::sqrt(md) / gamma};
}

BoundReport mset_bound_report(int d, int m, double env_gap) {
  if (!(env_gap > 0.0)) throw ConfigError("gap must be positive");
  const double gamma = select_gamma(d, m);
  const double arm_gap = 2.0 * env_gap;
  const std::vector<double> gaps(d - m, arm_gap);
  const GeneralBounds general = general_bounds(d, m, gamma, arm_gap);
  BoundReport r;
  r.c_sto = c_sto_mset(gaps);
  r.c_adv = c_adv_mset(d, m, gamma);
  r.c_add_upper = general.c_add_upper;
  r.general_c_sto_upper = general.c_sto_upper;
  r.gamma_used = gamma;
  return r;
}

std::string format_report(const BoundReport& report) {
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "c_sto=%.17g\nc_adv=%.17g\nc_add_upper=%.17g\ngeneral_c_sto_upper=%.17g\n"
                "gamma_used=%.17g\n",
                report.c_sto, report.c_adv, report.c_add_upper, report.general_c_sto_upper,
                report.gamma_used);
  return buf;
}

}  // namespace semibandit
