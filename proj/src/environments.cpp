#include "semibandit/environments.hpp"

#include <cmath>
#include <string>

namespace semibandit {
namespace {

std::int64_t phase_length(double base, std::int64_t s) {
  const double len = std::round(std::pow(base, static_cast<double>(s)));
  return len < 1.0 ? 1 : static_cast<std::int64_t>(len);
}

}  // namespace

EnvironmentKind parse_environment_kind(std::string_view name) {
  if (name == "stochastic") return EnvironmentKind::kStochastic;
  if (name == "phased") return EnvironmentKind::kPhasedAdversarial;
  if (name == "bandit") return EnvironmentKind::kBanditStochastic;
  throw ConfigError("unknown environment '" + std::string(name) + "'");
}

std::string environment_name(EnvironmentKind kind) {
  switch (kind) {
    case EnvironmentKind::kStochastic:
      return "stochastic";
    case EnvironmentKind::kPhasedAdversarial:
      return "phased";
    case EnvironmentKind::kBanditStochastic:
      return "bandit";
  }
  return "unknown";
}

void EnvironmentSpec::validate() const {
  if (d < 1) throw ConfigError("environment needs d >= 1");
  if (kind == EnvironmentKind::kBanditStochastic) {
    if (m < 0 || m > d) throw ConfigError("bandit environment needs 0 <= m <= d");
  } else if (m < 1 || m > d - 1) {
    throw ConfigError("environment needs 1 <= m <= d-1");
  }
  if (!(gap > 0.0 && gap <= 1.0)) throw ConfigError("gap must lie in (0, 1]");
  if (kind == EnvironmentKind::kPhasedAdversarial && !(phase_base > 1.0)) {
    throw ConfigError("phase_base must exceed 1");
  }
  if (horizon < 1) throw ConfigError("horizon must be positive");
}

Vector stochastic_means(const EnvironmentSpec& spec) {
  Vector mu(spec.d);
  for (int i = 0; i < spec.d; ++i) mu[i] = i < spec.m ? -spec.gap : spec.gap;
  return mu;
}

std::vector<std::int64_t> phase_lengths(double phase_base, std::int64_t horizon) {
  std::vector<std::int64_t> out;
  std::int64_t covered = 0;
  for (std::int64_t s = 1; covered < horizon; ++s) {
    out.push_back(phase_length(phase_base, s));
    covered += out.back();
  }
  return out;
}

std::int64_t phase_of(std::int64_t t, double phase_base) {
  if (t < 1) throw ConfigError("rounds start at 1");
  std::int64_t end = 0;
  for (std::int64_t s = 1;; ++s) {
    end += phase_length(phase_base, s);
    if (t <= end) return s;
  }
}

namespace {

Vector phase_means(std::int64_t phase, const EnvironmentSpec& spec) {
  Vector mu(spec.d);
  const bool odd = phase % 2 == 1;
  for (int i = 0; i < spec.d; ++i) {
    const bool good = i < spec.m;
    if (odd) {
      mu[i] = good ? 1.0 - spec.gap : 1.0;
    } else {
      mu[i] = good ? -1.0 : spec.gap - 1.0;
    }
  }
  return mu;
}

}  // namespace

Vector phased_means(std::int64_t t, const EnvironmentSpec& spec) {
  return phase_means(phase_of(t, spec.phase_base), spec);
}

Vector bandit_means(const EnvironmentSpec& spec) {
  const double scale = spec.gap / spec.d;
  Vector mu(spec.d);
  for (int i = 0; i < spec.d; ++i) mu[i] = i < spec.m ? -scale : scale;
  return mu;
}

LossRealization draw_losses(const Vector& mean, Rng& rng) {
  LossRealization out{Vector(mean.size()), mean};
  for (std::size_t i = 0; i < mean.size(); ++i) {
    out.loss[i] = uniform01(rng) < 0.5 * (1.0 + mean[i]) ? 1.0 : -1.0;
  }
  return out;
}

LossRealization bandit_losses(const EnvironmentSpec& spec, Rng& rng, std::int64_t) {
  const double unit = 1.0 / spec.d;
  LossRealization out{Vector(spec.d), bandit_means(spec)};
  for (int i = 0; i < spec.d; ++i) {
    // mean = unit * (2p - 1)
    const double p = 0.5 * (1.0 + out.mean[i] / unit);
    out.loss[i] = uniform01(rng) < p ? unit : -unit;
  }
  return out;
}

Environment::Environment(EnvironmentSpec spec, std::uint64_t seed)
    : spec_(std::move(spec)), rng_(seed) {
  spec_.validate();
  phase_end_ = phase_length(spec_.phase_base, 1);
}

Vector Environment::mean_at(std::int64_t t) const {
  switch (spec_.kind) {
    case EnvironmentKind::kStochastic:
      return stochastic_means(spec_);
    case EnvironmentKind::kPhasedAdversarial:
      return phased_means(t, spec_);
    case EnvironmentKind::kBanditStochastic:
      return bandit_means(spec_);
  }
  return {};
}

LossRealization Environment::next() {
  LossRealization out;
  switch (spec_.kind) {
    case EnvironmentKind::kStochastic:
      out = draw_losses(stochastic_means(spec_), rng_);
      break;
    case EnvironmentKind::kPhasedAdversarial:
      while (t_ > phase_end_) phase_end_ += phase_length(spec_.phase_base, ++phase_);
      out = draw_losses(phase_means(phase_, spec_), rng_);
      break;
    case EnvironmentKind::kBanditStochastic:
      out = bandit_losses(spec_, rng_, t_);
      break;
  }
  ++t_;
  return out;
}

}  // namespace semibandit
