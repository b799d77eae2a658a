#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "semibandit/common.hpp"

namespace semibandit {

enum class EnvironmentKind { kStochastic, kPhasedAdversarial, kBanditStochastic };

EnvironmentKind parse_environment_kind(std::string_view name);
std::string environment_name(EnvironmentKind kind);

struct EnvironmentSpec {
  EnvironmentKind kind = EnvironmentKind::kStochastic;
  int d = 10;
  // Arms 1..m are the good ones. For the bandit environment 0 <= m <= d.
  int m = 5;
  double gap = 0.125;
  double phase_base = 1.6;
  std::int64_t horizon = 100000;

  void validate() const;
};

struct LossRealization {
  Vector loss;
  Vector mean;
};

// -gap for i <= m, +gap for i > m.
Vector stochastic_means(const EnvironmentSpec& spec);

// Phase lengths max(1, round(base^s)), s = 1, 2, ..., until they cover
// `horizon` rounds. The last phase may extend past the horizon.
std::vector<std::int64_t> phase_lengths(double phase_base, std::int64_t horizon);

// 1-based phase index containing round t.
std::int64_t phase_of(std::int64_t t, double phase_base);

// Odd phases: 1 - gap for i <= m, 1 otherwise.
// Even phases: -1 for i <= m, gap - 1 otherwise.
Vector phased_means(std::int64_t t, const EnvironmentSpec& spec);

// -gap/d for i <= m, +gap/d otherwise.
Vector bandit_means(const EnvironmentSpec& spec);

// Independent +-1 draws with P(+1) = (1 + mean_i) / 2.
LossRealization draw_losses(const Vector& mean, Rng& rng);

// Independent +-1/d draws with the bandit means; ||loss||_1 = 1 always.
LossRealization bandit_losses(const EnvironmentSpec& spec, Rng& rng, std::int64_t t);

// Sequential generator for one run. Rounds must be requested in order.
class Environment {
 public:
  Environment(EnvironmentSpec spec, std::uint64_t seed);

  LossRealization next();
  const EnvironmentSpec& spec() const { return spec_; }
  // Next round to be generated.
  std::int64_t round() const { return t_; }

  // Mean vector of round t without drawing.
  Vector mean_at(std::int64_t t) const;

 private:
  EnvironmentSpec spec_;
  Rng rng_;
  std::int64_t t_ = 1;
  std::int64_t phase_ = 1;
  std::int64_t phase_end_ = 0;
};

}  // namespace semibandit
