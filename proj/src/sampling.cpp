#include "semibandit/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace semibandit {
namespace {

constexpr double kFeasibilityTolerance = 1e-9;
constexpr double kSnap = 1e-12;

}  // namespace

Action sample_hypercube(std::span<const double> x, Rng& rng) {
  Action out(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = uniform01(rng) < x[i] ? 1 : 0;
  return out;
}

Vector beta_vector(int d, int m, int i, int j) {
  Vector beta(d, 0.0);
  const int middle = d - i - j;
  const double fill = middle > 0 ? static_cast<double>(m - i) / middle : 0.0;
  for (int k = 0; k < i; ++k) beta[k] = 1.0;
  for (int k = i; k < d - j; ++k) beta[k] = fill;
  return beta;
}

std::vector<DecompositionComponent> MSetDecomposition::support() const {
  std::vector<DecompositionComponent> out;
  for (const auto& c : components) {
    if (c.weight > 0.0) out.push_back(c);
  }
  return out;
}

Vector MSetDecomposition::reconstruct_sorted() const {
  Vector sum(d, 0.0);
  for (const auto& c : components) {
    if (c.weight == 0.0) continue;
    const Vector beta = beta_vector(d, m, c.top, c.bottom);
    for (int k = 0; k < d; ++k) sum[k] += c.weight * beta[k];
  }
  return sum;
}

MSetDecomposition decompose_mset(std::span<const double> x, int m) {
  const int d = static_cast<int>(x.size());
  const ActionSet set = ActionSet::mset(d, m);
  const double residual = set.hull_residual(x);
  if (residual > kFeasibilityTolerance) {
    throw FeasibilityError("point is outside the m-set hull", residual);
  }

  MSetDecomposition out;
  out.d = d;
  out.m = m;
  out.order.resize(d);
  std::iota(out.order.begin(), out.order.end(), 0);
  std::stable_sort(out.order.begin(), out.order.end(), [&](int a, int b) { return x[a] > x[b]; });

  Vector y(d);
  for (int k = 0; k < d; ++k) {
    double v = std::clamp(x[out.order[k]], 0.0, 1.0);
    if (v < kSnap) v = 0.0;
    if (v > 1.0 - kSnap) v = 1.0;
    y[k] = v;
  }

  // Greedy walk along the chain. Coordinates still in the middle block have
  // all received the same mass `filled` from earlier components; a top
  // coordinate leaves the block once its residual equals the remaining
  // weight, a bottom one once its residual hits zero.
  out.components.reserve(d + 1);
  int i = 0;
  int j = 0;
  double remaining = 1.0;
  double filled = 0.0;
  while (i < m && j < d - m) {
    const double fill = static_cast<double>(m - i) / (d - i - j);
    const double top_residual = y[i] - filled;
    const double bottom_residual = y[d - 1 - j] - filled;
    const double top_limit = (remaining - top_residual) / (1.0 - fill);
    const double bottom_limit = bottom_residual / fill;
    const double p = std::clamp(std::min(top_limit, bottom_limit), 0.0, remaining);
    out.components.push_back({p, i, j});
    remaining -= p;
    filled += p * fill;
    if (top_limit <= bottom_limit) {
      ++i;
    } else {
      ++j;
    }
  }
  // Once i == m or j == d-m every remaining beta equals beta_{m,d-m}; the
  // rest of the weight is placed at the end of the chain.
  while (i < m || j < d - m) {
    out.components.push_back({0.0, i, j});
    if (i < m) {
      ++i;
    } else {
      ++j;
    }
  }
  out.components.push_back({std::max(remaining, 0.0), m, d - m});
  return out;
}

void choose_uniform_subset(std::span<int> block, int k, Rng& rng) {
  const int n = static_cast<int>(block.size());
  for (int a = 0; a < k && a < n - 1; ++a) {
    std::uniform_int_distribution<int> pick(a, n - 1);
    std::swap(block[a], block[pick(rng)]);
  }
}

Action sample_mset(const MSetDecomposition& decomposition, Rng& rng) {
  const auto& comps = decomposition.components;
  const double u = uniform01(rng);
  std::size_t s = comps.size() - 1;
  double cumulative = 0.0;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (comps[k].weight <= 0.0) continue;
    cumulative += comps[k].weight;
    s = k;
    if (u < cumulative) break;
  }
  const int d = decomposition.d;
  const int top = comps[s].top;
  const int bottom = comps[s].bottom;

  Action out(d, 0);
  for (int k = 0; k < top; ++k) out[decomposition.order[k]] = 1;
  std::vector<int> middle(decomposition.order.begin() + top, decomposition.order.end() - bottom);
  const int take = decomposition.m - top;
  choose_uniform_subset(middle, take, rng);
  for (int k = 0; k < take; ++k) out[middle[k]] = 1;
  return out;
}

Action sample_mset(std::span<const double> x, int m, Rng& rng) {
  return sample_mset(decompose_mset(x, m), rng);
}

std::size_t sample_categorical(std::span<const double> weights, Rng& rng) {
  if (weights.empty()) throw Error("categorical draw over an empty weight vector");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw Error("categorical weights must be non-negative");
    total += w;
  }
  if (total <= 0.0) throw Error("categorical weights are all zero");
  if (std::abs(total - 1.0) > kFeasibilityTolerance) {
    throw FeasibilityError("categorical weights do not sum to 1", std::abs(total - 1.0));
  }
  const double u = uniform01(rng) * total;
  double cumulative = 0.0;
  std::size_t last = 0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k] <= 0.0) continue;
    cumulative += weights[k];
    last = k;
    if (u < cumulative) return k;
  }
  return last;
}

Action sample_enumerated(const ActionSet& set, std::span<const double> weights, Rng& rng) {
  if (set.kind() != SetKind::kEnumerated) {
    throw UnsupportedError("sample_enumerated needs an enumerated action set");
  }
  if (weights.size() != set.vertices().size()) {
    throw DimensionError("one weight per vertex expected");
  }
  return set.vertices()[sample_categorical(weights, rng)];
}

}  // namespace semibandit
