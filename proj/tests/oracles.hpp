// Reference computations used by the tests. Deliberately naive: grid search,
// exhaustive enumeration, finite differences.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using Vec = std::vector<double>;
using Vertex = std::vector<std::uint8_t>;

// Hybrid regularizer written out independently of the library.
inline double hybrid(double x, double gamma) {
  const double c = 1.0 - x;
  return -std::sqrt(x) + (c > 0.0 ? gamma * c * std::log(c) : 0.0);
}

inline double central_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// argmin over the grid {0, step, ..., 1} of s x + psi(x).
inline double grid_argmin_1d(const std::function<double(double)>& psi, double s,
                             double step = 1e-3) {
  double best = 0.0;
  double best_value = std::numeric_limits<double>::infinity();
  const int n = static_cast<int>(std::lround(1.0 / step));
  for (int k = 0; k <= n; ++k) {
    const double x = k * step;
    const double v = s * x + psi(x);
    if (v < best_value) {
      best_value = v;
      best = x;
    }
  }
  return best;
}

// argmin of sum_i L_i x_i / eta_inv + psi(x_i) over the grid of the
// probability simplex in 3 dimensions (MSet(3,1)).
inline Vec grid_argmin_simplex3(const std::function<double(double)>& psi, const Vec& scaled,
                                double step = 1e-3) {
  const int n = static_cast<int>(std::lround(1.0 / step));
  Vec best(3);
  double best_value = std::numeric_limits<double>::infinity();
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; a + b <= n; ++b) {
      const Vec x{a * step, b * step, (n - a - b) * step};
      double v = 0.0;
      for (int i = 0; i < 3; ++i) v += scaled[i] * x[i] + psi(x[i]);
      if (v < best_value) {
        best_value = v;
        best = x;
      }
    }
  }
  return best;
}

// argmin over the square [0,1]^2 on a grid.
inline Vec grid_argmin_square(const std::function<double(double)>& psi, const Vec& scaled,
                              double step = 1e-3) {
  return {grid_argmin_1d(psi, scaled[0], step), grid_argmin_1d(psi, scaled[1], step)};
}

inline std::vector<Vertex> all_subsets(int d, int m) {
  std::vector<Vertex> out;
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    if (m >= 0 && std::popcount(mask) != m) continue;
    Vertex v(d);
    for (int i = 0; i < d; ++i) v[i] = (mask >> i) & 1u;
    out.push_back(v);
  }
  return out;
}

// Exact law of independent Bernoulli(x_i) coordinates.
inline std::map<Vertex, double> product_law(const Vec& x) {
  std::map<Vertex, double> law;
  for (const auto& v : all_subsets(static_cast<int>(x.size()), -1)) {
    double p = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) p *= v[i] ? x[i] : 1.0 - x[i];
    law[v] = p;
  }
  return law;
}

// Random point in the m-set hull as a random convex combination of random
// m-subsets.
template <class Rng>
Vec random_mset_point(int d, int m, Rng& rng, int n_vertices = 0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  if (n_vertices <= 0) n_vertices = 1 + static_cast<int>(rng() % 8);
  Vec x(d, 0.0);
  Vec w(n_vertices);
  double total = 0.0;
  for (double& v : w) {
    v = -std::log(1.0 - u(rng));
    total += v;
  }
  std::vector<int> idx(d);
  for (int k = 0; k < n_vertices; ++k) {
    for (int i = 0; i < d; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    for (int i = 0; i < m; ++i) x[idx[i]] += w[k] / total;
  }
  for (double& v : x) v = std::min(v, 1.0);
  return x;
}

// Same, pulled towards the centre so every coordinate lies in (0, 1).
template <class Rng>
Vec random_interior_mset_point(int d, int m, Rng& rng, double mix = 0.1) {
  Vec x = random_mset_point(d, m, rng);
  for (double& v : x) v = (1.0 - mix) * v + mix * m / d;
  return x;
}

inline double mean(const Vec& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace oracle
