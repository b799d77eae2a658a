#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "semibandit/common.hpp"

namespace semibandit {

enum class SetKind { kHypercube, kMSet, kEnumerated };

// A combinatorial action set X ⊂ {0,1}^d together with its convex hull.
//
// Three families are supported: the full hypercube {0,1}^d, the m-set (all
// subsets of exactly m arms) and a small explicit vertex list. Instances are
// immutable after construction and safe to share between threads.
class ActionSet {
 public:
  static constexpr std::size_t kMaxEnumeratedVertices = std::size_t{1} << 16;

  static ActionSet hypercube(int d);
  static ActionSet mset(int d, int m);
  // Duplicate vertices are dropped (first occurrence kept).
  static ActionSet enumerated(std::vector<Action> vertices);
  // One vertex per line, characters '0'/'1' without separators. Blank lines
  // and lines starting with '#' are ignored.
  static ActionSet load_enumerated(const std::filesystem::path& path);

  SetKind kind() const { return kind_; }
  int dim() const { return d_; }
  // Subset size of an m-set; for other kinds the same as max_ones().
  int subset_size() const { return m_; }
  // max_{x in X} ||x||_1.
  int max_ones() const { return m_; }
  const std::vector<Action>& vertices() const { return vertices_; }

  bool contains(std::span<const std::uint8_t> v) const;

  // argmin_{x in X} <x, w>, ties broken towards the lowest index.
  Action linear_min_oracle(std::span<const double> w) const;

  // Position of the minimizing vertex in vertices(); Enumerated sets only.
  std::size_t enumerated_argmin(std::span<const double> w) const;

  // Largest constraint violation of x: box violations and, for an m-set,
  // |sum(x) - m|. Zero means x is in the hull (for Enumerated sets only the
  // box is checked).
  double hull_residual(std::span<const double> x) const;

  std::string describe() const;

 private:
  ActionSet(SetKind kind, int d, int m, std::vector<Action> vertices)
      : kind_(kind), d_(d), m_(m), vertices_(std::move(vertices)) {}

  void check_dim(std::size_t n) const;

  SetKind kind_;
  int d_;
  int m_;
  std::vector<Action> vertices_;
};

}  // namespace semibandit
