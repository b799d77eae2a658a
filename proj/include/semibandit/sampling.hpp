#pragma once

#include <span>
#include <vector>

#include "semibandit/action_set.hpp"
#include "semibandit/common.hpp"

namespace semibandit {

// Sampling rules P with E_{X~P(x)}[X] = x.

Action sample_hypercube(std::span<const double> x, Rng& rng);

// One step of the m-set decomposition chain: weight on beta_{top,bottom}.
struct DecompositionComponent {
  double weight;
  int top;     // i: leading coordinates fixed to 1
  int bottom;  // j: trailing coordinates fixed to 0
};

// x = sum_s weight_s * beta_{top_s,bottom_s} in descending-sorted coordinates,
// where beta_{i,j} = (1 x i, (m-i)/(d-i-j) x (d-i-j), 0 x j).
//
// The chain always runs from (0,0) to (m, d-m), so it has exactly d+1
// components; many carry zero weight. support() lists the others.
struct MSetDecomposition {
  int d = 0;
  int m = 0;
  std::vector<DecompositionComponent> components;
  // order[k] is the original index of the k-th largest coordinate.
  std::vector<int> order;

  std::vector<DecompositionComponent> support() const;
  // sum_s weight_s * beta_s, in sorted coordinates.
  Vector reconstruct_sorted() const;
};

// beta_{i,j} for a d-dimensional m-set.
Vector beta_vector(int d, int m, int i, int j);

// Throws FeasibilityError when hull_residual(x) > 1e-9.
MSetDecomposition decompose_mset(std::span<const double> x, int m);

Action sample_mset(std::span<const double> x, int m, Rng& rng);
Action sample_mset(const MSetDecomposition& decomposition, Rng& rng);

// Moves a uniformly random k-subset of block into block[0..k) (partial
// Fisher-Yates).
void choose_uniform_subset(std::span<int> block, int k, Rng& rng);

// Categorical draw; weights are renormalized and must sum to 1 within 1e-9.
std::size_t sample_categorical(std::span<const double> weights, Rng& rng);

Action sample_enumerated(const ActionSet& set, std::span<const double> weights, Rng& rng);

}  // namespace semibandit
