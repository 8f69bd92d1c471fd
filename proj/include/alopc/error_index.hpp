#pragma once

#include <vector>

#include "alopc/priority.hpp"

namespace alopc {

/// Global error of a matrix-vector pair plus the full n x n table of pair
/// errors. The table is kept so order-preservation certificates can be
/// cross-checked without recomputation; n stays small in practice.
struct ErrorReport {
  int n = 0;
  double global = 0.0;  // never below the group identity
  int argmax_i = 0;     // lexicographically smallest pair attaining the max
  int argmax_j = 0;
  std::vector<double> per_pair;  // row-major n*n, symmetric

  double at(int i, int j) const { return per_pair.at(static_cast<size_t>(i) * n + j); }
};

/// c_ij (+) w_j (/) w_i: how far judgment (i, j) deviates from the ratio the
/// ranking implies. Identity when they agree exactly.
double local_error(const PcMatrix& matrix, const PriorityVector& weights, int i, int j);

/// Symmetrized local error: max of the local error and its inverse.
double pair_error(const PcMatrix& matrix, const PriorityVector& weights, int i, int j);

/// Maximum pair error over all pairs, with the attaining pair and the full
/// per-pair table.
ErrorReport global_error(const PcMatrix& matrix, const PriorityVector& weights);

/// Sandwich bounds around c_ij implied by the global error index:
///   global^(-1) (+) w_i (/) w_j  <=  c_ij  <=  global (+) w_i (/) w_j.
struct SandwichBounds {
  double lower = 0.0;
  double upper = 0.0;
};

SandwichBounds lemma3_bounds(const PcMatrix& matrix, const PriorityVector& weights,
                             int i, int j);
/// Overload reusing a precomputed report for the same (matrix, weights) pair.
SandwichBounds lemma3_bounds(const PcMatrix& matrix, const PriorityVector& weights,
                             int i, int j, const ErrorReport& report);

}  // namespace alopc
