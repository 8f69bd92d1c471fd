#pragma once

#include <string_view>
#include <vector>

#include "alopc/pc_matrix.hpp"

namespace alopc {

enum class Method { ggmm, gmm, evm, external };

std::string_view to_string(Method m);
Method method_from_string(std::string_view name);

/// A ranking of the alternatives: one weight per alternative, living in the
/// same group as the source matrix. Only the ratios w_i (/) w_j matter to
/// order preservation; `scale` records the scaling factor that was applied
/// so results are reproducible.
struct PriorityVector {
  GroupId group = GroupId::multiplicative;
  std::vector<double> weights;
  Method method = Method::external;
  double scale = 1.0;

  int size() const { return static_cast<int>(weights.size()); }
  /// w_i (/) w_j in the vector's group.
  double ratio(int i, int j) const;
};

/// Wraps a caller-supplied weight vector, validating every weight against
/// the group domain.
PriorityVector external_vector(const AloGroup& group, std::vector<double> weights);

/// Throws MismatchError unless the vector fits the matrix (same group, same n).
void require_compatible(const PcMatrix& matrix, const PriorityVector& weights);

/// Generalized geometric mean: w_i is the n-th root of the i-th row's
/// combination, scaled by the combination of all row-mean inverses. Works in
/// every group; the scale cancels out of every ratio.
PriorityVector ggmm(const PcMatrix& matrix);

/// Classical geometric mean for the multiplicative group: row geometric
/// means rescaled to sum to one. Throws MismatchError for other groups.
PriorityVector gmm(const PcMatrix& matrix);

/// Rescales a multiplicative-group vector so its weights sum to one.
PriorityVector sum_normalized(const PriorityVector& v);

struct EvmResult {
  PriorityVector vector;  // sum-to-one scaled principal eigenvector
  double lambda_max = 0.0;
  int iterations = 0;
};

/// Principal eigenvector of a multiplicative matrix by power iteration with
/// sum-to-one renormalization each step. Converges when successive vectors
/// differ by less than `tol` in the max norm. Positive matrices make
/// convergence certain; the cap guards the degenerate numeric cases.
EvmResult evm(const PcMatrix& matrix, double tol = 1e-12, int max_iterations = 10000);

}  // namespace alopc
