#pragma once

#include <optional>
#include <vector>

#include "alopc/pc_matrix.hpp"

namespace alopc {

struct TriadAssessment {
  Triad triad;
  double product = 0.0;  // c_ij (+) c_jk (+) c_ki
  double eta = 0.0;      // max{product, inverse(product)}
};

/// Triad-based inconsistency of a matrix. `gi` is the maximum symmetrized
/// triad product; it equals the identity exactly when the matrix is
/// consistent. `ki` and `ci` need a second field operation, so they exist
/// for the multiplicative group only.
struct InconsistencyReport {
  double gi = 0.0;
  Triad argmax;
  std::vector<TriadAssessment> per_triad;  // canonical triads, i < j < k
  std::optional<double> ki;
  std::optional<double> ci;
  std::optional<double> lambda_max;  // filled alongside ci
};

/// Symmetrized product of one triad; invariant under permutations of
/// (i, j, k) on reciprocal matrices. Indices must be distinct.
double triad_eta(const PcMatrix& matrix, int i, int j, int k);

/// GI and the per-triad table. Throws NoTriadsError for n < 3, where no
/// triad exists to measure. ki/ci are left unset.
InconsistencyReport gi_report(const PcMatrix& matrix);

/// Just the GI value.
double gi(const PcMatrix& matrix);

/// Koczkodaj's index, computed by the direct min/max scan over ordered
/// triples (not via GI, so the GI bridge stays a genuine cross-check).
/// Multiplicative group, n >= 3 only.
double ki(const PcMatrix& matrix);

/// Saaty's eigenvalue index (lambda_max - n)/(n - 1), multiplicative group
/// only. Inherits the power iteration's convergence parameters.
double ci(const PcMatrix& matrix);

/// Full report: GI always, KI and CI when the group is multiplicative and
/// the matrix is large enough for triads.
InconsistencyReport analyze(const PcMatrix& matrix);

}  // namespace alopc
