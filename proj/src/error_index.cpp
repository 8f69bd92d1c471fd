#include "alopc/error_index.hpp"

#include "alopc/errors.hpp"
#include "alopc/tolerance.hpp"

namespace alopc {

double local_error(const PcMatrix& matrix, const PriorityVector& weights, int i,
                   int j) {
  require_compatible(matrix, weights);
  const AloGroup& g = matrix.group();
  return g.combine(matrix.at(i, j), g.divide(weights.weights[j], weights.weights[i]));
}

double pair_error(const PcMatrix& matrix, const PriorityVector& weights, int i,
                  int j) {
  return matrix.group().norm(local_error(matrix, weights, i, j));
}

ErrorReport global_error(const PcMatrix& matrix, const PriorityVector& weights) {
  require_compatible(matrix, weights);
  const AloGroup& g = matrix.group();
  const int n = matrix.size();

  ErrorReport report;
  report.n = n;
  report.per_pair.resize(static_cast<size_t>(n) * n);

  double best = g.identity();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double value = pair_error(matrix, weights, i, j);
      report.per_pair[static_cast<size_t>(i) * n + j] = value;
      if (value > best) best = value;
    }
  }
  report.global = best;

  // Ties within the tolerance resolve to the lexicographically smallest pair.
  [&] {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (report.per_pair[static_cast<size_t>(i) * n + j] >= best - kTol) {
          report.argmax_i = i;
          report.argmax_j = j;
          return;
        }
      }
    }
  }();
  return report;
}

SandwichBounds lemma3_bounds(const PcMatrix& matrix, const PriorityVector& weights,
                             int i, int j, const ErrorReport& report) {
  require_compatible(matrix, weights);
  const AloGroup& g = matrix.group();
  const double ratio = weights.ratio(i, j);
  return SandwichBounds{g.combine(g.inverse(report.global), ratio),
                        g.combine(report.global, ratio)};
}

SandwichBounds lemma3_bounds(const PcMatrix& matrix, const PriorityVector& weights,
                             int i, int j) {
  return lemma3_bounds(matrix, weights, i, j, global_error(matrix, weights));
}

}  // namespace alopc
