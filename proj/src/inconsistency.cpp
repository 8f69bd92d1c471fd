#include "alopc/inconsistency.hpp"

#include <algorithm>
#include <cmath>

#include "alopc/errors.hpp"
#include "alopc/priority.hpp"
#include "alopc/tolerance.hpp"

namespace alopc {

namespace {

void require_triads(const PcMatrix& matrix) {
  if (matrix.size() < 3) {
    throw NoTriadsError("a " + std::to_string(matrix.size()) + "x" +
                        std::to_string(matrix.size()) +
                        " matrix has no triads; inconsistency indices need n >= 3");
  }
}

void require_multiplicative(const PcMatrix& matrix, const char* what) {
  if (matrix.group().id() != GroupId::multiplicative) {
    throw MismatchError(std::string(what) +
                        " is defined for the multiplicative group only, got \"" +
                        std::string(matrix.group().name()) + "\"");
  }
}

}  // namespace

double triad_eta(const PcMatrix& matrix, int i, int j, int k) {
  if (i == j || j == k || i == k) {
    throw MismatchError("triad indices must be distinct, got (" + std::to_string(i) +
                        ", " + std::to_string(j) + ", " + std::to_string(k) + ")");
  }
  return matrix.group().norm(matrix.triad_product(Triad{i, j, k}));
}

InconsistencyReport gi_report(const PcMatrix& matrix) {
  require_triads(matrix);
  const AloGroup& g = matrix.group();

  InconsistencyReport report;
  report.gi = g.identity();
  bool first = true;
  for (const Triad& t : matrix.triads()) {
    const double product = matrix.triad_product(t);
    const double eta = g.norm(product);
    report.per_triad.push_back({t, product, eta});
    if (first || eta > report.gi) {
      report.gi = eta;
      report.argmax = t;
      first = false;
    }
  }
  return report;
}

double gi(const PcMatrix& matrix) { return gi_report(matrix).gi; }

double ki(const PcMatrix& matrix) {
  require_multiplicative(matrix, "Koczkodaj's index");
  require_triads(matrix);
  const int n = matrix.size();

  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        const double direct = matrix.at(i, j);
        const double via_k = matrix.at(i, k) * matrix.at(k, j);
        const double local = 1.0 - std::min(direct / via_k, via_k / direct);
        worst = std::max(worst, local);
      }
    }
  }
  return worst;
}

double ci(const PcMatrix& matrix) {
  require_multiplicative(matrix, "Saaty's index");
  const EvmResult result = evm(matrix);
  const double n = static_cast<double>(matrix.size());
  // lambda_max >= n holds exactly; clip the last-ulp rounding below it.
  return std::max(0.0, (result.lambda_max - n) / (n - 1.0));
}

InconsistencyReport analyze(const PcMatrix& matrix) {
  InconsistencyReport report = gi_report(matrix);
  if (matrix.group().id() == GroupId::multiplicative) {
    report.ki = ki(matrix);
    const EvmResult result = evm(matrix);
    report.lambda_max = result.lambda_max;
    const double n = static_cast<double>(matrix.size());
    report.ci = std::max(0.0, (result.lambda_max - n) / (n - 1.0));
  }
  return report;
}

}  // namespace alopc
