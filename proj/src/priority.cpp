#include "alopc/priority.hpp"

#include <cmath>
#include <numeric>
#include <utility>

#include "alopc/errors.hpp"

namespace alopc {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::ggmm: return "ggmm";
    case Method::gmm: return "gmm";
    case Method::evm: return "evm";
    case Method::external: return "external";
  }
  return "?";
}

Method method_from_string(std::string_view name) {
  if (name == "ggmm") return Method::ggmm;
  if (name == "gmm") return Method::gmm;
  if (name == "evm") return Method::evm;
  if (name == "external") return Method::external;
  throw ParseError("unknown method \"" + std::string(name) +
                   "\" (expected ggmm, gmm or evm)");
}

double PriorityVector::ratio(int i, int j) const {
  const AloGroup& g = AloGroup::of(group);
  return g.divide(weights.at(i), weights.at(j));
}

PriorityVector external_vector(const AloGroup& group, std::vector<double> weights) {
  if (weights.size() < 2) {
    throw ValidationError("need at least 2 weights, got " +
                          std::to_string(weights.size()));
  }
  for (double w : weights) group.require(w);
  return PriorityVector{group.id(), std::move(weights), Method::external,
                        group.identity()};
}

void require_compatible(const PcMatrix& matrix, const PriorityVector& weights) {
  if (weights.group != matrix.group().id()) {
    throw MismatchError("priority vector group \"" +
                        std::string(to_string(weights.group)) +
                        "\" does not match matrix group \"" +
                        std::string(matrix.group().name()) + "\"");
  }
  if (weights.size() != matrix.size()) {
    throw MismatchError("priority vector has " + std::to_string(weights.size()) +
                        " weights but the matrix has " +
                        std::to_string(matrix.size()) + " alternatives");
  }
}

PriorityVector ggmm(const PcMatrix& matrix) {
  const AloGroup& g = matrix.group();
  const int n = matrix.size();

  // Row mean as the fold of per-entry n-th roots: equal to the n-th root of
  // the row fold, but partial results stay well inside bounded domains.
  std::vector<double> means(n);
  for (int i = 0; i < n; ++i) {
    double acc = g.identity();
    for (int r = 0; r < n; ++r) acc = g.combine(acc, g.root(matrix.at(i, r), n));
    means[i] = acc;
  }

  const double scale = g.inverse(g.fold(means));
  std::vector<double> weights(n);
  for (int i = 0; i < n; ++i) weights[i] = g.combine(scale, means[i]);
  return PriorityVector{g.id(), std::move(weights), Method::ggmm, scale};
}

PriorityVector gmm(const PcMatrix& matrix) {
  if (matrix.group().id() != GroupId::multiplicative) {
    throw MismatchError("gmm is defined for the multiplicative group only, got \"" +
                        std::string(matrix.group().name()) + "\"");
  }
  const int n = matrix.size();
  std::vector<double> means(n);
  for (int i = 0; i < n; ++i) {
    double prod = 1.0;
    for (double v : matrix.row(i)) prod *= v;
    means[i] = std::pow(prod, 1.0 / n);
  }
  const double gamma = 1.0 / std::accumulate(means.begin(), means.end(), 0.0);
  for (double& m : means) m *= gamma;
  return PriorityVector{GroupId::multiplicative, std::move(means), Method::gmm, gamma};
}

PriorityVector sum_normalized(const PriorityVector& v) {
  if (v.group != GroupId::multiplicative) {
    throw MismatchError("sum-to-one normalization applies to the multiplicative "
                        "group only");
  }
  const double sum = std::accumulate(v.weights.begin(), v.weights.end(), 0.0);
  PriorityVector out = v;
  for (double& w : out.weights) w /= sum;
  out.scale = v.scale / sum;
  return out;
}

EvmResult evm(const PcMatrix& matrix, double tol, int max_iterations) {
  if (matrix.group().id() != GroupId::multiplicative) {
    throw MismatchError("evm is defined for the multiplicative group only, got \"" +
                        std::string(matrix.group().name()) + "\"");
  }
  const int n = matrix.size();
  std::vector<double> w(n, 1.0 / n);
  std::vector<double> y(n);
  double lambda = 0.0;
  double scale = 1.0;

  for (int it = 1; it <= max_iterations; ++it) {
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += matrix.at(i, j) * w[j];
      y[i] = s;
    }
    // w sums to one, so the Rayleigh-style estimate is just the sum of y.
    lambda = std::accumulate(y.begin(), y.end(), 0.0);
    scale = 1.0 / lambda;

    double diff = 0.0;
    for (int i = 0; i < n; ++i) {
      const double next = y[i] * scale;
      diff = std::max(diff, std::fabs(next - w[i]));
      w[i] = next;
    }
    if (diff < tol) {
      return EvmResult{
          PriorityVector{GroupId::multiplicative, std::move(w), Method::evm, scale},
          lambda, it};
    }
  }
  throw ConvergenceError("power iteration did not converge within " +
                         std::to_string(max_iterations) + " iterations");
}

}  // namespace alopc
