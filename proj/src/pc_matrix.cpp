#include "alopc/pc_matrix.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "alopc/errors.hpp"

namespace alopc {

namespace {

std::string describe(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Positions in diagnostics are 1-based; the API itself is 0-based.
std::string pos(int i, int j) {
  return "(" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back("a" + std::to_string(i));
  return labels;
}

}  // namespace

PcMatrix::PcMatrix(const AloGroup* group, int n, std::vector<double> entries,
                   std::vector<std::string> labels)
    : group_(group), n_(n), entries_(std::move(entries)), labels_(std::move(labels)) {}

PcMatrix PcMatrix::build(const AloGroup& group,
                         const std::vector<std::vector<double>>& entries,
                         std::vector<std::string> labels) {
  const int n = static_cast<int>(entries.size());
  if (n < 2) {
    throw ValidationError("a comparison matrix needs at least 2 alternatives, got " +
                          std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(entries[i].size()) != n) {
      throw ValidationError("matrix is not square: row " + std::to_string(i + 1) +
                            " has " + std::to_string(entries[i].size()) +
                            " entries, expected " + std::to_string(n));
    }
  }

  std::vector<double> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = entries[i][j];
      if (!group.contains(v)) {
        throw DomainError("entry " + pos(i, j) + " = " + describe(v) +
                          " is outside the domain of the " + std::string(group.name()) +
                          " group");
      }
      flat.push_back(v);
    }
  }

  const double e = group.identity();
  for (int i = 0; i < n; ++i) {
    const double d = flat[static_cast<size_t>(i) * n + i];
    if (!approx_equal(d, e)) {
      throw ValidationError("diagonal entry " + pos(i, i) + " = " + describe(d) +
                            " must equal the identity " + describe(e));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double cij = flat[static_cast<size_t>(i) * n + j];
      const double cji = flat[static_cast<size_t>(j) * n + i];
      const double combined = group.combine(cij, cji);
      if (!approx_equal(combined, e)) {
        throw ValidationError("reciprocity violation at " + pos(i, j) + ": c_ij = " +
                              describe(cij) + ", c_ji = " + describe(cji) +
                              ", their combination " + describe(combined) +
                              " is not the identity " + describe(e));
      }
    }
  }

  if (labels.empty()) {
    labels = default_labels(n);
  } else if (static_cast<int>(labels.size()) != n) {
    throw ValidationError("expected " + std::to_string(n) + " labels, got " +
                          std::to_string(labels.size()));
  }
  return PcMatrix(&group, n, std::move(flat), std::move(labels));
}

PcMatrix PcMatrix::from_weights(const AloGroup& group, std::span<const double> weights,
                                std::vector<std::string> labels) {
  const int n = static_cast<int>(weights.size());
  if (n < 2) {
    throw ValidationError("need at least 2 weights, got " + std::to_string(n));
  }
  for (int i = 0; i < n; ++i) group.require(weights[i]);

  std::vector<std::vector<double>> entries(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      entries[i][j] = group.divide(weights[i], weights[j]);
    }
  }
  return build(group, entries, std::move(labels));
}

void PcMatrix::check_index(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) {
    throw MismatchError("index " + pos(i, j) + " out of range for a " +
                        std::to_string(n_) + "x" + std::to_string(n_) + " matrix");
  }
}

double PcMatrix::at(int i, int j) const {
  check_index(i, j);
  return entries_[static_cast<size_t>(i) * n_ + j];
}

std::span<const double> PcMatrix::row(int i) const {
  check_index(i, 0);
  return {entries_.data() + static_cast<size_t>(i) * n_, static_cast<size_t>(n_)};
}

std::vector<Triad> PcMatrix::triads() const {
  std::vector<Triad> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      for (int k = j + 1; k < n_; ++k) out.push_back({i, j, k});
  return out;
}

double PcMatrix::triad_product(const Triad& t) const {
  return group_->combine(group_->combine(at(t.i, t.j), at(t.j, t.k)), at(t.k, t.i));
}

std::optional<ConsistencyWitness> PcMatrix::consistency_witness(double tol) const {
  const double e = group_->identity();
  std::optional<ConsistencyWitness> worst;
  for (const Triad& t : triads()) {
    const double product = triad_product(t);
    const double deviation = group_->distance(product, e);
    if (deviation - e <= tol) continue;
    if (!worst || deviation > worst->deviation) {
      worst = ConsistencyWitness{t, product, deviation};
    }
  }
  return worst;
}

PcMatrix PcMatrix::with_entry(int i, int j, double value) const {
  check_index(i, j);
  if (i == j) throw MismatchError("cannot replace a diagonal entry");
  group_->require(value);
  PcMatrix copy = *this;
  copy.entries_[static_cast<size_t>(i) * n_ + j] = value;
  copy.entries_[static_cast<size_t>(j) * n_ + i] = group_->inverse(value);
  return copy;
}

PcMatrix PcMatrix::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw MismatchError("permutation size " + std::to_string(perm.size()) +
                        " does not match matrix size " + std::to_string(n_));
  }
  std::vector<bool> seen(n_, false);
  for (int p : perm) {
    if (p < 0 || p >= n_ || seen[p]) throw MismatchError("invalid permutation");
    seen[p] = true;
  }
  PcMatrix copy = *this;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      copy.entries_[static_cast<size_t>(i) * n_ + j] =
          entries_[static_cast<size_t>(perm[i]) * n_ + perm[j]];
    }
    copy.labels_[i] = labels_[perm[i]];
  }
  return copy;
}

}  // namespace alopc
