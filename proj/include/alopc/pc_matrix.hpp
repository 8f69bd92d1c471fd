#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alopc/alo_group.hpp"
#include "alopc/tolerance.hpp"

namespace alopc {

/// Canonical index triple, i < j < k. Indices are 0-based throughout the API.
struct Triad {
  int i = 0;
  int j = 0;
  int k = 0;
  bool operator==(const Triad&) const = default;
};

/// The worst triad of an inconsistent matrix: its product c_ij(+)c_jk(+)c_ki
/// and the group distance of that product from the identity.
struct ConsistencyWitness {
  Triad triad;
  double product = 0.0;
  double deviation = 0.0;
};

/// A reciprocal pairwise comparison matrix over an alo-group.
///
/// Entries c_ij express how strongly alternative i dominates alternative j.
/// Construction validates that every entry lies in the group domain, that the
/// diagonal holds the identity, and that c_ij (+) c_ji equals the identity
/// for every pair. Instances are immutable; all queries are pure.
class PcMatrix {
 public:
  /// Validates and builds. Labels default to "a1".."an" when omitted.
  static PcMatrix build(const AloGroup& group,
                        const std::vector<std::vector<double>>& entries,
                        std::vector<std::string> labels = {});

  /// The consistent matrix with c_ij = w_i (/) w_j.
  static PcMatrix from_weights(const AloGroup& group, std::span<const double> weights,
                               std::vector<std::string> labels = {});

  const AloGroup& group() const { return *group_; }
  int size() const { return n_; }
  double at(int i, int j) const;
  std::span<const double> row(int i) const;
  const std::vector<std::string>& labels() const { return labels_; }

  /// All canonical triads (i < j < k); n*(n-1)*(n-2)/6 of them, none for n = 2.
  std::vector<Triad> triads() const;

  /// c_ij (+) c_jk (+) c_ki for the given triad.
  double triad_product(const Triad& t) const;

  /// The worst triad if any triad product deviates from the identity by more
  /// than `tol`, nullopt otherwise. A 2x2 matrix is vacuously consistent.
  std::optional<ConsistencyWitness> consistency_witness(double tol = kTriadTol) const;

  bool is_consistent(double tol = kTriadTol) const {
    return !consistency_witness(tol).has_value();
  }

  /// Copy with entry (i, j) replaced by `value` and (j, i) by its inverse.
  PcMatrix with_entry(int i, int j, double value) const;

  /// Copy with rows and columns relabeled: entry (i, j) of the result is
  /// entry (perm[i], perm[j]) of this matrix.
  PcMatrix permuted(std::span<const int> perm) const;

 private:
  PcMatrix(const AloGroup* group, int n, std::vector<double> entries,
           std::vector<std::string> labels);
  void check_index(int i, int j) const;

  const AloGroup* group_;
  int n_;
  std::vector<double> entries_;  // row-major n*n
  std::vector<std::string> labels_;
};

}  // namespace alopc
