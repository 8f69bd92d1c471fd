#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "alopc/error_index.hpp"
#include "alopc/priority.hpp"

namespace alopc {

/// One audited dominance pair: c_ij says i beats j; `satisfied` records
/// whether the ranking agrees (w_i (/) w_j above the identity, strictly).
struct PopEntry {
  int i = 0;
  int j = 0;
  double entry = 0.0;         // c_ij
  double weight_ratio = 0.0;  // w_i (/) w_j
  bool satisfied = false;
};

/// One audited intensity quadruple: c_ij > c_kl (both dominant) claims i
/// beats j more strongly than k beats l; `satisfied` records whether the
/// weight ratios preserve that strict order.
struct PoipEntry {
  int i = 0, j = 0, k = 0, l = 0;
  double entry_ij = 0.0, entry_kl = 0.0;
  double ratio_ij = 0.0, ratio_kl = 0.0;
  bool satisfied = false;
};

struct CopReport {
  /// Ordered pairs with c_ij strictly above the identity (margin > kTol).
  std::vector<PopEntry> pop_checked;
  /// Pairs whose entry sits within kTol of the identity: excluded from the
  /// audit rather than risking noise-driven verdicts. Stored once, i < j.
  std::vector<std::pair<int, int>> pop_ties;
  /// Ordered quadruples (i,j) != (k,l) with c_ij, c_kl both dominant and
  /// c_ij strictly above c_kl (margin > kTol).
  std::vector<PoipEntry> poip_checked;

  std::vector<PopEntry> pop_violations() const;
  std::vector<PoipEntry> poip_violations() const;
  int pop_violation_count() const;
  int poip_violation_count() const;
  bool satisfied() const;
};

std::vector<PopEntry> audit_pop(const PcMatrix& matrix, const PriorityVector& weights);
std::vector<PoipEntry> audit_poip(const PcMatrix& matrix,
                                  const PriorityVector& weights);
/// Both audits plus the tie list.
CopReport audit(const PcMatrix& matrix, const PriorityVector& weights);

enum class CertKind {
  theorem1,       // consistency covers every pair and quadruple
  theorem2_pop,   // c_ij above the global error index
  theorem2_poip,  // both entries above it and their ratio above its square
  theorem3_pop,   // c_ij above 1/(1 - KI), under GGMM weights
  theorem3_poip,  // both entries above it and their ratio above its square
};

std::string_view to_string(CertKind kind);

/// A pair or quadruple proven order-preserving by a sufficient condition,
/// without consulting the audit. `subject` holds {i, j} for pairs,
/// {i, j, k, l} for quadruples, and is empty for the blanket consistency
/// certificate. `margin` is how far the hypothesis exceeds `threshold`,
/// in raw order units.
struct Certificate {
  CertKind kind = CertKind::theorem1;
  std::vector<int> subject;
  double threshold = 0.0;
  double margin = 0.0;
};

/// Emits the blanket certificate when the matrix is consistent: every
/// dominance pair and intensity quadruple is then preserved by any ranking
/// that reproduces the entries (which ggmm does for consistent input).
std::optional<Certificate> check_theorem1(const PcMatrix& matrix,
                                          const PriorityVector& weights);

/// Certifies pairs with c_ij above the global error index of (matrix,
/// weights), and quadruples whose entries both clear it with ratio above its
/// square. Valid for any priority vector.
std::vector<Certificate> certify_theorem2(const PcMatrix& matrix,
                                          const PriorityVector& weights);

/// Multiplicative group only: thresholds from Koczkodaj's index, 1/(1 - KI),
/// valid for GGMM weights. Certified subjects pass the audit against
/// ggmm(matrix).
std::vector<Certificate> certify_theorem3(const PcMatrix& matrix);

/// Cross-checks certificates against an audit of the same matrix and
/// weights: returns the first certificate whose subject the audit did not
/// check or did not find satisfied, nullptr when all are sound. A blanket
/// certificate demands a fully clean report.
const Certificate* find_unsound(std::span<const Certificate> certificates,
                                const CopReport& report);

}  // namespace alopc
