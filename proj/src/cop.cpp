#include "alopc/cop.hpp"

#include <algorithm>

#include "alopc/errors.hpp"
#include "alopc/inconsistency.hpp"
#include "alopc/tolerance.hpp"

namespace alopc {

namespace {

// Ordered pairs (i, j) with c_ij strictly above the identity by more than kTol.
std::vector<std::pair<int, int>> dominant_pairs(const PcMatrix& matrix) {
  std::vector<std::pair<int, int>> pairs;
  const double e = matrix.group().identity();
  const int n = matrix.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && strictly_above(matrix.at(i, j), e)) pairs.emplace_back(i, j);
  return pairs;
}

}  // namespace

std::vector<PopEntry> CopReport::pop_violations() const {
  std::vector<PopEntry> out;
  std::copy_if(pop_checked.begin(), pop_checked.end(), std::back_inserter(out),
               [](const PopEntry& p) { return !p.satisfied; });
  return out;
}

std::vector<PoipEntry> CopReport::poip_violations() const {
  std::vector<PoipEntry> out;
  std::copy_if(poip_checked.begin(), poip_checked.end(), std::back_inserter(out),
               [](const PoipEntry& q) { return !q.satisfied; });
  return out;
}

int CopReport::pop_violation_count() const {
  return static_cast<int>(
      std::count_if(pop_checked.begin(), pop_checked.end(),
                    [](const PopEntry& p) { return !p.satisfied; }));
}

int CopReport::poip_violation_count() const {
  return static_cast<int>(
      std::count_if(poip_checked.begin(), poip_checked.end(),
                    [](const PoipEntry& q) { return !q.satisfied; }));
}

bool CopReport::satisfied() const {
  return pop_violation_count() == 0 && poip_violation_count() == 0;
}

std::vector<PopEntry> audit_pop(const PcMatrix& matrix, const PriorityVector& weights) {
  require_compatible(matrix, weights);
  const double e = matrix.group().identity();
  std::vector<PopEntry> out;
  for (auto [i, j] : dominant_pairs(matrix)) {
    const double ratio = weights.ratio(i, j);
    out.push_back({i, j, matrix.at(i, j), ratio, ratio > e});
  }
  return out;
}

std::vector<PoipEntry> audit_poip(const PcMatrix& matrix,
                                  const PriorityVector& weights) {
  require_compatible(matrix, weights);
  std::vector<PoipEntry> out;
  const auto pairs = dominant_pairs(matrix);
  for (auto [i, j] : pairs) {
    const double cij = matrix.at(i, j);
    for (auto [k, l] : pairs) {
      if (i == k && j == l) continue;
      const double ckl = matrix.at(k, l);
      // Entries within kTol of each other are ties, not intensity claims.
      if (!strictly_above(cij, ckl)) continue;
      const double rij = weights.ratio(i, j);
      const double rkl = weights.ratio(k, l);
      out.push_back({i, j, k, l, cij, ckl, rij, rkl, rij > rkl});
    }
  }
  return out;
}

CopReport audit(const PcMatrix& matrix, const PriorityVector& weights) {
  CopReport report;
  report.pop_checked = audit_pop(matrix, weights);
  report.poip_checked = audit_poip(matrix, weights);
  const double e = matrix.group().identity();
  const int n = matrix.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (approx_equal(matrix.at(i, j), e)) report.pop_ties.emplace_back(i, j);
  return report;
}

std::string_view to_string(CertKind kind) {
  switch (kind) {
    case CertKind::theorem1: return "theorem1";
    case CertKind::theorem2_pop: return "theorem2_pop";
    case CertKind::theorem2_poip: return "theorem2_poip";
    case CertKind::theorem3_pop: return "theorem3_pop";
    case CertKind::theorem3_poip: return "theorem3_poip";
  }
  return "?";
}

std::optional<Certificate> check_theorem1(const PcMatrix& matrix,
                                          const PriorityVector& weights) {
  require_compatible(matrix, weights);
  const auto witness = matrix.consistency_witness();
  if (witness) return std::nullopt;

  // Margin: how far the worst triad deviation stays below the tolerance.
  double worst = matrix.group().identity();
  for (const Triad& t : matrix.triads()) {
    worst = std::max(worst,
                     matrix.group().distance(matrix.triad_product(t),
                                             matrix.group().identity()));
  }
  const double e = matrix.group().identity();
  return Certificate{CertKind::theorem1, {}, kTriadTol, kTriadTol - (worst - e)};
}

namespace {

// Shared scan for the two threshold-based certificate families. Pairs are
// certified when the entry clears `threshold`; quadruples when both entries
// clear it and their ratio clears its square. Quadruple subjects are kept
// inside the audited universe so every certificate can be cross-checked.
std::vector<Certificate> certify_with_threshold(const PcMatrix& matrix,
                                                double threshold, CertKind pop_kind,
                                                CertKind poip_kind) {
  const AloGroup& g = matrix.group();
  std::vector<Certificate> certs;

  std::vector<std::pair<int, int>> cleared;
  const int n = matrix.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double c = matrix.at(i, j);
      if (strictly_above(c, threshold)) {
        certs.push_back({pop_kind, {i, j}, threshold, c - threshold});
        cleared.emplace_back(i, j);
      }
    }
  }

  const double squared = g.power(threshold, 2);
  for (auto [i, j] : cleared) {
    const double cij = matrix.at(i, j);
    for (auto [k, l] : cleared) {
      if (i == k && j == l) continue;
      const double ckl = matrix.at(k, l);
      if (!strictly_above(cij, ckl)) continue;
      const double ratio = g.divide(cij, ckl);
      if (strictly_above(ratio, squared)) {
        certs.push_back({poip_kind, {i, j, k, l}, squared, ratio - squared});
      }
    }
  }
  return certs;
}

}  // namespace

std::vector<Certificate> certify_theorem2(const PcMatrix& matrix,
                                          const PriorityVector& weights) {
  require_compatible(matrix, weights);
  const ErrorReport report = global_error(matrix, weights);
  return certify_with_threshold(matrix, report.global, CertKind::theorem2_pop,
                                CertKind::theorem2_poip);
}

std::vector<Certificate> certify_theorem3(const PcMatrix& matrix) {
  if (matrix.group().id() != GroupId::multiplicative) {
    throw MismatchError("the Koczkodaj-threshold certificates are defined for the "
                        "multiplicative group only, got \"" +
                        std::string(matrix.group().name()) + "\"");
  }
  const double threshold = 1.0 / (1.0 - ki(matrix));
  return certify_with_threshold(matrix, threshold, CertKind::theorem3_pop,
                                CertKind::theorem3_poip);
}

const Certificate* find_unsound(std::span<const Certificate> certificates,
                                const CopReport& report) {
  for (const Certificate& cert : certificates) {
    if (cert.subject.empty()) {
      if (!report.satisfied()) return &cert;
      continue;
    }
    bool sound = false;
    if (cert.subject.size() == 2) {
      for (const PopEntry& p : report.pop_checked) {
        if (p.i == cert.subject[0] && p.j == cert.subject[1]) {
          sound = p.satisfied;
          break;
        }
      }
    } else if (cert.subject.size() == 4) {
      for (const PoipEntry& q : report.poip_checked) {
        if (q.i == cert.subject[0] && q.j == cert.subject[1] &&
            q.k == cert.subject[2] && q.l == cert.subject[3]) {
          sound = q.satisfied;
          break;
        }
      }
    }
    if (!sound) return &cert;
  }
  return nullptr;
}

}  // namespace alopc
