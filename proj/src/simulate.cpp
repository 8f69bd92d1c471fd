#include "alopc/simulate.hpp"

#include <sstream>

#include "alopc/cop.hpp"
#include "alopc/error_index.hpp"
#include "alopc/errors.hpp"
#include "alopc/inconsistency.hpp"
#include "alopc/io.hpp"
#include "alopc/tolerance.hpp"

namespace alopc {

std::vector<double> random_weights(const AloGroup& group, int n, Rng& rng,
                                   double half_width) {
  std::vector<double> weights(n);
  for (double& w : weights) w = group.from_param(rng.uniform(-half_width, half_width));
  return weights;
}

PcMatrix random_consistent_matrix(const AloGroup& group, int n, Rng& rng) {
  return PcMatrix::from_weights(group, random_weights(group, n, rng));
}

PcMatrix random_perturbed_matrix(const AloGroup& group, int n, double bound,
                                 Rng& rng) {
  group.require(bound);
  if (bound < group.identity()) {
    throw Error("perturbation bound " + format_double(bound) +
                " must be at or above the group identity " +
                format_double(group.identity()));
  }
  PcMatrix matrix = random_consistent_matrix(group, n, rng);
  const double beta = group.to_param(bound);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double factor = group.from_param(rng.uniform(-beta, beta));
      matrix = matrix.with_entry(i, j, group.combine(matrix.at(i, j), factor));
    }
  }
  return matrix;
}

namespace {

std::string subject_string(const Certificate& cert) {
  std::ostringstream os;
  os << to_string(cert.kind) << " [";
  for (size_t s = 0; s < cert.subject.size(); ++s) {
    if (s) os << ", ";
    os << cert.subject[s];
  }
  os << "]";
  return os.str();
}

}  // namespace

std::vector<TrialStats> run_simulation(const SimulateConfig& config) {
  if (config.trials < 1) throw Error("trials must be >= 1");
  if (config.n < 3) throw Error("simulation needs n >= 3 (no triads otherwise)");
  const AloGroup& group = AloGroup::of(config.group);

  Rng rng(config.seed);
  std::vector<TrialStats> stats;
  stats.reserve(config.trials);

  for (int trial = 0; trial < config.trials; ++trial) {
    const PcMatrix matrix =
        random_perturbed_matrix(group, config.n, config.bound, rng);
    const PriorityVector weights = ggmm(matrix);
    const ErrorReport errors = global_error(matrix, weights);
    const InconsistencyReport inconsistency = gi_report(matrix);
    const CopReport cop = audit(matrix, weights);

    TrialStats row;
    row.trial = trial;
    row.gi = inconsistency.gi;
    row.global_error = errors.global;
    row.pop_violations = cop.pop_violation_count();
    row.poip_violations = cop.poip_violation_count();

    std::vector<Certificate> certs = certify_theorem2(matrix, weights);
    if (config.group == GroupId::multiplicative) {
      row.ki = ki(matrix);
      const auto extra = certify_theorem3(matrix);
      certs.insert(certs.end(), extra.begin(), extra.end());
    }
    // The sufficient conditions make audit failures impossible; finding one
    // means the implementation is broken, so stop with a diagnostic.
    if (const Certificate* bad = find_unsound(certs, cop)) {
      throw Error("soundness failure in trial " + std::to_string(trial) +
                  ": certificate " + subject_string(*bad) + " failed its audit");
    }
    for (const Certificate& cert : certs) {
      if (cert.subject.size() == 2) ++row.certified_pop;
      if (cert.subject.size() == 4) ++row.certified_poip;
    }
    stats.push_back(std::move(row));
  }
  return stats;
}

std::string simulation_csv(std::span<const TrialStats> stats) {
  std::ostringstream out;
  out << "trial,gi,ki,global_error,pop_violations,poip_violations,"
         "certified_pop,certified_poip\n";
  for (const TrialStats& row : stats) {
    out << row.trial << "," << format_double(row.gi) << ","
        << (row.ki ? format_double(*row.ki) : "") << ","
        << format_double(row.global_error) << "," << row.pop_violations << ","
        << row.poip_violations << "," << row.certified_pop << ","
        << row.certified_poip << "\n";
  }
  return out.str();
}

}  // namespace alopc
