#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "alopc/pc_matrix.hpp"

namespace alopc {

/// Deterministic uniform generator. mt19937_64's output sequence is pinned
/// by the standard and the [0,1) mapping is explicit, so a fixed seed yields
/// identical draws on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  double unit() {  // [0, 1), 53 random bits
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

/// Weights drawn uniformly in the group's parameter space, param in
/// [-half_width, half_width].
std::vector<double> random_weights(const AloGroup& group, int n, Rng& rng,
                                   double half_width = 2.0);

/// Consistent matrix synthesized from random weights.
PcMatrix random_consistent_matrix(const AloGroup& group, int n, Rng& rng);

/// Consistent matrix with every above-diagonal entry perturbed by a random
/// group element whose norm stays at or below `bound`, mirrored reciprocally.
/// `bound` is a group element at or above the identity; the identity itself
/// leaves the matrix consistent.
PcMatrix random_perturbed_matrix(const AloGroup& group, int n, double bound, Rng& rng);

struct SimulateConfig {
  GroupId group = GroupId::multiplicative;
  int trials = 100;
  int n = 5;
  double bound = 0.0;  // group element >= identity
  std::uint64_t seed = 1;
};

struct TrialStats {
  int trial = 0;
  double gi = 0.0;
  std::optional<double> ki;  // multiplicative runs only
  double global_error = 0.0;
  int pop_violations = 0;
  int poip_violations = 0;
  int certified_pop = 0;
  int certified_poip = 0;
};

/// Runs `trials` independent perturbed matrices, audits each against its
/// GGMM ranking and cross-checks every certificate against the audit.
/// Throws Error with a diagnostic if any certified subject fails its audit,
/// which the sufficient conditions rule out.
std::vector<TrialStats> run_simulation(const SimulateConfig& config);

/// CSV rendering: one header line, one line per trial, stable across runs
/// with the same seed.
std::string simulation_csv(std::span<const TrialStats> stats);

}  // namespace alopc
