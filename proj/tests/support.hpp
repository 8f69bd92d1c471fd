#pragma once

#include <vector>

#include "alopc/pc_matrix.hpp"
#include "alopc/simulate.hpp"

namespace alopc::testing {

/// The 4x4 multiplicative matrix used as golden data across the suites:
/// moderately inconsistent (GI = 2, KI = 0.5), POP-clean under geometric
/// mean weights.
inline PcMatrix example_4x4() {
  return PcMatrix::build(AloGroup::multiplicative(),
                         {{1.0, 2.5, 3.0, 5.0},
                          {0.4, 1.0, 2.0, 4.0},
                          {1.0 / 3.0, 0.5, 1.0, 3.0},
                          {0.2, 0.25, 1.0 / 3.0, 1.0}});
}

inline const std::vector<const AloGroup*>& all_groups() {
  static const std::vector<const AloGroup*> groups{
      &AloGroup::additive(), &AloGroup::multiplicative(),
      &AloGroup::fuzzy_additive(), &AloGroup::fuzzy_multiplicative()};
  return groups;
}

/// A random in-domain element away from representational edges.
inline double random_element(const AloGroup& g, Rng& rng, double half_width = 2.0) {
  return g.from_param(rng.uniform(-half_width, half_width));
}

}  // namespace alopc::testing
