#pragma once

#include <cmath>

namespace alopc {

/// Absolute tolerance for order comparisons and identity checks, measured
/// on raw element values (the order of every supported group is the natural
/// order of double).
inline constexpr double kTol = 1e-9;

/// Tolerance for triad consistency checks. Looser than kTol: a triad product
/// chains three group operations, so the rounding budget is larger.
inline constexpr double kTriadTol = 1e-7;

inline bool approx_equal(double a, double b, double tol = kTol) {
  return std::fabs(a - b) <= tol;
}

/// Strict dominance test with a tolerance margin: a > b and not a tie.
inline bool strictly_above(double a, double b, double tol = kTol) {
  return a > b + tol;
}

}  // namespace alopc
