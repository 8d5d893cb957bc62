#pragma once

#include <cmath>
#include <limits>

namespace moddev {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Absolute tolerance used both when coalescing equal LLR sums and when
// classifying an atom against a threshold, so boundary atoms always land on
// the inclusive side of <= / >= events.
inline constexpr double kLlrMergeTol = 1e-9;

// log(e^a + e^b) with -inf meaning an exact zero.
inline double log_sum_exp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double m = a > b ? a : b;
  return m + std::log1p(std::exp(-(a > b ? a - b : b - a)));
}

inline bool leq_with_tol(double value, double threshold, double tol = kLlrMergeTol) {
  return value <= threshold + tol;
}

inline bool geq_with_tol(double value, double threshold, double tol = kLlrMergeTol) {
  return value >= threshold - tol;
}

}  // namespace moddev
