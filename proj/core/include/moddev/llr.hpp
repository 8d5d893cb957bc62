#pragma once

#include <vector>

#include "moddev/pmf.hpp"

namespace moddev {

/// Per-symbol log-likelihood ratios ln(P1(x)/P2(x)) and the martingale
/// increment statistics of the LLR sum under each hypothesis.
///
/// Under H1 the increments are llr[x] - d12: zero mean under P1, bounded by
/// d1 = max_x |llr[x] - d12|, variance var1 = sum_x P1(x)(llr[x] - d12)^2.
/// The H2 side mirrors this with centering at -d21 and expectation under P2.
struct LlrProfile {
  std::vector<double> llr;  // nats per symbol

  double d12;  // D(P1 || P2)
  double d21;  // D(P2 || P1)

  double d1;      // sup norm of the centered increments under H1
  double var1;    // their variance under P1
  double gamma1;  // var1 / d1^2, in (0, 1]

  double d2;
  double var2;
  double gamma2;
};

LlrProfile llr_profile(const HypothesisPair& hyp);

}  // namespace moddev
