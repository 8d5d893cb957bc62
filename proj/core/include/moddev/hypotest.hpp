#pragma once

#include <cstdint>
#include <variant>

#include "moddev/llr.hpp"
#include "moddev/pmf.hpp"

namespace moddev {

/// Constant per-sample thresholds; must satisfy -d21 < lo <= hi < d12 once
/// bound to an alphabet.
struct FixedPolicy {
  double lambda_hi;
  double lambda_lo;
};

/// Moderate-deviations schedule: hi = d12 - eps1 n^-(1-eta),
/// lo = -d21 + eps2 n^-(1-eta), with eta in (1/2, 1) and eps1, eps2 > 0.
struct ModeratePolicy {
  double eta;
  double eps1;
  double eps2;
};

using ThresholdPolicy = std::variant<FixedPolicy, ModeratePolicy>;

/// Thresholds materialized at a block length. The accept/reject regions
/// compare the total LLR against n * hi and n * lo.
struct BoundThresholds {
  std::int64_t n;
  double hi;
  double lo;
};

enum class Decision {
  AcceptH1,
  AcceptH2,
  Erasure,
};

const char* decision_name(Decision d) noexcept;

/// Direction of a tail event on the total LLR: L <= t or L >= t, boundary
/// inclusive on both sides within the shared comparison tolerance.
enum class TailKind {
  LeqThreshold,
  GeqThreshold,
};

/// Per-sample moderate threshold against the upper divergence; shared by the
/// exact oracle and the sweep driver so both compute the identical value.
double moderate_hi(const ModeratePolicy& policy, double d12, std::int64_t n);
double moderate_lo(const ModeratePolicy& policy, double d21, std::int64_t n);

/// Validates the policy against the LLR geometry and materializes it at n.
/// Fails with threshold_crossing if the schedule yields lo > hi and with
/// fixed_threshold_out_of_range if a fixed policy leaves (-d21, d12).
BoundThresholds bind_thresholds(const ThresholdPolicy& policy, const LlrProfile& profile,
                                std::int64_t n);

/// Three-way decision on the total LLR. Both decision regions are strict
/// inequalities, so a tie against either boundary resolves to Erasure.
Decision decide(double total_llr, const BoundThresholds& thresholds);

/// Log-domain tail probabilities of the total LLR:
///   alpha1 = ln P1^n(L <= n hi),  alpha2 = ln P1^n(L <= n lo),
///   beta1  = ln P2^n(L >= n lo),  beta2  = ln P2^n(L >= n hi).
/// -inf denotes an exactly zero probability.
struct TailLogProbs {
  double alpha1;
  double alpha2;
  double beta1;
  double beta2;
};

/// Tails plus the prior-weighted error probabilities
///   pe1 = ln(prior1 alpha1 + prior2 beta1),  pe2 = ln(prior1 alpha2 + prior2 beta2),
/// combined in the log domain.
struct ErrorProbabilities {
  double alpha1;
  double alpha2;
  double beta1;
  double beta2;
  double pe1;
  double pe2;
};

ErrorProbabilities assemble_probabilities(const TailLogProbs& tails,
                                          const HypothesisPair& pair);

}  // namespace moddev
