#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "moddev/hypotest.hpp"
#include "moddev/llr.hpp"
#include "moddev/pmf.hpp"

namespace moddev {

inline constexpr std::int64_t kDefaultTypeBudget = 10'000'000;

/// One composition of n over the alphabet together with its log-probability
/// under each hypothesis and the total LLR of any sequence with these counts.
struct TypeClass {
  std::vector<std::int64_t> counts;
  double log_weight_h1;  // ln [multinomial(n; counts) prod_x P1(x)^counts[x]]
  double log_weight_h2;
  double llr_value;      // sum_x counts[x] * llr[x]
};

/// Number of compositions of n into alphabet_size parts, C(n+k-1, k-1),
/// saturated at int64 max on overflow.
std::int64_t count_type_classes(std::int64_t n, std::int64_t alphabet_size);

/// Enumerates every type class of length n. The TypeClass passed to the
/// visitor is reused between calls; copy it to retain. Fails with
/// budget_exceeded before enumerating if the class count exceeds the budget.
void enumerate_types(const HypothesisPair& pair, const LlrProfile& profile, std::int64_t n,
                     std::int64_t budget, const std::function<void(const TypeClass&)>& visit);

/// Support point of the total-LLR distribution at block length n.
struct Atom {
  double llr;
  double log_prob;
};

/// Exact distribution of the total LLR under one hypothesis, atoms sorted by
/// llr ascending. Values within the shared comparison tolerance of each other
/// are coalesced onto the first representative.
struct TailDistribution {
  std::vector<Atom> atoms;
  std::int64_t n;
  Hypothesis hypothesis;
};

TailDistribution llr_distribution(const HypothesisPair& pair, const LlrProfile& profile,
                                  std::int64_t n, Hypothesis hypothesis,
                                  std::int64_t budget = kDefaultTypeBudget);

/// Both hypotheses from a single enumeration pass; the H1 and H2 atom lists
/// share identical llr values, so tails computed from the pair agree bitwise
/// with per-hypothesis calls.
struct TailDistributionPair {
  TailDistribution h1;
  TailDistribution h2;
};

TailDistributionPair llr_distribution_pair(const HypothesisPair& pair,
                                           const LlrProfile& profile, std::int64_t n,
                                           std::int64_t budget = kDefaultTypeBudget);

/// ln P(L <= t) or ln P(L >= t) with the boundary included on both sides via
/// the shared comparison tolerance; -inf when no atom qualifies.
double exact_tail(const TailDistribution& dist, TailKind kind, double threshold);

/// All four tails and the prior-weighted mixtures at the bound thresholds.
ErrorProbabilities exact_error_probabilities(const HypothesisPair& pair,
                                             const LlrProfile& profile,
                                             const BoundThresholds& thresholds,
                                             std::int64_t budget = kDefaultTypeBudget);

/// Mean and variance of the atom values under the atom log-probabilities;
/// a consistency probe for the distribution builder.
struct Moments {
  double mean;
  double variance;
};

Moments distribution_moments(const TailDistribution& dist);

}  // namespace moddev
