#pragma once

#include <cstdint>
#include <span>

#include "moddev/errors.hpp"

namespace moddev {

/// Hypotheses of the refined Azuma bound: martingale increments bounded a.s.
/// by d with conditional variance at most var. alpha is the deviation per
/// step, so the bounded event is |X_n - X_0| >= alpha * n.
struct RefinedParams {
  RefinedParams(double d, double var, double alpha);

  double d;
  double var;
  double alpha;

  double gamma() const noexcept { return var / (d * d); }
  double delta() const noexcept { return alpha / d; }
};

enum class Validity {
  Valid,
  DeltaExceedsOne,  // deviation exceeds the a.s. range, probability is exactly 0
  BelowN0,          // expanded form inapplicable at this block length
};

const char* validity_name(Validity v) noexcept;

/// Packaged bound value: raw_bound = prefactor * exp(-n * exponent_per_n)
/// where the prefactor is 2 (two-sided) or 1 (one-sided). raw_bound may
/// legitimately exceed 1 for small n; capped_bound = min(1, raw_bound).
struct BoundReport {
  double raw_bound;
  double capped_bound;
  double exponent_per_n;  // nats, nonnegative (+inf for an exact-zero bound)
  Validity validity;
};

/// Azuma-Hoeffding: P(|X_n - X_0| >= r) <= 2 exp(-r^2 / (2 sum_k d_k^2)).
BoundReport azuma_bound(std::int64_t n, double d, double r, bool one_sided = false);
BoundReport azuma_bound(std::span<const double> step_bounds, double r, bool one_sided = false);

/// Refinement of Azuma using the variance:
/// P(|X_n - X_0| >= alpha n) <= 2 exp(-n D((delta+gamma)/(1+gamma) || gamma/(1+gamma)))
/// with gamma = var/d^2, delta = alpha/d. For delta > 1 the probability is
/// exactly zero and the report carries Validity::DeltaExceedsOne.
BoundReport refined_bound(std::int64_t n, const RefinedParams& params, bool one_sided = false);

/// (1+u) ln(1+u) minus its cubic (u >= 0) / quadratic (u in [-1,0]) lower
/// bound; nonnegative on [-1, inf). The left side is 0 at u = -1 by the
/// continuous extension.
double lemma1_gap(double u);

/// Smallest n with eps1 * n^-(1-eta) / d1 < 1, i.e. the first block length
/// at which the per-step deviation drops below the increment bound. Saturates
/// at the largest int64 when no representable block length qualifies.
std::int64_t n0_threshold(double eta, double eps1, double d1);

/// Closed-form weakening of refined_bound for the moderate-deviations
/// schedule alpha = eps1 * n^-(1-eta):
///   exp(-(eps1^2 n^(2eta-1) / (2 var1)) * (1 - eps1 d1 / (3 var1 (1+gamma1)) * n^-(1-eta)))
/// Only valid for n >= n0_threshold(eta, eps1, d1); below that the report is
/// the trivial bound 1 with Validity::BelowN0 and callers should fall back
/// to refined_bound.
BoundReport expanded_exponent_bound(std::int64_t n, double eta, double eps1, double d1,
                                    double var1);

/// Limits of n^(1-2eta) ln P(|S_n| >= alpha n^eta) obtainable from the two
/// inequalities: Azuma gives -alpha^2/(2d^2), the refinement gives
/// -alpha^2/(2 var) which matches the moderate-deviations rate. The refined
/// exponent is never larger, with equality iff var = d^2.
struct MdpExponents {
  double azuma;
  double refined;
};

MdpExponents mdp_exponents(double alpha, double d, double var);

}  // namespace moddev
