#include "moddev/hypotest.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "moddev/numeric.hpp"

namespace moddev {

const char* decision_name(Decision d) noexcept {
  switch (d) {
    case Decision::AcceptH1: return "h1";
    case Decision::AcceptH2: return "h2";
    case Decision::Erasure: return "erasure";
  }
  return "unknown";
}

double moderate_hi(const ModeratePolicy& policy, double d12, std::int64_t n) {
  return d12 - policy.eps1 * std::pow(static_cast<double>(n), policy.eta - 1.0);
}

double moderate_lo(const ModeratePolicy& policy, double d21, std::int64_t n) {
  return -d21 + policy.eps2 * std::pow(static_cast<double>(n), policy.eta - 1.0);
}

namespace {

void validate_moderate(const ModeratePolicy& p) {
  if (!(p.eta > 0.5 && p.eta < 1.0)) {
    fail(errc::parameter_out_of_range, "eta = " + std::to_string(p.eta) + " outside (1/2, 1)");
  }
  if (!(p.eps1 > 0.0) || !(p.eps2 > 0.0)) {
    fail(errc::parameter_out_of_range, "eps1 and eps2 must be positive");
  }
}

}  // namespace

BoundThresholds bind_thresholds(const ThresholdPolicy& policy, const LlrProfile& profile,
                                std::int64_t n) {
  if (n < 1) fail(errc::parameter_out_of_range, "n = " + std::to_string(n) + " < 1");
  BoundThresholds out;
  out.n = n;
  if (const auto* fixed = std::get_if<FixedPolicy>(&policy)) {
    if (!(fixed->lambda_lo > -profile.d21) || !(fixed->lambda_hi < profile.d12) ||
        !(fixed->lambda_lo <= fixed->lambda_hi)) {
      fail(errc::fixed_threshold_out_of_range,
           "need -d21 < lo <= hi < d12, got lo = " + std::to_string(fixed->lambda_lo) +
               ", hi = " + std::to_string(fixed->lambda_hi));
    }
    out.hi = fixed->lambda_hi;
    out.lo = fixed->lambda_lo;
  } else {
    const auto& mod = std::get<ModeratePolicy>(policy);
    validate_moderate(mod);
    const double shrink = std::pow(static_cast<double>(n), mod.eta - 1.0);
    if ((mod.eps1 + mod.eps2) * shrink > profile.d12 + profile.d21) {
      fail(errc::threshold_crossing,
           "schedule crosses at n = " + std::to_string(n) + ": (eps1+eps2)n^-(1-eta) = " +
               std::to_string((mod.eps1 + mod.eps2) * shrink) + " > d12+d21 = " +
               std::to_string(profile.d12 + profile.d21));
    }
    out.hi = moderate_hi(mod, profile.d12, n);
    out.lo = moderate_lo(mod, profile.d21, n);
  }
  return out;
}

Decision decide(double total_llr, const BoundThresholds& thresholds) {
  const double n = static_cast<double>(thresholds.n);
  if (total_llr > n * thresholds.hi) return Decision::AcceptH1;
  if (total_llr < n * thresholds.lo) return Decision::AcceptH2;
  return Decision::Erasure;
}

ErrorProbabilities assemble_probabilities(const TailLogProbs& tails,
                                          const HypothesisPair& pair) {
  for (double v : {tails.alpha1, tails.alpha2, tails.beta1, tails.beta2}) {
    if (!(v <= 0.0)) {
      fail(errc::invalid_log_probability, "log-probability " + std::to_string(v) + " > 0");
    }
  }
  const double lp1 = std::log(pair.prior1());
  const double lp2 = std::log(pair.prior2());
  ErrorProbabilities out;
  out.alpha1 = tails.alpha1;
  out.alpha2 = tails.alpha2;
  out.beta1 = tails.beta1;
  out.beta2 = tails.beta2;
  out.pe1 = std::min(0.0, log_sum_exp(lp1 + tails.alpha1, lp2 + tails.beta1));
  out.pe2 = std::min(0.0, log_sum_exp(lp1 + tails.alpha2, lp2 + tails.beta2));
  return out;
}

}  // namespace moddev
