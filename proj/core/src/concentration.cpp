#include "moddev/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "moddev/divergence.hpp"

namespace moddev {

namespace {

void require_positive_n(std::int64_t n) {
  if (n < 1) fail(errc::parameter_out_of_range, "n = " + std::to_string(n) + " < 1");
}

// raw = prefactor * exp(-total_exponent), capped at 1.
BoundReport exponential_report(double log_prefactor, std::int64_t n, double total_exponent) {
  BoundReport rep;
  rep.exponent_per_n = total_exponent / static_cast<double>(n);
  rep.validity = Validity::Valid;
  rep.raw_bound = std::exp(log_prefactor - total_exponent);
  rep.capped_bound = std::min(1.0, rep.raw_bound);
  return rep;
}

BoundReport zero_report() {
  BoundReport rep;
  rep.raw_bound = 0.0;
  rep.capped_bound = 0.0;
  rep.exponent_per_n = std::numeric_limits<double>::infinity();
  rep.validity = Validity::DeltaExceedsOne;
  return rep;
}

}  // namespace

RefinedParams::RefinedParams(double d, double var, double alpha)
    : d(d), var(var), alpha(alpha) {
  if (!(d > 0.0) || !std::isfinite(d)) {
    fail(errc::non_positive_increment_bound, "d = " + std::to_string(d));
  }
  // Tiny relative slack forgives var accumulations that round a hair above d^2.
  if (!(var > 0.0) || !(var <= d * d * (1.0 + 1e-12))) {
    fail(errc::parameter_out_of_range,
         "var = " + std::to_string(var) + " outside (0, d^2]");
  }
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    fail(errc::parameter_out_of_range, "alpha = " + std::to_string(alpha));
  }
}

const char* validity_name(Validity v) noexcept {
  switch (v) {
    case Validity::Valid: return "valid";
    case Validity::DeltaExceedsOne: return "delta_exceeds_one";
    case Validity::BelowN0: return "below_n0";
  }
  return "unknown";
}

BoundReport azuma_bound(std::int64_t n, double d, double r, bool one_sided) {
  require_positive_n(n);
  if (!(d > 0.0) || !std::isfinite(d)) {
    fail(errc::non_positive_increment_bound, "d = " + std::to_string(d));
  }
  if (!(r >= 0.0)) fail(errc::parameter_out_of_range, "r = " + std::to_string(r) + " < 0");
  const double sum_d2 = static_cast<double>(n) * d * d;
  return exponential_report(one_sided ? 0.0 : std::log(2.0), n, r * r / (2.0 * sum_d2));
}

BoundReport azuma_bound(std::span<const double> step_bounds, double r, bool one_sided) {
  const std::int64_t n = static_cast<std::int64_t>(step_bounds.size());
  require_positive_n(n);
  if (!(r >= 0.0)) fail(errc::parameter_out_of_range, "r = " + std::to_string(r) + " < 0");
  double sum_d2 = 0.0;
  for (double dk : step_bounds) {
    if (!(dk > 0.0) || !std::isfinite(dk)) {
      fail(errc::non_positive_increment_bound, "step bound " + std::to_string(dk));
    }
    sum_d2 += dk * dk;
  }
  return exponential_report(one_sided ? 0.0 : std::log(2.0), n, r * r / (2.0 * sum_d2));
}

BoundReport refined_bound(std::int64_t n, const RefinedParams& params, bool one_sided) {
  require_positive_n(n);
  const double gamma = params.gamma();
  const double delta = params.delta();
  if (delta > 1.0) return zero_report();
  const double exponent =
      binary_divergence((delta + gamma) / (1.0 + gamma), gamma / (1.0 + gamma));
  return exponential_report(one_sided ? 0.0 : std::log(2.0), n,
                            static_cast<double>(n) * exponent);
}

double lemma1_gap(double u) {
  if (!(u >= -1.0)) fail(errc::domain_error, "u = " + std::to_string(u) + " < -1");
  const double lhs = u == -1.0 ? 0.0 : (1.0 + u) * std::log1p(u);
  double rhs = u + u * u / 2.0;
  if (u > 0.0) rhs -= u * u * u / 6.0;
  return lhs - rhs;
}

namespace {

void validate_schedule(double eta, double eps1, double d1) {
  if (!(eta > 0.5 && eta < 1.0)) {
    fail(errc::parameter_out_of_range, "eta = " + std::to_string(eta) + " outside (1/2, 1)");
  }
  if (!(eps1 > 0.0)) fail(errc::parameter_out_of_range, "eps1 = " + std::to_string(eps1));
  if (!(d1 > 0.0)) fail(errc::parameter_out_of_range, "d1 = " + std::to_string(d1));
}

double delta_at(double eta, double eps1, double d1, std::int64_t n) {
  return eps1 / d1 * std::pow(static_cast<double>(n), eta - 1.0);
}

}  // namespace

std::int64_t n0_threshold(double eta, double eps1, double d1) {
  validate_schedule(eta, eps1, d1);
  if (delta_at(eta, eps1, d1, 1) < 1.0) return 1;
  constexpr std::int64_t kMaxN = std::numeric_limits<std::int64_t>::max();
  // Steep schedules (eta near 1 with eps1 > d1) can push n0 past any
  // representable block length; saturate rather than overflow.
  if (delta_at(eta, eps1, d1, kMaxN) >= 1.0) return kMaxN;
  std::int64_t lo = 1;  // delta(lo) >= 1 throughout
  std::int64_t hi = 2;  // delta(hi) < 1 once the doubling stops
  while (delta_at(eta, eps1, d1, hi) >= 1.0) {
    lo = hi;
    hi = hi > kMaxN / 2 ? kMaxN : hi * 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (delta_at(eta, eps1, d1, mid) >= 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

BoundReport expanded_exponent_bound(std::int64_t n, double eta, double eps1, double d1,
                                    double var1) {
  require_positive_n(n);
  validate_schedule(eta, eps1, d1);
  if (!(var1 > 0.0) || !(var1 <= d1 * d1 * (1.0 + 1e-12))) {
    fail(errc::parameter_out_of_range, "var1 = " + std::to_string(var1));
  }
  if (delta_at(eta, eps1, d1, n) >= 1.0) {
    BoundReport rep;
    rep.raw_bound = 1.0;
    rep.capped_bound = 1.0;
    rep.exponent_per_n = 0.0;
    rep.validity = Validity::BelowN0;
    return rep;
  }
  const double gamma1 = var1 / (d1 * d1);
  const double shrink = std::pow(static_cast<double>(n), eta - 1.0);
  const double lead =
      eps1 * eps1 * std::pow(static_cast<double>(n), 2.0 * eta - 1.0) / (2.0 * var1);
  const double correction = eps1 * d1 / (3.0 * var1 * (1.0 + gamma1)) * shrink;
  return exponential_report(0.0, n, lead * (1.0 - correction));
}

MdpExponents mdp_exponents(double alpha, double d, double var) {
  if (!(d > 0.0)) fail(errc::parameter_out_of_range, "d = " + std::to_string(d));
  if (!(var > 0.0) || !(var <= d * d * (1.0 + 1e-12))) {
    fail(errc::parameter_out_of_range, "var = " + std::to_string(var) + " outside (0, d^2]");
  }
  if (!(alpha >= 0.0)) fail(errc::parameter_out_of_range, "alpha = " + std::to_string(alpha));
  MdpExponents out;
  out.azuma = -alpha * alpha / (2.0 * d * d);
  out.refined = -alpha * alpha / (2.0 * var);
  return out;
}

}  // namespace moddev
