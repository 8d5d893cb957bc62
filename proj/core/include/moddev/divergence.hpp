#pragma once

#include "moddev/pmf.hpp"

namespace moddev {

/// D(p || q) between Bernoulli(p) and Bernoulli(q) in nats, with the
/// 0 ln 0 = 0 convention so p may sit at 0 or 1; q must be interior.
double binary_divergence(double p, double q);

/// D(p || q) = sum_x p(x) ln(p(x)/q(x)) in nats.
double kl_divergence(const Pmf& p, const Pmf& q);

}  // namespace moddev
