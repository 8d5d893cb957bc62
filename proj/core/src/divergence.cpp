#include "moddev/divergence.hpp"

#include <cmath>
#include <string>

namespace moddev {

double binary_divergence(double p, double q) {
  if (!(p >= 0.0 && p <= 1.0)) {
    fail(errc::domain_error, "p = " + std::to_string(p) + " outside [0,1]");
  }
  if (!(q > 0.0 && q < 1.0)) {
    fail(errc::domain_error, "q = " + std::to_string(q) + " outside (0,1)");
  }
  double acc = 0.0;
  if (p > 0.0) acc += p * std::log(p / q);
  if (p < 1.0) acc += (1.0 - p) * std::log((1.0 - p) / (1.0 - q));
  return acc;
}

double kl_divergence(const Pmf& p, const Pmf& q) {
  if (p.size() != q.size()) {
    fail(errc::alphabet_mismatch, "alphabet sizes " + std::to_string(p.size()) +
                                      " and " + std::to_string(q.size()));
  }
  double acc = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    acc += p[x] * std::log(p[x] / q[x]);
  }
  return acc;
}

}  // namespace moddev
