#include "moddev/pmf.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace moddev {

Pmf::Pmf(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.size() < 2) {
    fail(errc::alphabet_too_small,
         "alphabet size " + std::to_string(probs_.size()) + " < 2");
  }
  double sum = 0.0;
  for (std::size_t x = 0; x < probs_.size(); ++x) {
    if (!(probs_[x] > 0.0) || !std::isfinite(probs_[x])) {
      fail(errc::non_positive_entry,
           "entry " + std::to_string(x) + " = " + std::to_string(probs_[x]));
    }
    sum += probs_[x];
  }
  if (std::fabs(sum - 1.0) > kNormalizationTol) {
    fail(errc::not_normalized, "entries sum to " + std::to_string(sum));
  }
  for (double& p : probs_) p /= sum;
}

Pmf validate_pmf(std::vector<double> raw) { return Pmf(std::move(raw)); }

HypothesisPair::HypothesisPair(Pmf p1, Pmf p2, double prior1, double prior2)
    : p1_(std::move(p1)), p2_(std::move(p2)), prior1_(prior1), prior2_(prior2) {
  if (p1_.size() != p2_.size()) {
    fail(errc::alphabet_mismatch, "alphabet sizes " + std::to_string(p1_.size()) +
                                      " and " + std::to_string(p2_.size()));
  }
  if (!(prior1_ > 0.0 && prior1_ < 1.0) || !(prior2_ > 0.0 && prior2_ < 1.0)) {
    fail(errc::parameter_out_of_range, "priors must lie strictly inside (0,1)");
  }
  if (std::fabs(prior1_ + prior2_ - 1.0) > Pmf::kNormalizationTol) {
    fail(errc::not_normalized,
         "priors sum to " + std::to_string(prior1_ + prior2_));
  }
  if (p1_ == p2_) {
    fail(errc::identical_distributions,
         "p1 equals p2; both divergences vanish and no threshold range exists");
  }
}

}  // namespace moddev
