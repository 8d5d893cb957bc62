#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "moddev/errors.hpp"

namespace moddev {

enum class Hypothesis { H1, H2 };

/// Strictly positive probability vector on a finite alphabet {0, ..., k-1},
/// k >= 2. Inputs must sum to 1 within kNormalizationTol and are then
/// renormalized so downstream code sees an exact unit sum; anything further
/// off is rejected rather than silently rescaled.
class Pmf {
 public:
  static constexpr double kNormalizationTol = 1e-12;

  explicit Pmf(std::vector<double> probs);

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t x) const noexcept { return probs_[x]; }
  std::span<const double> probs() const noexcept { return probs_; }

  bool operator==(const Pmf&) const = default;

 private:
  std::vector<double> probs_;
};

/// Validating constructor as a free function.
Pmf validate_pmf(std::vector<double> raw);

/// Two distinct strictly positive distributions on a shared alphabet plus
/// prior probabilities. p1 == p2 is rejected: every divergence would vanish
/// and the decision thresholds would have no admissible range.
class HypothesisPair {
 public:
  HypothesisPair(Pmf p1, Pmf p2, double prior1, double prior2);

  const Pmf& p1() const noexcept { return p1_; }
  const Pmf& p2() const noexcept { return p2_; }
  double prior1() const noexcept { return prior1_; }
  double prior2() const noexcept { return prior2_; }
  std::size_t alphabet_size() const noexcept { return p1_.size(); }

 private:
  Pmf p1_;
  Pmf p2_;
  double prior1_;
  double prior2_;
};

}  // namespace moddev
