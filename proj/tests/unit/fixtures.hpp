#pragma once

#include <doctest.h>

#include <random>
#include <utility>
#include <vector>

#include "moddev/errors.hpp"
#include "moddev/pmf.hpp"

namespace testfix {

// Uniform vs (1/4, 3/4): the centered H1 increments have equal magnitude, so
// gamma1 is exactly 1. Used throughout as the symmetric reference instance.
inline moddev::HypothesisPair binary_pair() {
  return {moddev::Pmf({0.5, 0.5}), moddev::Pmf({0.25, 0.75}), 0.5, 0.5};
}

// Skewed vs uniform: gamma1 = 1/9, separating the two candidate exponents.
inline moddev::HypothesisPair asym_pair() {
  return {moddev::Pmf({0.9, 0.1}), moddev::Pmf({0.5, 0.5}), 0.5, 0.5};
}

inline double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Entries bounded away from zero so log-ratios stay moderate.
inline moddev::Pmf random_pmf(std::mt19937_64& gen, std::size_t k) {
  std::vector<double> w(k);
  double sum = 0.0;
  for (double& v : w) {
    v = 0.05 + uniform01(gen);
    sum += v;
  }
  for (double& v : w) v /= sum;
  return moddev::Pmf(std::move(w));
}

inline moddev::HypothesisPair random_pair(std::mt19937_64& gen, std::size_t k) {
  for (;;) {
    moddev::Pmf a = random_pmf(gen, k);
    moddev::Pmf b = random_pmf(gen, k);
    if (!(a == b)) return {std::move(a), std::move(b), 0.5, 0.5};
  }
}

template <typename Fn>
moddev::errc thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const moddev::Error& e) {
    return e.code();
  }
  FAIL("expected a moddev::Error");
  return moddev::errc::config_error;
}

}  // namespace testfix
