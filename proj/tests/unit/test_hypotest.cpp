#include <doctest.h>

#include <cmath>
#include <random>

#include "moddev/hypotest.hpp"
#include "moddev/llr.hpp"
#include "moddev/numeric.hpp"

#include "fixtures.hpp"

using namespace moddev;
using testfix::thrown_code;

namespace {

LlrProfile reference_profile() { return llr_profile(testfix::binary_pair()); }

}  // namespace

TEST_CASE("moderate thresholds at n = 1 on the reference fixture") {
  const LlrProfile prof = reference_profile();
  const ThresholdPolicy policy = ModeratePolicy{0.75, 0.1, 0.1};
  const BoundThresholds thr = bind_thresholds(policy, prof, 1);
  CHECK(thr.hi == doctest::Approx(0.043841036225890464).epsilon(1e-14));
  CHECK(thr.lo == doctest::Approx(-0.030812035941136959).epsilon(1e-14));
}

TEST_CASE("moderate schedule crossing is rejected") {
  const LlrProfile prof = reference_profile();
  CHECK(thrown_code([&] {
          bind_thresholds(ModeratePolicy{0.75, 0.2, 0.2}, prof, 1);
        }) == errc::threshold_crossing);
  // same policy becomes feasible once n pushes the schedule inside the range
  CHECK_NOTHROW(bind_thresholds(ModeratePolicy{0.75, 0.2, 0.2}, prof, 8));
}

TEST_CASE("crossing check matches the closed-form predicate") {
  const LlrProfile prof = reference_profile();
  const double span = prof.d12 + prof.d21;
  for (double eps : {0.05, 0.1, 0.15, 0.2, 0.3, 0.5}) {
    for (std::int64_t n : {1, 2, 3, 5, 10, 50, 1000}) {
      const bool crosses = 2.0 * eps * std::pow(static_cast<double>(n), -0.25) > span;
      bool threw = false;
      try {
        bind_thresholds(ModeratePolicy{0.75, eps, eps}, prof, n);
      } catch (const Error& e) {
        CHECK(e.code() == errc::threshold_crossing);
        threw = true;
      }
      CHECK(threw == crosses);
    }
  }
}

TEST_CASE("moderate thresholds approach the divergences monotonically") {
  const LlrProfile prof = reference_profile();
  const ThresholdPolicy policy = ModeratePolicy{0.6, 0.05, 0.05};
  double prev_hi = -1e300;
  double prev_lo = 1e300;
  for (std::int64_t n = 1; n <= 2000; n *= 2) {
    const BoundThresholds thr = bind_thresholds(policy, prof, n);
    CHECK(thr.hi > prev_hi);
    CHECK(thr.lo < prev_lo);
    CHECK(thr.hi < prof.d12);
    CHECK(thr.lo > -prof.d21);
    prev_hi = thr.hi;
    prev_lo = thr.lo;
  }
  CHECK(prof.d12 - prev_hi < 1e-2);
  CHECK(prev_lo + prof.d21 < 1e-2);
}

TEST_CASE("moderate policy parameter validation") {
  const LlrProfile prof = reference_profile();
  CHECK(thrown_code([&] {
          bind_thresholds(ModeratePolicy{0.5, 0.1, 0.1}, prof, 10);
        }) == errc::parameter_out_of_range);
  CHECK(thrown_code([&] {
          bind_thresholds(ModeratePolicy{0.75, 0.0, 0.1}, prof, 10);
        }) == errc::parameter_out_of_range);
  CHECK(thrown_code([&] {
          bind_thresholds(ModeratePolicy{0.75, 0.1, 0.1}, prof, 0);
        }) == errc::parameter_out_of_range);
}

TEST_CASE("fixed thresholds bind inside the admissible range") {
  const LlrProfile prof = reference_profile();
  const BoundThresholds thr =
      bind_thresholds(FixedPolicy{0.04, -0.02}, prof, 7);
  CHECK(thr.hi == 0.04);
  CHECK(thr.lo == -0.02);
  CHECK(thr.n == 7);

  CHECK(thrown_code([&] {
          bind_thresholds(FixedPolicy{prof.d12, -0.02}, prof, 7);
        }) == errc::fixed_threshold_out_of_range);
  CHECK(thrown_code([&] {
          bind_thresholds(FixedPolicy{0.04, -prof.d21}, prof, 7);
        }) == errc::fixed_threshold_out_of_range);
  CHECK(thrown_code([&] {
          bind_thresholds(FixedPolicy{-0.02, 0.04}, prof, 7);
        }) == errc::fixed_threshold_out_of_range);
}

TEST_CASE("decision regions use strict inequalities") {
  const BoundThresholds thr{10, 0.05, -0.03};
  CHECK(decide(10 * 0.05, thr) == Decision::Erasure);
  CHECK(decide(std::nextafter(10 * 0.05, 1e300), thr) == Decision::AcceptH1);
  CHECK(decide(10 * -0.03, thr) == Decision::Erasure);
  CHECK(decide(std::nextafter(10 * -0.03, -1e300), thr) == Decision::AcceptH2);
  CHECK(decide(0.0, thr) == Decision::Erasure);
}

TEST_CASE("single-threshold mode decides strictly on each side") {
  const BoundThresholds thr{4, 0.01, 0.01};
  CHECK(decide(0.03, thr) == Decision::AcceptH2);
  CHECK(decide(0.05, thr) == Decision::AcceptH1);
  CHECK(decide(0.04, thr) == Decision::Erasure);
}

TEST_CASE("probability assembly mixes in the log domain") {
  const HypothesisPair pair = testfix::binary_pair();
  const double half = std::log(0.5);
  const ErrorProbabilities probs =
      assemble_probabilities({half, half, half, half}, pair);
  CHECK(probs.pe1 == doctest::Approx(half).epsilon(1e-14));
  CHECK(probs.pe2 == doctest::Approx(half).epsilon(1e-14));

  const ErrorProbabilities lopsided =
      assemble_probabilities({std::log(0.25), kNegInf, std::log(0.75), kNegInf}, pair);
  CHECK(lopsided.pe1 == doctest::Approx(std::log(0.5)).epsilon(1e-14));
  CHECK(lopsided.pe2 == kNegInf);

  CHECK(thrown_code([&] {
          assemble_probabilities({0.1, half, half, half}, pair);
        }) == errc::invalid_log_probability);
}
