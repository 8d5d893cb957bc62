#pragma once

#include <cstdint>
#include <random>

#include "moddev/hypotest.hpp"
#include "moddev/llr.hpp"
#include "moddev/pmf.hpp"

namespace moddev {

enum class TiltMode { None, Auto, Manual };

/// Importance-sampling proposal: sample symbols from the geometric-path
/// distribution P_t(x) proportional to P1(x)^(1-t) P2(x)^t. None samples
/// from the hypothesis itself; Auto solves for the t whose mean LLR equals
/// the tested per-symbol threshold.
struct TiltSpec {
  TiltMode mode = TiltMode::None;
  double t = 0.0;  // Manual only

  static TiltSpec none() { return {TiltMode::None, 0.0}; }
  static TiltSpec automatic() { return {TiltMode::Auto, 0.0}; }
  static TiltSpec manual(double t) { return {TiltMode::Manual, t}; }
};

struct McConfig {
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  std::int64_t streams = 1;
  TiltSpec tilt;
};

/// std_err is the relative standard error of the probability estimate
/// (delta method on the log scale); effective_sample_size is the Kish
/// diagnostic over the weights of samples that landed in the event.
struct McEstimate {
  double log_p_hat;
  double std_err;
  std::int64_t samples_used;
  double effective_sample_size;
};

/// Counter-based seed derivation: statistically independent values for each
/// (seed, index) pair; used to seed per-stream generators.
std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t index) noexcept;

/// Uniform in [0, 1) from the top 53 bits of the generator output. A fixed
/// mapping, unlike std::uniform_real_distribution, so estimates are
/// reproducible across standard libraries.
double next_uniform(std::mt19937_64& gen);

/// Sample count assigned to one stream when `total` draws are spread as
/// evenly as possible over `streams` substreams.
std::int64_t stream_sample_count(std::int64_t total, std::int64_t streams,
                                 std::int64_t index);

Pmf tilted_pmf(const HypothesisPair& pair, double t);

/// E_{P_t}[llr]; strictly decreasing in t from d12 at t=0 to -d21 at t=1.
double tilted_mean(const HypothesisPair& pair, const LlrProfile& profile, double t);

/// Solves tilted_mean(t) = threshold_per_symbol by bisection to 1e-10 on the
/// mean. The threshold must lie in [-d21, d12]; the endpoints map to t=1 and
/// t=0 exactly.
double auto_tilt(const HypothesisPair& pair, const LlrProfile& profile,
                 double threshold_per_symbol);

/// Importance-sampling estimate of P_under(L(X_1..X_n) <=/>= threshold_total).
/// Each sequence sampled from P_t^n carries weight prod_i P_under(X_i)/P_t(X_i),
/// accumulated in a fixed stream order, so results depend only on
/// (seed, streams, samples) and never on scheduling.
McEstimate estimate_tail(const HypothesisPair& pair, const LlrProfile& profile,
                         Hypothesis under, std::int64_t n, TailKind kind,
                         double threshold_total, const McConfig& cfg);

}  // namespace moddev
