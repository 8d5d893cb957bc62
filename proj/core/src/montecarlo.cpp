#include "moddev/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "moddev/numeric.hpp"

namespace moddev {

std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double next_uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

std::int64_t stream_sample_count(std::int64_t total, std::int64_t streams,
                                 std::int64_t index) {
  if (total < 0 || streams < 1 || index < 0 || index >= streams) {
    fail(errc::parameter_out_of_range, "stream " + std::to_string(index) + " of " +
                                           std::to_string(streams) + ", total " +
                                           std::to_string(total));
  }
  return total / streams + (index < total % streams ? 1 : 0);
}

Pmf tilted_pmf(const HypothesisPair& pair, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    fail(errc::parameter_out_of_range, "tilt t = " + std::to_string(t) + " outside [0,1]");
  }
  const std::size_t k = pair.alphabet_size();
  std::vector<double> logw(k);
  double max_logw = -std::numeric_limits<double>::infinity();
  for (std::size_t x = 0; x < k; ++x) {
    logw[x] = (1.0 - t) * std::log(pair.p1()[x]) + t * std::log(pair.p2()[x]);
    max_logw = std::max(max_logw, logw[x]);
  }
  double z = 0.0;
  std::vector<double> probs(k);
  for (std::size_t x = 0; x < k; ++x) {
    probs[x] = std::exp(logw[x] - max_logw);
    z += probs[x];
  }
  for (std::size_t x = 0; x < k; ++x) {
    probs[x] /= z;
    if (!(probs[x] > 0.0) || !std::isfinite(probs[x])) {
      fail(errc::degenerate_tilt,
           "tilted mass at symbol " + std::to_string(x) + " underflowed");
    }
  }
  return Pmf(std::move(probs));
}

double tilted_mean(const HypothesisPair& pair, const LlrProfile& profile, double t) {
  const Pmf q = tilted_pmf(pair, t);
  double mean = 0.0;
  for (std::size_t x = 0; x < q.size(); ++x) mean += q[x] * profile.llr[x];
  return mean;
}

double auto_tilt(const HypothesisPair& pair, const LlrProfile& profile,
                 double threshold_per_symbol) {
  if (!(threshold_per_symbol <= profile.d12 && threshold_per_symbol >= -profile.d21)) {
    fail(errc::threshold_outside_mean_range,
         "threshold " + std::to_string(threshold_per_symbol) + " outside [" +
             std::to_string(-profile.d21) + ", " + std::to_string(profile.d12) + "]");
  }
  if (threshold_per_symbol == profile.d12) return 0.0;
  if (threshold_per_symbol == -profile.d21) return 1.0;
  double lo = 0.0;
  double hi = 1.0;
  double mid = 0.5;
  // The tilted mean falls strictly from d12 to -d21 as t goes 0 to 1; its
  // slope is a variance, so the 1e-10 target is reachable well before the
  // interval collapses to double resolution.
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    const double mean = tilted_mean(pair, profile, mid);
    if (std::fabs(mean - threshold_per_symbol) < 1e-10) return mid;
    if (mean > threshold_per_symbol) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

McEstimate estimate_tail(const HypothesisPair& pair, const LlrProfile& profile,
                         Hypothesis under, std::int64_t n, TailKind kind,
                         double threshold_total, const McConfig& cfg) {
  if (n < 1) fail(errc::parameter_out_of_range, "n = " + std::to_string(n) + " < 1");
  if (cfg.samples < 1) {
    fail(errc::parameter_out_of_range, "samples = " + std::to_string(cfg.samples));
  }
  if (cfg.streams < 1) {
    fail(errc::parameter_out_of_range, "streams = " + std::to_string(cfg.streams));
  }

  const Pmf& hyp_pmf = under == Hypothesis::H1 ? pair.p1() : pair.p2();
  std::optional<Pmf> proposal;
  switch (cfg.tilt.mode) {
    case TiltMode::None:
      break;
    case TiltMode::Manual:
      proposal = tilted_pmf(pair, cfg.tilt.t);
      break;
    case TiltMode::Auto:
      proposal = tilted_pmf(
          pair, auto_tilt(pair, profile, threshold_total / static_cast<double>(n)));
      break;
  }
  const Pmf& q = proposal ? *proposal : hyp_pmf;

  const std::size_t k = q.size();
  std::vector<double> log_ratio(k, 0.0);
  if (proposal) {
    for (std::size_t x = 0; x < k; ++x) {
      log_ratio[x] = std::log(hyp_pmf[x]) - std::log(q[x]);
    }
  }
  std::vector<double> cum(k);
  double running = 0.0;
  for (std::size_t x = 0; x < k; ++x) {
    running += q[x];
    cum[x] = running;
  }
  cum[k - 1] = 1.0;

  // y_i = weight * event indicator; the Kish diagnostic over event hits uses
  // the same two accumulators. Streams reduce in index order regardless of
  // how the loop is scheduled, so estimates depend only on (seed, streams).
  long double sum_y = 0.0L;
  long double sum_y2 = 0.0L;
  for (std::int64_t s = 0; s < cfg.streams; ++s) {
    std::mt19937_64 gen(splitmix64(cfg.seed, static_cast<std::uint64_t>(s)));
    const std::int64_t count = stream_sample_count(cfg.samples, cfg.streams, s);
    long double stream_y = 0.0L;
    long double stream_y2 = 0.0L;
    for (std::int64_t i = 0; i < count; ++i) {
      double total_llr = 0.0;
      double log_w = 0.0;
      for (std::int64_t j = 0; j < n; ++j) {
        const double u = next_uniform(gen);
        std::size_t x = 0;
        while (x + 1 < k && u >= cum[x]) ++x;
        total_llr += profile.llr[x];
        log_w += log_ratio[x];
      }
      const bool in_event = kind == TailKind::LeqThreshold
                                ? leq_with_tol(total_llr, threshold_total)
                                : geq_with_tol(total_llr, threshold_total);
      if (in_event) {
        const long double w = proposal ? expl(static_cast<long double>(log_w)) : 1.0L;
        stream_y += w;
        stream_y2 += w * w;
      }
    }
    sum_y += stream_y;
    sum_y2 += stream_y2;
  }

  McEstimate est;
  est.samples_used = cfg.samples;
  const long double count = static_cast<long double>(cfg.samples);
  if (sum_y <= 0.0L) {
    est.log_p_hat = kNegInf;
    est.std_err = std::numeric_limits<double>::infinity();
    est.effective_sample_size = 0.0;
    return est;
  }
  est.log_p_hat = static_cast<double>(logl(sum_y) - logl(count));
  long double s2 = sum_y2 - sum_y * sum_y / count;
  if (s2 < 0.0L) s2 = 0.0L;
  if (s2 == 0.0L) {
    est.std_err = 0.0;
  } else if (cfg.samples < 2) {
    est.std_err = std::numeric_limits<double>::infinity();
  } else {
    s2 /= count - 1.0L;
    est.std_err = static_cast<double>(sqrtl(s2 / count) * (count / sum_y));
  }
  est.effective_sample_size = static_cast<double>(sum_y * sum_y / sum_y2);
  return est;
}

}  // namespace moddev
