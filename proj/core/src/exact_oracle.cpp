#include "moddev/exact_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "moddev/numeric.hpp"

namespace moddev {

std::int64_t count_type_classes(std::int64_t n, std::int64_t alphabet_size) {
  if (n < 0) fail(errc::parameter_out_of_range, "n = " + std::to_string(n) + " < 0");
  if (alphabet_size < 2) {
    fail(errc::alphabet_too_small, "alphabet size " + std::to_string(alphabet_size));
  }
  // C(n+k-1, k-1) as the running product C(n+j, j); each intermediate value
  // is itself a binomial, so the division is exact.
  unsigned __int128 count = 1;
  const unsigned __int128 cap = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t j = 1; j < alphabet_size; ++j) {
    count = count * static_cast<unsigned __int128>(n + j) / static_cast<unsigned __int128>(j);
    if (count > cap) return std::numeric_limits<std::int64_t>::max();
  }
  return static_cast<std::int64_t>(count);
}

void enumerate_types(const HypothesisPair& pair, const LlrProfile& profile, std::int64_t n,
                     std::int64_t budget, const std::function<void(const TypeClass&)>& visit) {
  if (n < 1) fail(errc::parameter_out_of_range, "n = " + std::to_string(n) + " < 1");
  if (budget < 1) fail(errc::parameter_out_of_range, "budget = " + std::to_string(budget));
  const std::int64_t k = static_cast<std::int64_t>(pair.alphabet_size());
  const std::int64_t classes = count_type_classes(n, k);
  if (classes > budget) {
    fail(errc::budget_exceeded, "n = " + std::to_string(n) + " needs " +
                                    std::to_string(classes) + " type classes, budget is " +
                                    std::to_string(budget));
  }

  std::vector<double> lfact(static_cast<std::size_t>(n) + 1);
  for (std::int64_t i = 0; i <= n; ++i) {
    lfact[static_cast<std::size_t>(i)] = std::lgamma(static_cast<double>(i) + 1.0);
  }
  std::vector<double> lp1(static_cast<std::size_t>(k));
  std::vector<double> lp2(static_cast<std::size_t>(k));
  for (std::int64_t x = 0; x < k; ++x) {
    lp1[static_cast<std::size_t>(x)] = std::log(pair.p1()[static_cast<std::size_t>(x)]);
    lp2[static_cast<std::size_t>(x)] = std::log(pair.p2()[static_cast<std::size_t>(x)]);
  }

  TypeClass tc;
  tc.counts.assign(static_cast<std::size_t>(k), 0);

  const auto emit = [&]() {
    double lw1 = lfact[static_cast<std::size_t>(n)];
    double lw2 = lw1;
    double llr = 0.0;
    for (std::int64_t x = 0; x < k; ++x) {
      const std::size_t xi = static_cast<std::size_t>(x);
      const double c = static_cast<double>(tc.counts[xi]);
      lw1 += c * lp1[xi] - lfact[static_cast<std::size_t>(tc.counts[xi])];
      lw2 += c * lp2[xi] - lfact[static_cast<std::size_t>(tc.counts[xi])];
      llr += c * profile.llr[xi];
    }
    tc.log_weight_h1 = lw1;
    tc.log_weight_h2 = lw2;
    tc.llr_value = llr;
    visit(tc);
  };

  const std::function<void(std::int64_t, std::int64_t)> fill =
      [&](std::int64_t pos, std::int64_t remaining) {
        if (pos == k - 1) {
          tc.counts[static_cast<std::size_t>(pos)] = remaining;
          emit();
          return;
        }
        for (std::int64_t c = 0; c <= remaining; ++c) {
          tc.counts[static_cast<std::size_t>(pos)] = c;
          fill(pos + 1, remaining - c);
        }
      };
  fill(0, n);
}

namespace {

struct RawAtom {
  double llr;
  double lw1;
  double lw2;
};

}  // namespace

TailDistributionPair llr_distribution_pair(const HypothesisPair& pair,
                                           const LlrProfile& profile, std::int64_t n,
                                           std::int64_t budget) {
  std::vector<RawAtom> raw;
  enumerate_types(pair, profile, n, budget, [&](const TypeClass& tc) {
    raw.push_back({tc.llr_value, tc.log_weight_h1, tc.log_weight_h2});
  });
  std::sort(raw.begin(), raw.end(),
            [](const RawAtom& a, const RawAtom& b) { return a.llr < b.llr; });

  TailDistributionPair out;
  out.h1.n = n;
  out.h1.hypothesis = Hypothesis::H1;
  out.h2.n = n;
  out.h2.hypothesis = Hypothesis::H2;
  // Coalesce runs of values within tolerance of the run's first value, which
  // becomes the representative for both hypotheses.
  std::size_t i = 0;
  while (i < raw.size()) {
    const double rep = raw[i].llr;
    double lw1 = raw[i].lw1;
    double lw2 = raw[i].lw2;
    std::size_t j = i + 1;
    while (j < raw.size() && raw[j].llr <= rep + kLlrMergeTol) {
      lw1 = log_sum_exp(lw1, raw[j].lw1);
      lw2 = log_sum_exp(lw2, raw[j].lw2);
      ++j;
    }
    out.h1.atoms.push_back({rep, lw1});
    out.h2.atoms.push_back({rep, lw2});
    i = j;
  }
  return out;
}

TailDistribution llr_distribution(const HypothesisPair& pair, const LlrProfile& profile,
                                  std::int64_t n, Hypothesis hypothesis,
                                  std::int64_t budget) {
  TailDistributionPair both = llr_distribution_pair(pair, profile, n, budget);
  return hypothesis == Hypothesis::H1 ? std::move(both.h1) : std::move(both.h2);
}

double exact_tail(const TailDistribution& dist, TailKind kind, double threshold) {
  double acc = kNegInf;
  for (const Atom& atom : dist.atoms) {
    const bool in_event = kind == TailKind::LeqThreshold
                              ? leq_with_tol(atom.llr, threshold)
                              : geq_with_tol(atom.llr, threshold);
    if (in_event) acc = log_sum_exp(acc, atom.log_prob);
  }
  // A full tail can accumulate to log(1 + few ulp); it is still probability 1.
  return std::min(acc, 0.0);
}

ErrorProbabilities exact_error_probabilities(const HypothesisPair& pair,
                                             const LlrProfile& profile,
                                             const BoundThresholds& thresholds,
                                             std::int64_t budget) {
  const TailDistributionPair dists =
      llr_distribution_pair(pair, profile, thresholds.n, budget);
  const double n = static_cast<double>(thresholds.n);
  TailLogProbs tails;
  tails.alpha1 = exact_tail(dists.h1, TailKind::LeqThreshold, n * thresholds.hi);
  tails.alpha2 = exact_tail(dists.h1, TailKind::LeqThreshold, n * thresholds.lo);
  tails.beta1 = exact_tail(dists.h2, TailKind::GeqThreshold, n * thresholds.lo);
  tails.beta2 = exact_tail(dists.h2, TailKind::GeqThreshold, n * thresholds.hi);
  return assemble_probabilities(tails, pair);
}

Moments distribution_moments(const TailDistribution& dist) {
  double mean = 0.0;
  for (const Atom& atom : dist.atoms) mean += std::exp(atom.log_prob) * atom.llr;
  double var = 0.0;
  for (const Atom& atom : dist.atoms) {
    const double c = atom.llr - mean;
    var += std::exp(atom.log_prob) * c * c;
  }
  return {mean, var};
}

}  // namespace moddev
