#include "moddev/llr.hpp"

#include <algorithm>
#include <cmath>

namespace moddev {

LlrProfile llr_profile(const HypothesisPair& hyp) {
  const Pmf& p1 = hyp.p1();
  const Pmf& p2 = hyp.p2();
  const std::size_t k = p1.size();

  LlrProfile prof;
  prof.llr.resize(k);
  prof.d12 = 0.0;
  prof.d21 = 0.0;
  for (std::size_t x = 0; x < k; ++x) {
    prof.llr[x] = std::log(p1[x] / p2[x]);
    prof.d12 += p1[x] * prof.llr[x];
    prof.d21 -= p2[x] * prof.llr[x];
  }

  prof.d1 = 0.0;
  prof.var1 = 0.0;
  prof.d2 = 0.0;
  prof.var2 = 0.0;
  for (std::size_t x = 0; x < k; ++x) {
    const double c1 = prof.llr[x] - prof.d12;
    const double c2 = prof.llr[x] + prof.d21;
    prof.d1 = std::max(prof.d1, std::fabs(c1));
    prof.var1 += p1[x] * c1 * c1;
    prof.d2 = std::max(prof.d2, std::fabs(c2));
    prof.var2 += p2[x] * c2 * c2;
  }
  // The variance never exceeds the squared sup bound; trim the rounding
  // residue so gamma lands in (0, 1] exactly.
  prof.var1 = std::min(prof.var1, prof.d1 * prof.d1);
  prof.var2 = std::min(prof.var2, prof.d2 * prof.d2);
  prof.gamma1 = prof.var1 / (prof.d1 * prof.d1);
  prof.gamma2 = prof.var2 / (prof.d2 * prof.d2);
  return prof;
}

}  // namespace moddev
