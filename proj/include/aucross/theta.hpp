#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "rank_profile.hpp"
#include "ranking.hpp"
#include "sample.hpp"

namespace aucross {

// Score bounds estimated from one sample so that abstaining inside
// [theta_l, theta_u] cannot lower the AUC of what remains:
//   theta_u caps the region where positives satisfy r'(x)/n <= auc * p_neg,
//   theta_l floors the region where negatives satisfy t(x)/n_pos <= auc - 1/n_pos.
// l_index / u_index are 1-based order statistics into the ascending scores;
// u_index == 0 and l_index == n + 1 encode the sentinels 0.0 and 1.0 (no
// score qualifies on that side).
struct ThetaEstimate {
  double theta_l = 1.0;
  double theta_u = 0.0;
  double auc_used = 0.0;
  long long n = 0;
  long long n_pos = 0;
  long long l_index = 0;
  long long u_index = 0;
};

// Index arithmetic stays in integers throughout: with c2 the doubled
// concordant-pair count, u_index = floor(auc * p_neg * n) = c2 / (2 n_pos)
// and the theta_l search counts ascending positions whose tail positive
// fraction exceeds auc - 1/n_pos, i.e. 2 n_neg (n_pos - cum_pos + 1) > c2.
inline ThetaEstimate estimate_thetas_auc(const LabeledSample& s) {
  s.require_both_classes("estimate_thetas_auc");
  PairCounts pc = auc_pair_counts(s, TiePolicy::half_credit);
  RankProfile pr(s);
  std::vector<double> sorted = pr.sorted_scores(s);

  ThetaEstimate est;
  est.n = static_cast<long long>(s.n());
  est.n_pos = static_cast<long long>(s.n_pos());
  est.auc_used = pc.value();

  est.u_index = pc.doubled_concordant / (2 * pc.pos);
  est.theta_u = est.u_index == 0 ? 0.0 : sorted[static_cast<std::size_t>(est.u_index) - 1];

  long long count = 0;
  while (count < est.n && 2 * pc.neg * (pc.pos - pr.cum_pos()[count + 1] + 1) > pc.doubled_concordant)
    ++count;
  est.l_index = count + 1;
  est.theta_l = count == est.n ? 1.0 : sorted[static_cast<std::size_t>(count)];
  return est;
}

// Weighted combination of a full-sample quantile with the mean of two
// half-sample quantiles; the weights 1/sqrt2 and 1 - 1/sqrt2 minimize the
// asymptotic variance of the combined estimate and sum to one.
inline double combine_quantiles(double full, double sub1, double sub2) {
  const double w = 1.0 / std::sqrt(2.0);
  return w * full + (1.0 - w) * ((sub1 + sub2) / 2.0);
}

struct CombinedTheta {
  ThetaEstimate full;
  std::array<ThetaEstimate, 2> subs;
  double theta_l_star = 1.0;
  double theta_u_star = 0.0;
};

// Sentinel thetas participate as the numeric values 1.0 / 0.0.
inline CombinedTheta combine_thetas(const ThetaEstimate& full, const ThetaEstimate& sub1,
                                    const ThetaEstimate& sub2) {
  CombinedTheta out;
  out.full = full;
  out.subs = {sub1, sub2};
  out.theta_l_star = combine_quantiles(full.theta_l, sub1.theta_l, sub2.theta_l);
  out.theta_u_star = combine_quantiles(full.theta_u, sub1.theta_u, sub2.theta_u);
  return out;
}

}  // namespace aucross
