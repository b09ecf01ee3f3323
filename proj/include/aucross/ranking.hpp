#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "rank_profile.hpp"
#include "sample.hpp"

namespace aucross {

// Tie handling for the Mann-Whitney statistic. half_credit counts a tied
// positive/negative pair as 1/2 (the ROC convention); strict_only drops it.
enum class TiePolicy { half_credit, strict_only };

// AUC as an exact rational: value() = doubled_concordant / (2 * pos * neg).
// A strictly concordant pair contributes 2, a tied pair 1 (half_credit) or 0.
struct PairCounts {
  long long doubled_concordant = 0;
  long long pos = 0;
  long long neg = 0;

  double value() const {
    return static_cast<double>(doubled_concordant) / (2.0 * static_cast<double>(pos) * static_cast<double>(neg));
  }
};

// Single sweep over the scores in ascending order, O(n log n). Each tie group
// of p positives and m negatives adds p * (2 * negatives_below + m) doubled
// credits; the brute-force pair scan reproduces the same integer.
inline PairCounts auc_pair_counts(const LabeledSample& s, TiePolicy policy = TiePolicy::half_credit) {
  s.require_both_classes("auc_pair_counts");
  std::vector<std::pair<double, int>> rows(s.n());
  for (std::size_t i = 0; i < s.n(); ++i) rows[i] = {s.scores()[i], s.labels()[i]};
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  PairCounts out;
  out.pos = static_cast<long long>(s.n_pos());
  out.neg = static_cast<long long>(s.n_neg());
  long long neg_below = 0;
  std::size_t i = 0;
  while (i < rows.size()) {
    std::size_t j = i;
    long long grp_pos = 0, grp_neg = 0;
    while (j < rows.size() && rows[j].first == rows[i].first) {
      grp_pos += rows[j].second;
      grp_neg += 1 - rows[j].second;
      ++j;
    }
    out.doubled_concordant += grp_pos * 2 * neg_below;
    if (policy == TiePolicy::half_credit) out.doubled_concordant += grp_pos * grp_neg;
    neg_below += grp_neg;
    i = j;
  }
  return out;
}

inline double mann_whitney_auc(const LabeledSample& s, TiePolicy policy = TiePolicy::half_credit) {
  return auc_pair_counts(s, policy).value();
}

// Accuracy ratio G = 2 * AUC - 1.
inline double gini_coefficient(const LabeledSample& s) {
  return 2.0 * mann_whitney_auc(s) - 1.0;
}

// Cumulative accuracy profile: point i maps the i highest-scored instances to
// the fraction of positives they capture. n + 1 points from (0,0) to (1,1);
// ties follow the stable descending order fixed by RankProfile.
inline std::vector<std::pair<double, double>> cap_points(const LabeledSample& s) {
  s.require_nonempty("cap_points");
  if (s.n_pos() == 0) throw degenerate_sample_error("cap_points: no positives");
  RankProfile pr(s);
  const auto n = static_cast<long long>(s.n());
  const auto npos = static_cast<double>(s.n_pos());
  std::vector<std::pair<double, double>> pts(s.n() + 1);
  for (long long i = 0; i <= n; ++i) {
    long long captured = static_cast<long long>(s.n_pos()) - pr.cum_pos()[n - i];
    pts[i] = {static_cast<double>(i) / static_cast<double>(n), static_cast<double>(captured) / npos};
  }
  return pts;
}

// Areas against the diagonal: a = area between the CAP and the chance line,
// b = area between the perfect profile and the CAP, a + b = p_neg / 2.
// a can be negative for worse-than-chance rankings.
struct CapAreas {
  double a = 0.0;
  double b = 0.0;
};

// Trapezoid area under the CAP, accumulated exactly as the integer
// S = sum_i (t(i-1) + t(i)): area = S / (2 n n_pos).
inline long long cap_trapezoid_numerator(const LabeledSample& s) {
  RankProfile pr(s);
  const auto n = static_cast<long long>(s.n());
  const auto npos = static_cast<long long>(s.n_pos());
  long long sum = 0;
  long long prev = 0;
  for (long long i = 1; i <= n; ++i) {
    long long cur = npos - pr.cum_pos()[n - i];
    sum += prev + cur;
    prev = cur;
  }
  return sum;
}

inline CapAreas cap_areas(const LabeledSample& s) {
  s.require_both_classes("cap_areas");
  long long num = cap_trapezoid_numerator(s);
  double area = static_cast<double>(num) /
                (2.0 * static_cast<double>(s.n()) * static_cast<double>(s.n_pos()));
  CapAreas out;
  out.a = area - 0.5;
  out.b = s.p_neg() / 2.0 - out.a;
  return out;
}

}  // namespace aucross
