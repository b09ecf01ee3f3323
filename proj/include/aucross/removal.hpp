#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "rank_profile.hpp"
#include "ranking.hpp"
#include "sample.hpp"

namespace aucross {

// One-instance abstention tests. A flagged instance can be dropped without
// lowering the ranking quality of the remainder; on tie-free data dropping a
// flagged instance strictly raises the AUC.
//
// Both predicates compare an integer rank against a multiple of auc. The
// comparison allows a few ulp so that exact rational boundaries survive the
// rounding of auc itself; genuinely distinct values differ by at least one
// integer step and stay orders of magnitude outside the guard.
namespace detail {
inline bool leq_guarded(double lhs, double rhs) {
  double tol = 4.0 * std::numeric_limits<double>::epsilon() *
               std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return lhs <= rhs + tol;
}
}  // namespace detail

// Positive x is droppable when r'(x) / n <= auc * p_neg, i.e. r' <= auc * n_neg.
inline bool removable_positive(const LabeledSample& s, const RankProfile& pr, std::size_t index,
                               double auc) {
  if (s.labels()[index] != 1) throw wrong_class_error("removable_positive: instance is negative");
  return detail::leq_guarded(static_cast<double>(pr.r_prime(index)),
                             auc * static_cast<double>(s.n_neg()));
}

// Negative x is droppable when t(x) / n_pos <= auc - 1 / n_pos, i.e. t + 1 <= auc * n_pos.
inline bool removable_negative(const LabeledSample& s, const RankProfile& pr, std::size_t index,
                               double auc) {
  if (s.labels()[index] != 0) throw wrong_class_error("removable_negative: instance is positive");
  return detail::leq_guarded(static_cast<double>(pr.t(index)) + 1.0,
                             auc * static_cast<double>(s.n_pos()));
}

// CAP area above the diagonal after dropping one positive, from the closed
// form update; avoids rebuilding the profile:
//   a' + 1/2 = (a + 1/2 - ((r'-1) + (t-1) + 1/2) / (n_pos n)) * n_pos n / ((n_pos-1)(n-1)).
inline double area_after_remove_positive(const LabeledSample& s, const RankProfile& pr,
                                         std::size_t index, double area_a) {
  if (s.labels()[index] != 1) throw wrong_class_error("area_after_remove_positive: instance is negative");
  if (s.n_pos() <= 1) throw underflow_error("area_after_remove_positive: positives would hit zero");
  double n = static_cast<double>(s.n());
  double npos = static_cast<double>(s.n_pos());
  double rp = static_cast<double>(pr.r_prime(index));
  double t = static_cast<double>(pr.t(index));
  double shaved = area_a + 0.5 - ((rp - 1.0) + (t - 1.0) + 0.5) / (npos * n);
  return shaved * npos * n / ((npos - 1.0) * (n - 1.0)) - 0.5;
}

// Same for one negative: a' + 1/2 = (a + 1/2 - t / (n_pos n)) * n / (n-1).
inline double area_after_remove_negative(const LabeledSample& s, const RankProfile& pr,
                                         std::size_t index, double area_a) {
  if (s.labels()[index] != 0) throw wrong_class_error("area_after_remove_negative: instance is positive");
  if (s.n_neg() <= 1) throw underflow_error("area_after_remove_negative: negatives would hit zero");
  double n = static_cast<double>(s.n());
  double npos = static_cast<double>(s.n_pos());
  double t = static_cast<double>(pr.t(index));
  double shaved = area_a + 0.5 - t / (npos * n);
  return shaved * n / (n - 1.0) - 0.5;
}

}  // namespace aucross
