#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "sample.hpp"

namespace aucross {

// Rank bookkeeping for one sample under the score-descending convention:
//   r(x)  1-based rank when instances are sorted by non-ascending score,
//   r'(x) = n - r(x) + 1, the 1-based ascending rank,
//   t(x)  number of positives among descending ranks 1..r(x), x included.
// Ties are ordered by the stable ascending sort on the original index, so
// every quantity is well defined on tied data as well.
class RankProfile {
 public:
  explicit RankProfile(const LabeledSample& s) : n_(s.n()), n_pos_(s.n_pos()) {
    s.require_nonempty("RankProfile");
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    const auto& sc = s.scores();
    std::stable_sort(order_.begin(), order_.end(),
                     [&sc](std::size_t a, std::size_t b) { return sc[a] < sc[b]; });
    asc_rank_.resize(n_);
    cum_pos_.resize(n_ + 1);
    cum_pos_[0] = 0;
    for (std::size_t k = 0; k < n_; ++k) {
      asc_rank_[order_[k]] = static_cast<long long>(k) + 1;
      cum_pos_[k + 1] = cum_pos_[k] + s.labels()[order_[k]];
    }
  }

  std::size_t n() const { return n_; }
  std::size_t n_pos() const { return n_pos_; }

  // original indices in ascending score order
  const std::vector<std::size_t>& ascending_order() const { return order_; }
  // cum_pos()[k] = positives among the k lowest-scored instances, k in [0, n]
  const std::vector<long long>& cum_pos() const { return cum_pos_; }

  long long r_prime(std::size_t i) const { return asc_rank_[i]; }
  long long r(std::size_t i) const { return static_cast<long long>(n_) - asc_rank_[i] + 1; }
  long long t(std::size_t i) const {
    return static_cast<long long>(n_pos_) - cum_pos_[asc_rank_[i] - 1];
  }
  double tpr(std::size_t i) const {
    return static_cast<double>(t(i)) / static_cast<double>(n_pos_);
  }

  std::vector<double> sorted_scores(const LabeledSample& s) const {
    std::vector<double> out(n_);
    for (std::size_t k = 0; k < n_; ++k) out[k] = s.scores()[order_[k]];
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::size_t n_pos_ = 0;
  std::vector<std::size_t> order_;
  std::vector<long long> asc_rank_;
  std::vector<long long> cum_pos_;
};

}  // namespace aucross
