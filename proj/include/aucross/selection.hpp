#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ranking.hpp"
#include "sample.hpp"

namespace aucross {

// Band edge semantics. inclusive rejects theta_l <= s <= theta_u; half_open
// rejects theta_l <= s < theta_u. Fitted selectors always report inclusive
// bands; half_open exists for rank-window experiments.
enum class BandEdgeMode { inclusive, half_open };

// Score-bounded reject option: abstain exactly when the score falls inside
// the band. theta_l > theta_u encodes the empty band (accept everything);
// the sentinels (1.0, 0.0) are the canonical empty selector.
struct ScoreBandSelector {
  double theta_l = 1.0;
  double theta_u = 0.0;
  BandEdgeMode edge_mode = BandEdgeMode::inclusive;

  bool rejects(double score) const {
    if (edge_mode == BandEdgeMode::inclusive) return score >= theta_l && score <= theta_u;
    return score >= theta_l && score < theta_u;
  }
  bool accepts(double score) const { return !rejects(score); }
  bool empty_band() const { return theta_l > theta_u; }

  static ScoreBandSelector empty() { return {}; }
  static ScoreBandSelector band(double lo, double hi) { return {lo, hi, BandEdgeMode::inclusive}; }
};

struct SelectionSplit {
  LabeledSample accepted;
  std::vector<std::size_t> accepted_rows;
  std::vector<std::size_t> rejected_rows;
  double coverage = 0.0;
};

inline SelectionSplit apply_selector(const LabeledSample& s, const ScoreBandSelector& sel) {
  s.require_nonempty("apply_selector");
  SelectionSplit out;
  std::vector<double> sc;
  std::vector<int> lb;
  for (std::size_t i = 0; i < s.n(); ++i) {
    if (sel.accepts(s.scores()[i])) {
      out.accepted_rows.push_back(i);
      sc.push_back(s.scores()[i]);
      lb.push_back(s.labels()[i]);
    } else {
      out.rejected_rows.push_back(i);
    }
  }
  out.accepted = LabeledSample(std::move(sc), std::move(lb));
  out.coverage = static_cast<double>(out.accepted.n()) / static_cast<double>(s.n());
  return out;
}

// Metrics over the accepted region. Fields are absent when undefined:
// selective_auc needs both classes accepted, the accuracy family needs a
// non-empty accepted region.
struct SelectiveReport {
  double coverage = 0.0;
  double target_coverage = 0.0;
  double violation = 0.0;
  std::optional<double> selective_auc;
  std::optional<double> selective_accuracy;
  std::optional<double> selective_risk;
  std::optional<double> positive_rate;
  long long accepted_count = 0;
  long long accepted_pos = 0;
  long long accepted_neg = 0;
};

inline void require_coverage_target(double c, const char* op) {
  if (!(c > 0.0 && c <= 1.0))
    throw invalid_coverage_error(std::string(op) + ": target coverage outside (0,1]");
}

inline SelectiveReport selective_report(const LabeledSample& s, const ScoreBandSelector& sel,
                                        double target_c, double threshold = 0.5) {
  require_coverage_target(target_c, "selective_report");
  SelectionSplit split = apply_selector(s, sel);
  const LabeledSample& acc = split.accepted;

  SelectiveReport rep;
  rep.coverage = split.coverage;
  rep.target_coverage = target_c;
  rep.violation = std::abs(rep.coverage - target_c);
  rep.accepted_count = static_cast<long long>(acc.n());
  rep.accepted_pos = static_cast<long long>(acc.n_pos());
  rep.accepted_neg = static_cast<long long>(acc.n_neg());
  if (acc.n() > 0) {
    long long correct = 0;
    for (std::size_t i = 0; i < acc.n(); ++i) {
      int pred = acc.scores()[i] > threshold ? 1 : 0;
      correct += pred == acc.labels()[i];
    }
    rep.selective_accuracy = static_cast<double>(correct) / static_cast<double>(acc.n());
    rep.selective_risk = 1.0 - *rep.selective_accuracy;
    rep.positive_rate = acc.p_pos();
    if (acc.has_both_classes()) rep.selective_auc = mann_whitney_auc(acc);
  }
  return rep;
}

}  // namespace aucross
