#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <vector>

#include "dataset.hpp"
#include "quantile.hpp"
#include "selection.hpp"
#include "theta.hpp"
#include "threading.hpp"
#include "trainer.hpp"

namespace aucross {

// Stratified K-fold assignment. Per-class index lists are shuffled and dealt
// round robin, so per-fold positive counts differ by at most one.
struct FoldPlan {
  int folds = 0;
  std::vector<int> assignment;

  std::vector<std::size_t> rows_in(int fold) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < assignment.size(); ++i)
      if (assignment[i] == fold) out.push_back(i);
    return out;
  }

  std::vector<std::size_t> rows_not_in(int fold) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < assignment.size(); ++i)
      if (assignment[i] != fold) out.push_back(i);
    return out;
  }
};

namespace cross_detail {
// Distinct RNG streams per purpose, all derived from the master seed.
constexpr std::uint64_t kFoldStream = 11;
constexpr std::uint64_t kHalvesStream = 12;
constexpr std::uint64_t kValidationStream = 13;
}  // namespace cross_detail

inline FoldPlan make_fold_plan(const std::vector<int>& labels, int folds, std::uint64_t seed) {
  if (folds < 2) throw invalid_spec_error("fold count must be at least 2");
  if (static_cast<std::size_t>(folds) > labels.size())
    throw fold_degenerate_error("fold count " + std::to_string(folds) + " exceeds " +
                                std::to_string(labels.size()) + " instances");
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < labels.size(); ++i) (labels[i] == 1 ? pos : neg).push_back(i);
  std::mt19937_64 g(mix64(seed, cross_detail::kFoldStream));
  std::shuffle(pos.begin(), pos.end(), g);
  std::shuffle(neg.begin(), neg.end(), g);
  FoldPlan plan;
  plan.folds = folds;
  plan.assignment.assign(labels.size(), 0);
  for (std::size_t i = 0; i < pos.size(); ++i) plan.assignment[pos[i]] = static_cast<int>(i % folds);
  for (std::size_t i = 0; i < neg.size(); ++i) plan.assignment[neg[i]] = static_cast<int>(i % folds);
  return plan;
}

// Every instance gets exactly one score, produced by the model trained on the
// other folds. Output order matches input order.
inline LabeledSample cross_fit_scores(const Dataset& data, const Trainer& trainer,
                                      const FoldPlan& plan, int threads = 1) {
  data.validate("cross_fit_scores");
  for (int k = 0; k < plan.folds; ++k) {
    long long pos = 0, neg = 0;
    for (std::size_t i = 0; i < data.n_rows; ++i)
      if (plan.assignment[i] != k) (data.y[i] == 1 ? pos : neg)++;
    bool fold_empty = true;
    for (std::size_t i = 0; i < data.n_rows && fold_empty; ++i)
      if (plan.assignment[i] == k) fold_empty = false;
    if (!fold_empty && (pos == 0 || neg == 0))
      throw fold_degenerate_error("training complement of fold " + std::to_string(k) +
                                  " is one-class");
  }
  std::vector<double> oof(data.n_rows, 0.0);
  parallel_chunks(static_cast<std::size_t>(plan.folds), static_cast<unsigned>(threads),
                  [&](std::size_t lo, std::size_t hi) {
                    for (std::size_t k = lo; k < hi; ++k) {
                      auto test = plan.rows_in(static_cast<int>(k));
                      if (test.empty()) continue;
                      auto train = plan.rows_not_in(static_cast<int>(k));
                      auto scorer = trainer.fit(data, train);
                      auto scores = scorer->score_rows(data, test);
                      for (std::size_t i = 0; i < test.size(); ++i) oof[test[i]] = scores[i];
                    }
                  });
  return LabeledSample(std::move(oof), data.y);
}

enum class WindowMode { half_open_exact, paper_inclusive };
enum class MidpointMode { rank, literal };
enum class SplitMode { shuffled, sequential };

// Number of elements of the ascending-sorted array strictly below v, i.e. the
// insertion position that keeps the array sorted.
inline std::size_t insertion_rank(const std::vector<double>& sorted_scores, double v) {
  return static_cast<std::size_t>(
      std::lower_bound(sorted_scores.begin(), sorted_scores.end(), v) - sorted_scores.begin());
}

struct RankWindow {
  std::size_t mid = 0;
  std::size_t lo = 0;
  std::size_t hi = 0;
  long long rejected = 0;
  ScoreBandSelector selector = ScoreBandSelector::empty();
};

// Centers a rejection window of exactly floor(n*(1-c)) sorted ranks on the
// midpoint between the two combined bounds, shifting (never shrinking) it when
// it would run off either end. The realized selector is the inclusive band
// spanned by the rejected scores. paper_inclusive keeps the off-by-one window
// of the original formulation, which rejects one extra instance whenever the
// window is non-degenerate.
inline RankWindow place_rank_window(const std::vector<double>& sorted_scores, double theta_l_star,
                                    double theta_u_star, double coverage,
                                    WindowMode wmode = WindowMode::half_open_exact,
                                    MidpointMode mmode = MidpointMode::rank) {
  require_coverage_target(coverage, "place_rank_window");
  if (sorted_scores.empty()) throw empty_input_error("place_rank_window on empty score set");
  long long n = static_cast<long long>(sorted_scores.size());

  RankWindow w;
  if (mmode == MidpointMode::rank) {
    std::size_t rl = insertion_rank(sorted_scores, theta_l_star);
    std::size_t ru = insertion_rank(sorted_scores, theta_u_star);
    w.mid = (rl + ru) / 2;
  } else {
    long long m = snapped_floor(static_cast<double>(n) *
                                              (theta_u_star + theta_l_star) / 2.0);
    w.mid = static_cast<std::size_t>(std::clamp(m, 0ll, n));
  }

  long long r = snapped_floor(static_cast<double>(n) * (1.0 - coverage));
  if (r < 0) r = 0;
  if (r > n) r = n;
  if (wmode == WindowMode::paper_inclusive && r > 0 && r < n) ++r;
  if (r == 0) {
    w.lo = w.hi = std::min<std::size_t>(w.mid, static_cast<std::size_t>(n));
    return w;
  }

  long long lo = static_cast<long long>(w.mid) - (r + 1) / 2;
  long long hi = lo + r;
  if (lo < 0) {
    lo = 0;
    hi = r;
  }
  if (hi > n) {
    hi = n;
    lo = n - r;
  }
  w.lo = static_cast<std::size_t>(lo);
  w.hi = static_cast<std::size_t>(hi);
  w.rejected = r;
  w.selector = ScoreBandSelector::band(sorted_scores[w.lo], sorted_scores[w.hi - 1]);
  return w;
}

struct FitOptions {
  int folds = 5;
  std::uint64_t seed = 0;
  int threads = 1;
  WindowMode window_mode = WindowMode::half_open_exact;
  MidpointMode midpoint_mode = MidpointMode::rank;
  SplitMode split_mode = SplitMode::shuffled;
  double validation_fraction = 0.1;
  LogisticOptions logistic;
};

struct FitDiagnostics {
  std::string method;
  double target_coverage = 1.0;
  int folds = 0;
  std::uint64_t seed = 0;
  bool has_thetas = false;
  CombinedTheta thetas;
  double confidence_threshold = 0.0;
  bool has_confidence_threshold = false;
  RankWindow window;
  std::vector<double> calibration_scores;
};

// A fitted scorer plus the score band it abstains on.
struct SelectiveClassifier {
  std::shared_ptr<const Scorer> scorer;
  ScoreBandSelector selector;
  FitDiagnostics diagnostics;

  std::vector<double> score(const Dataset& data) const {
    std::vector<std::size_t> rows(data.n_rows);
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    return scorer->score_rows(data, rows);
  }

  SelectiveReport report(const Dataset& test, double prediction_threshold = 0.5) const {
    LabeledSample scored(score(test), test.y);
    return selective_report(scored, selector, diagnostics.target_coverage, prediction_threshold);
  }
};

namespace cross_detail {

inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> two_way_split(
    std::size_t n, SplitMode mode, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (mode == SplitMode::shuffled) {
    std::mt19937_64 g(mix64(seed, kHalvesStream));
    std::shuffle(order.begin(), order.end(), g);
  }
  std::size_t half = (n + 1) / 2;
  return {{order.begin(), order.begin() + half}, {order.begin() + half, order.end()}};
}

inline LabeledSample subsample(const LabeledSample& s, const std::vector<std::size_t>& rows) {
  std::vector<double> sc;
  std::vector<int> lb;
  sc.reserve(rows.size());
  lb.reserve(rows.size());
  for (std::size_t r : rows) {
    sc.push_back(s.scores()[r]);
    lb.push_back(s.labels()[r]);
  }
  return LabeledSample(std::move(sc), std::move(lb));
}

struct CrossFitCore {
  LabeledSample oof;
  std::vector<double> sorted_scores;
  CombinedTheta thetas;
  std::shared_ptr<const Scorer> final_scorer;
};

inline CrossFitCore run_cross_fit_core(const Dataset& data, const TrainerSpec& spec,
                                       const FitOptions& opt) {
  auto trainer = make_trainer(spec);
  auto plan = make_fold_plan(data.y, opt.folds, opt.seed);
  CrossFitCore core{cross_fit_scores(data, *trainer, plan, opt.threads), {}, {}, nullptr};
  core.oof.require_both_classes("cross-fit bound estimation");

  auto full = estimate_thetas_auc(core.oof);
  auto [h1, h2] = two_way_split(core.oof.n(), opt.split_mode, opt.seed);
  auto s1 = subsample(core.oof, h1);
  auto s2 = subsample(core.oof, h2);
  s1.require_both_classes("first half of the two-way split");
  s2.require_both_classes("second half of the two-way split");
  core.thetas = combine_thetas(full, estimate_thetas_auc(s1), estimate_thetas_auc(s2));

  core.sorted_scores = core.oof.scores();
  std::sort(core.sorted_scores.begin(), core.sorted_scores.end());

  std::vector<std::size_t> all(data.n_rows);
  std::iota(all.begin(), all.end(), std::size_t{0});
  core.final_scorer = trainer->fit(data, all);
  return core;
}

inline SelectiveClassifier classifier_from_core(const CrossFitCore& core, double coverage,
                                                const FitOptions& opt) {
  require_coverage_target(coverage, "fit_aucross");
  auto window = place_rank_window(core.sorted_scores, core.thetas.theta_l_star,
                                  core.thetas.theta_u_star, coverage, opt.window_mode,
                                  opt.midpoint_mode);
  SelectiveClassifier out;
  out.scorer = core.final_scorer;
  out.selector = window.selector;
  out.diagnostics.method = "aucross";
  out.diagnostics.target_coverage = coverage;
  out.diagnostics.folds = opt.folds;
  out.diagnostics.seed = opt.seed;
  out.diagnostics.has_thetas = true;
  out.diagnostics.thetas = core.thetas;
  out.diagnostics.window = window;
  out.diagnostics.calibration_scores = core.oof.scores();
  return out;
}

}  // namespace cross_detail

// The induction pipeline: cross-fit scores, bound estimation on the full score
// sample and on a 2-way split, quantile combination, coverage-constrained
// window placement, then a final refit on all rows.
inline SelectiveClassifier fit_aucross(const Dataset& data, const TrainerSpec& spec,
                                       double coverage, const FitOptions& opt = {}) {
  require_coverage_target(coverage, "fit_aucross");
  auto core = cross_detail::run_cross_fit_core(data, spec, opt);
  return cross_detail::classifier_from_core(core, coverage, opt);
}

// One classifier per target coverage, sharing a single cross-fit run and a
// single final refit.
inline std::vector<SelectiveClassifier> fit_aucross_grid(const Dataset& data,
                                                         const TrainerSpec& spec,
                                                         const std::vector<double>& coverages,
                                                         const FitOptions& opt = {}) {
  for (double c : coverages) require_coverage_target(c, "fit_aucross_grid");
  auto core = cross_detail::run_cross_fit_core(data, spec, opt);
  std::vector<SelectiveClassifier> out;
  out.reserve(coverages.size());
  for (double c : coverages) out.push_back(cross_detail::classifier_from_core(core, c, opt));
  return out;
}

}  // namespace aucross
