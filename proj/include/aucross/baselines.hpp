#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "cross_fit.hpp"
#include "quantile.hpp"

namespace aucross {

// Softmax confidence of a binary probability score.
inline double confidence(double score) { return std::max(score, 1.0 - score); }

inline std::vector<double> confidences(const std::vector<double>& scores) {
  std::vector<double> out;
  out.reserve(scores.size());
  for (double s : scores) out.push_back(confidence(s));
  return out;
}

// The (1-c) empirical quantile of held-out confidences. Empty when the level
// is not positive (c = 1), meaning accept everything.
inline std::optional<double> confidence_threshold(const std::vector<double>& scores,
                                                  double coverage) {
  require_coverage_target(coverage, "confidence_threshold");
  return empirical_quantile(confidences(scores), 1.0 - coverage);
}

// Accept iff confidence > theta, i.e. abstain on the score band [1-theta, theta].
inline ScoreBandSelector band_from_confidence_threshold(std::optional<double> theta) {
  if (!theta) return ScoreBandSelector::empty();
  return ScoreBandSelector::band(1.0 - *theta, *theta);
}

namespace baseline_detail {

struct HoldoutSplit {
  std::vector<std::size_t> train, validation;
};

inline HoldoutSplit holdout_split(std::size_t n, double validation_fraction, std::uint64_t seed) {
  if (!(validation_fraction > 0.0 && validation_fraction < 1.0))
    throw invalid_spec_error("validation fraction must lie in (0,1)");
  if (n < 2) throw degenerate_sample_error("holdout split needs at least 2 instances");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 g(mix64(seed, cross_detail::kValidationStream));
  std::shuffle(order.begin(), order.end(), g);
  auto m = static_cast<std::size_t>(std::llround(validation_fraction * static_cast<double>(n)));
  m = std::clamp<std::size_t>(m, 1, n - 1);
  HoldoutSplit split;
  split.validation.assign(order.begin(), order.begin() + m);
  split.train.assign(order.begin() + m, order.end());
  return split;
}

inline void require_both_classes_in(const Dataset& data, const std::vector<std::size_t>& rows,
                                    const char* what) {
  bool pos = false, neg = false;
  for (std::size_t r : rows) (data.y[r] == 1 ? pos : neg) = true;
  if (!pos || !neg) throw degenerate_sample_error(std::string(what) + " is one-class");
}

}  // namespace baseline_detail

// Confidence thresholding at the (1-c) quantile of a held-out validation set.
inline SelectiveClassifier fit_plug_in(const Dataset& data, const TrainerSpec& spec,
                                       double coverage, const FitOptions& opt = {}) {
  require_coverage_target(coverage, "fit_plug_in");
  data.validate("fit_plug_in");
  auto split = baseline_detail::holdout_split(data.n_rows, opt.validation_fraction, opt.seed);
  baseline_detail::require_both_classes_in(data, split.train, "plug-in training split");

  auto trainer = make_trainer(spec);
  auto scorer = trainer->fit(data, split.train);
  auto val_scores = scorer->score_rows(data, split.validation);
  auto theta = confidence_threshold(val_scores, coverage);

  SelectiveClassifier out;
  out.scorer = std::move(scorer);
  out.selector = band_from_confidence_threshold(theta);
  out.diagnostics.method = "plugin";
  out.diagnostics.target_coverage = coverage;
  out.diagnostics.seed = opt.seed;
  if (theta) {
    out.diagnostics.confidence_threshold = *theta;
    out.diagnostics.has_confidence_threshold = true;
  }
  out.diagnostics.calibration_scores = std::move(val_scores);
  return out;
}

// Rejection bounds estimated on the validation scores, then placed as a rank
// window of width floor(n_val*(1-c)) over those same scores.
inline SelectiveClassifier fit_plug_in_auc(const Dataset& data, const TrainerSpec& spec,
                                           double coverage, const FitOptions& opt = {}) {
  require_coverage_target(coverage, "fit_plug_in_auc");
  data.validate("fit_plug_in_auc");
  auto split = baseline_detail::holdout_split(data.n_rows, opt.validation_fraction, opt.seed);
  baseline_detail::require_both_classes_in(data, split.train, "plug-in training split");

  auto trainer = make_trainer(spec);
  auto scorer = trainer->fit(data, split.train);
  auto val_scores = scorer->score_rows(data, split.validation);
  std::vector<int> val_labels;
  val_labels.reserve(split.validation.size());
  for (std::size_t r : split.validation) val_labels.push_back(data.y[r]);
  LabeledSample validation(val_scores, std::move(val_labels));
  validation.require_both_classes("plug-in validation set");

  auto est = estimate_thetas_auc(validation);
  auto sorted = val_scores;
  std::sort(sorted.begin(), sorted.end());
  auto window = place_rank_window(sorted, est.theta_l, est.theta_u, coverage, opt.window_mode,
                                  opt.midpoint_mode);

  SelectiveClassifier out;
  out.scorer = std::move(scorer);
  out.selector = window.selector;
  out.diagnostics.method = "pluginauc";
  out.diagnostics.target_coverage = coverage;
  out.diagnostics.seed = opt.seed;
  out.diagnostics.has_thetas = true;
  out.diagnostics.thetas.full = est;
  out.diagnostics.thetas.subs = {est, est};
  out.diagnostics.thetas.theta_l_star = est.theta_l;
  out.diagnostics.thetas.theta_u_star = est.theta_u;
  out.diagnostics.window = window;
  out.diagnostics.calibration_scores = std::move(val_scores);
  return out;
}

// Cross-fitting variant of the plug-in rule: the confidence threshold is the
// (1-c) quantile of the out-of-fold confidences, combined with the two-way
// split quantiles exactly like the theta bounds.
inline SelectiveClassifier fit_scross(const Dataset& data, const TrainerSpec& spec,
                                      double coverage, const FitOptions& opt = {}) {
  require_coverage_target(coverage, "fit_scross");
  data.validate("fit_scross");
  auto trainer = make_trainer(spec);
  auto plan = make_fold_plan(data.y, opt.folds, opt.seed);
  auto oof = cross_fit_scores(data, *trainer, plan, opt.threads);

  auto z = confidences(oof.scores());
  auto [h1, h2] = cross_detail::two_way_split(z.size(), opt.split_mode, opt.seed);
  std::vector<double> z1, z2;
  for (std::size_t r : h1) z1.push_back(z[r]);
  for (std::size_t r : h2) z2.push_back(z[r]);

  double level = 1.0 - coverage;
  auto q_full = empirical_quantile(z, level);
  std::optional<double> theta;
  if (q_full) {
    auto q1 = empirical_quantile(z1, level);
    auto q2 = empirical_quantile(z2, level);
    theta = combine_quantiles(*q_full, *q1, *q2);
  }

  std::vector<std::size_t> all(data.n_rows);
  std::iota(all.begin(), all.end(), std::size_t{0});

  SelectiveClassifier out;
  out.scorer = trainer->fit(data, all);
  out.selector = band_from_confidence_threshold(theta);
  out.diagnostics.method = "scross";
  out.diagnostics.target_coverage = coverage;
  out.diagnostics.folds = opt.folds;
  out.diagnostics.seed = opt.seed;
  if (theta) {
    out.diagnostics.confidence_threshold = *theta;
    out.diagnostics.has_confidence_threshold = true;
  }
  out.diagnostics.calibration_scores = oof.scores();
  return out;
}

inline SelectiveClassifier fit_baseline(const std::string& method, const Dataset& data,
                                        const TrainerSpec& spec, double coverage,
                                        const FitOptions& opt = {}) {
  if (method == "plugin") return fit_plug_in(data, spec, coverage, opt);
  if (method == "pluginauc") return fit_plug_in_auc(data, spec, coverage, opt);
  if (method == "scross") return fit_scross(data, spec, coverage, opt);
  if (method == "aucross") return fit_aucross(data, spec, coverage, opt);
  throw invalid_spec_error("unknown method '" + method + "'");
}

}  // namespace aucross
