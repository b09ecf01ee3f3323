#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>

#include "dataset.hpp"
#include "errors.hpp"

namespace aucross {

// Two spherical Gaussians in the plane with a shared scale. The posterior
// P(y=1 | x) is logistic in x, so ground-truth Bayes scores are available in
// closed form, and so is the population AUC of the Bayes scorer.
struct SyntheticSpec {
  std::size_t n = 1000;
  double positive_rate = 0.5;
  std::array<double, 2> mean_pos{1.0, 1.0};
  std::array<double, 2> mean_neg{0.0, 0.0};
  double sigma = 1.0;
  std::uint64_t seed = 0;

  void validate() const {
    if (n == 0) throw invalid_spec_error("synthetic spec: n must be positive");
    if (!(positive_rate > 0.0 && positive_rate < 1.0))
      throw invalid_spec_error("synthetic spec: positive rate must lie strictly in (0,1)");
    if (!(sigma > 0.0)) throw invalid_spec_error("synthetic spec: sigma must be positive");
  }
};

inline Dataset generate_synthetic(const SyntheticSpec& spec) {
  spec.validate();
  std::mt19937_64 g(spec.seed);
  std::bernoulli_distribution label(spec.positive_rate);
  std::normal_distribution<double> noise(0.0, spec.sigma);
  Dataset out;
  out.n_rows = spec.n;
  out.n_cols = 2;
  out.x.reserve(2 * spec.n);
  out.y.reserve(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    int y = label(g) ? 1 : 0;
    const auto& mu = y == 1 ? spec.mean_pos : spec.mean_neg;
    out.x.push_back(mu[0] + noise(g));
    out.x.push_back(mu[1] + noise(g));
    out.y.push_back(y);
  }
  return out;
}

inline double bayes_score(const SyntheticSpec& spec, double x0, double x1) {
  double d_neg = (x0 - spec.mean_neg[0]) * (x0 - spec.mean_neg[0]) +
                 (x1 - spec.mean_neg[1]) * (x1 - spec.mean_neg[1]);
  double d_pos = (x0 - spec.mean_pos[0]) * (x0 - spec.mean_pos[0]) +
                 (x1 - spec.mean_pos[1]) * (x1 - spec.mean_pos[1]);
  double z = std::log(spec.positive_rate / (1.0 - spec.positive_rate)) +
             (d_neg - d_pos) / (2.0 * spec.sigma * spec.sigma);
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  double e = std::exp(z);
  return e / (1.0 + e);
}

inline std::vector<double> bayes_scores(const SyntheticSpec& spec, const Dataset& data) {
  std::vector<double> out;
  out.reserve(data.n_rows);
  for (std::size_t i = 0; i < data.n_rows; ++i)
    out.push_back(bayes_score(spec, data.at(i, 0), data.at(i, 1)));
  return out;
}

// Population AUC of the Bayes scorer: Phi(|mu_pos - mu_neg| / (sigma*sqrt(2))).
inline double theoretical_auc(const SyntheticSpec& spec) {
  double dx = spec.mean_pos[0] - spec.mean_neg[0];
  double dy = spec.mean_pos[1] - spec.mean_neg[1];
  double z = std::sqrt(dx * dx + dy * dy) / (spec.sigma * std::sqrt(2.0));
  return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

}  // namespace aucross
