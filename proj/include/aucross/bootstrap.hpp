#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "selection.hpp"
#include "threading.hpp"

namespace aucross {

struct MetricSummary {
  double mean = 0.0;
  double stdev = 0.0;
  long long count = 0;
};

struct BootstrapSummary {
  long long resamples = 0;
  std::uint64_t seed = 0;
  double target_coverage = 1.0;
  MetricSummary coverage, selective_auc, selective_accuracy, selective_risk;
  long long auc_omitted = 0;
  double violation = 0.0;
};

namespace bootstrap_detail {

class Accumulator {
 public:
  void add(double v) {
    sum_ += v;
    sumsq_ += v * v;
    ++count_;
  }
  void add(const std::optional<double>& v) {
    if (v) add(*v);
  }
  MetricSummary summary() const {
    MetricSummary m;
    m.count = count_;
    if (count_ == 0) return m;
    double n = static_cast<double>(count_);
    m.mean = sum_ / n;
    double var = sumsq_ / n - m.mean * m.mean;
    m.stdev = var > 0.0 ? std::sqrt(var) : 0.0;
    return m;
  }

 private:
  double sum_ = 0.0, sumsq_ = 0.0;
  long long count_ = 0;
};

}  // namespace bootstrap_detail

// B with-replacement resamples of the scored test set, each reduced to a
// SelectiveReport. Standard deviations are population ones over the resamples
// that carry the metric, so B=1 reports zero spread. Resamples whose accepted
// region is one-class contribute no AUC entry; their number is reported.
// Resample b draws from the stream mix64(seed, b), so any thread count
// produces the same summary.
inline BootstrapSummary bootstrap_evaluate(const LabeledSample& test,
                                           const ScoreBandSelector& sel, double target_coverage,
                                           long long resamples = 1000, std::uint64_t seed = 0,
                                           int threads = 1) {
  require_coverage_target(target_coverage, "bootstrap_evaluate");
  test.require_nonempty("bootstrap_evaluate");
  if (resamples < 1) throw invalid_spec_error("bootstrap needs at least 1 resample");

  std::size_t n = test.n();
  std::vector<SelectiveReport> reports(static_cast<std::size_t>(resamples));
  parallel_chunks(reports.size(), static_cast<unsigned>(threads),
                  [&](std::size_t lo, std::size_t hi) {
                    std::vector<double> sc(n);
                    std::vector<int> lb(n);
                    for (std::size_t b = lo; b < hi; ++b) {
                      std::mt19937_64 g(mix64(seed, b));
                      for (std::size_t i = 0; i < n; ++i) {
                        auto k = static_cast<std::size_t>(g() % n);
                        sc[i] = test.scores()[k];
                        lb[i] = test.labels()[k];
                      }
                      reports[b] = selective_report(LabeledSample(sc, lb), sel, target_coverage);
                    }
                  });

  bootstrap_detail::Accumulator cov, auc, acc, risk;
  for (const auto& r : reports) {
    cov.add(r.coverage);
    auc.add(r.selective_auc);
    acc.add(r.selective_accuracy);
    risk.add(r.selective_risk);
  }
  BootstrapSummary out;
  out.resamples = resamples;
  out.seed = seed;
  out.target_coverage = target_coverage;
  out.coverage = cov.summary();
  out.selective_auc = auc.summary();
  out.selective_accuracy = acc.summary();
  out.selective_risk = risk.summary();
  out.auc_omitted = resamples - out.selective_auc.count;
  out.violation = std::abs(out.coverage.mean - target_coverage);
  return out;
}

}  // namespace aucross
