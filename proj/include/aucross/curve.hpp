#pragma once

#include <optional>
#include <vector>

#include "selection.hpp"

namespace aucross {

// One point of a risk-coverage curve. Coverage is the realized one; methods
// can and do miss their targets.
struct CurveRow {
  double target_coverage = 1.0;
  double coverage = 1.0;
  std::optional<double> selective_risk;
  std::optional<double> selective_auc;
};

struct TargetedSelector {
  double target_coverage = 1.0;
  ScoreBandSelector selector;
};

inline std::vector<CurveRow> risk_coverage_curve(const LabeledSample& sample,
                                                 const std::vector<TargetedSelector>& selectors) {
  for (std::size_t i = 1; i < selectors.size(); ++i)
    if (selectors[i].target_coverage > selectors[i - 1].target_coverage)
      throw invalid_spec_error("curve selectors must be ordered by descending target coverage");
  std::vector<CurveRow> rows;
  rows.reserve(selectors.size());
  for (const auto& ts : selectors) {
    auto rep = selective_report(sample, ts.selector, ts.target_coverage);
    CurveRow row;
    row.target_coverage = ts.target_coverage;
    row.coverage = rep.coverage;
    row.selective_risk = rep.selective_risk;
    row.selective_auc = rep.selective_auc;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace aucross
