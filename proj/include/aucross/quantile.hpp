#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "errors.hpp"

namespace aucross {

// k-th smallest of m values with k = ceil(level * m). level <= 0 carries no
// order statistic and yields nullopt (callers substitute their sentinel);
// level > 1 yields the maximum. level * m is snapped to the nearest integer
// when within 1e-9 to absorb representation noise such as (1 - .7) * 10.
inline std::optional<double> empirical_quantile(std::vector<double> values, double level) {
  if (values.empty()) throw empty_input_error("empirical_quantile: no values");
  if (level <= 0.0) return std::nullopt;
  if (level > 1.0) level = 1.0;
  double x = level * static_cast<double>(values.size());
  double snapped = std::nearbyint(x);
  if (std::abs(x - snapped) < 1e-9 * std::max(1.0, std::abs(x))) x = snapped;
  auto k = static_cast<std::size_t>(std::ceil(x));
  k = std::max<std::size_t>(1, std::min(k, values.size()));
  std::nth_element(values.begin(), values.begin() + (k - 1), values.end());
  return values[k - 1];
}

// floor(x) after the same nearest-integer snap, for rank counts like n*(1-c)
// whose exact value is integral but whose double image may sit just below it.
inline long long snapped_floor(double x) {
  double snapped = std::nearbyint(x);
  if (std::abs(x - snapped) < 1e-9 * std::max(1.0, std::abs(x))) x = snapped;
  return static_cast<long long>(std::floor(x));
}

}  // namespace aucross
