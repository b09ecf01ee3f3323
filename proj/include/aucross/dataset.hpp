#pragma once

#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "sample.hpp"

namespace aucross {

// Row-major feature matrix with binary labels. n_cols may be zero for
// score-level work where a precomputed scorer supplies the probabilities.
struct Dataset {
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::vector<double> x;  // n_rows * n_cols
  std::vector<int> y;     // n_rows

  double at(std::size_t row, std::size_t col) const { return x[row * n_cols + col]; }

  void validate(const char* op) const {
    if (y.size() != n_rows || x.size() != n_rows * n_cols)
      throw invalid_spec_error(std::string(op) + ": dataset shape mismatch");
    for (int v : y)
      if (v != 0 && v != 1) throw invalid_spec_error(std::string(op) + ": label not in {0,1}");
  }

  std::size_t count_pos() const {
    std::size_t k = 0;
    for (int v : y) k += v;
    return k;
  }
};

inline Dataset dataset_from_labels(std::vector<int> labels) {
  Dataset d;
  d.n_rows = labels.size();
  d.n_cols = 0;
  d.y = std::move(labels);
  return d;
}

inline LabeledSample sample_from_scores(const std::vector<double>& scores, const Dataset& d) {
  return LabeledSample(scores, d.y);
}

}  // namespace aucross
