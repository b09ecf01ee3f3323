#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace aucross {

// Binary-labeled scores. Scores live in [0, 1], labels are 0 or 1.
// An empty sample is representable; operations that need data throw.
class LabeledSample {
 public:
  LabeledSample() = default;

  LabeledSample(std::vector<double> scores, std::vector<int> labels)
      : scores_(std::move(scores)), labels_(std::move(labels)) {
    if (scores_.size() != labels_.size())
      throw invalid_spec_error("LabeledSample: scores and labels differ in length");
    for (std::size_t i = 0; i < scores_.size(); ++i) {
      if (!(scores_[i] >= 0.0 && scores_[i] <= 1.0))
        throw invalid_spec_error("LabeledSample: score out of [0,1] at row " + std::to_string(i));
      if (labels_[i] != 0 && labels_[i] != 1)
        throw invalid_spec_error("LabeledSample: label not in {0,1} at row " + std::to_string(i));
      n_pos_ += labels_[i];
    }
  }

  std::size_t n() const { return scores_.size(); }
  std::size_t n_pos() const { return n_pos_; }
  std::size_t n_neg() const { return n() - n_pos_; }
  double p_pos() const { return static_cast<double>(n_pos()) / static_cast<double>(n()); }
  double p_neg() const { return static_cast<double>(n_neg()) / static_cast<double>(n()); }

  const std::vector<double>& scores() const { return scores_; }
  const std::vector<int>& labels() const { return labels_; }

  bool empty() const { return scores_.empty(); }
  bool has_both_classes() const { return n_pos() > 0 && n_neg() > 0; }

  void require_nonempty(const char* op) const {
    if (empty()) throw empty_input_error(std::string(op) + ": empty sample");
  }
  void require_both_classes(const char* op) const {
    require_nonempty(op);
    if (!has_both_classes())
      throw degenerate_sample_error(std::string(op) + ": sample holds a single class");
  }

 private:
  std::vector<double> scores_;
  std::vector<int> labels_;
  std::size_t n_pos_ = 0;
};

}  // namespace aucross
