#pragma once

#include <stdexcept>

namespace aucross {

// Error taxonomy. validation_error marks caller mistakes (CLI exit 2),
// data_error marks inputs that turn out degenerate while computing (CLI exit 3).
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct validation_error : error {
  using error::error;
};
struct data_error : error {
  using error::error;
};

// caller mistakes
struct invalid_spec_error : validation_error {
  using validation_error::validation_error;
};
struct invalid_coverage_error : validation_error {
  using validation_error::validation_error;
};
struct parse_error : validation_error {
  using validation_error::validation_error;
};
struct wrong_class_error : validation_error {
  using validation_error::validation_error;
};

// degenerate data
struct empty_input_error : data_error {
  using data_error::data_error;
};
struct degenerate_sample_error : data_error {
  using data_error::data_error;
};
struct fold_degenerate_error : data_error {
  using data_error::data_error;
};
struct underflow_error : data_error {
  using data_error::data_error;
};
struct trainer_failure_error : data_error {
  using data_error::data_error;
};

}  // namespace aucross
