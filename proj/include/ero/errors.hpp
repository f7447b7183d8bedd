#pragma once

#include <stdexcept>
#include <string>

namespace ero {

/// Failure classes, mapped to CLI exit codes:
/// usage -> 1, data -> 2, numeric -> 3.
enum class ErrorCategory { usage, data, numeric };

enum class ErrorCode {
  // usage
  unknown_preset,
  unknown_method,
  bad_argument,
  // data
  missing_column,
  non_finite_value,
  zero_range,
  empty_file,
  io_failure,
  malformed_line,
  unnormalized_quaternion,
  config_error,
  missing_ground_truth,
  bad_checkpoint,
  // numeric
  too_few_points,
  rank_deficient,
  degenerate_pair,
  shape_mismatch,
  empty_neighborhood,
  degenerate_matrix,
  degenerate_geometry,
  divergence_detected,
  non_finite_objective,
  segment_too_long,
  timestamp_mismatch,
  empty_input,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

  ErrorCategory category() const {
    switch (code_) {
      case ErrorCode::unknown_preset:
      case ErrorCode::unknown_method:
      case ErrorCode::bad_argument:
        return ErrorCategory::usage;
      case ErrorCode::missing_column:
      case ErrorCode::non_finite_value:
      case ErrorCode::zero_range:
      case ErrorCode::empty_file:
      case ErrorCode::io_failure:
      case ErrorCode::malformed_line:
      case ErrorCode::unnormalized_quaternion:
      case ErrorCode::config_error:
      case ErrorCode::missing_ground_truth:
      case ErrorCode::bad_checkpoint:
        return ErrorCategory::data;
      default:
        return ErrorCategory::numeric;
    }
  }

  int exit_code() const {
    switch (category()) {
      case ErrorCategory::usage: return 1;
      case ErrorCategory::data: return 2;
      case ErrorCategory::numeric: return 3;
    }
    return 3;
  }

 private:
  ErrorCode code_;
};

}  // namespace ero
