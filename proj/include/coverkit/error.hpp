#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coverkit {

enum class ErrorCode {
  parse_error,
  validation_error,
  period_overflow,
  singular_matrix,
  division_by_zero,
  reducible_min_poly,
  index_out_of_range,
  not_in_spectrum,
  internal_invariant,
  cap_exceeded,
  coset_explosion,
  spec_violation,
  precondition,
};

// Stable machine-readable name, e.g. "period-overflow".
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coverkit
