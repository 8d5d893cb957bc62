#pragma once

#include <stdexcept>
#include <string>

namespace moddev {

// Error taxonomy for the whole library. The CLI maps these onto exit codes
// (config/validation -> 2, budget -> 3), so every throw site picks the code
// that names the violated contract.
enum class errc {
  non_positive_entry,
  not_normalized,
  alphabet_too_small,
  alphabet_mismatch,
  identical_distributions,
  domain_error,
  parameter_out_of_range,
  non_positive_increment_bound,
  threshold_crossing,
  fixed_threshold_out_of_range,
  invalid_log_probability,
  budget_exceeded,
  threshold_outside_mean_range,
  degenerate_tilt,
  config_error,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message);
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& message);

}  // namespace moddev
