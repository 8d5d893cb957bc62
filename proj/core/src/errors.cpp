#include "moddev/errors.hpp"

namespace moddev {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::non_positive_entry: return "non_positive_entry";
    case errc::not_normalized: return "not_normalized";
    case errc::alphabet_too_small: return "alphabet_too_small";
    case errc::alphabet_mismatch: return "alphabet_mismatch";
    case errc::identical_distributions: return "identical_distributions";
    case errc::domain_error: return "domain_error";
    case errc::parameter_out_of_range: return "parameter_out_of_range";
    case errc::non_positive_increment_bound: return "non_positive_increment_bound";
    case errc::threshold_crossing: return "threshold_crossing";
    case errc::fixed_threshold_out_of_range: return "fixed_threshold_out_of_range";
    case errc::invalid_log_probability: return "invalid_log_probability";
    case errc::budget_exceeded: return "budget_exceeded";
    case errc::threshold_outside_mean_range: return "threshold_outside_mean_range";
    case errc::degenerate_tilt: return "degenerate_tilt";
    case errc::config_error: return "config_error";
  }
  return "unknown";
}

Error::Error(errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(errc code, const std::string& message) { throw Error(code, message); }

}  // namespace moddev
