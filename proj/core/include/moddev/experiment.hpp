#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "moddev/exact_oracle.hpp"
#include "moddev/hypotest.hpp"
#include "moddev/montecarlo.hpp"
#include "moddev/pmf.hpp"

namespace moddev {

enum class OutputFormat { Csv, Json };

struct OutputSpec {
  OutputFormat format = OutputFormat::Csv;
  std::string path;  // empty writes to stdout
};

/// Parsed experiment description. Nested invariants are enforced by the
/// owning types (Pmf, policies, McConfig) when the commands run.
struct ExperimentConfig {
  HypothesisPair hypothesis;
  ThresholdPolicy policy;
  std::vector<std::int64_t> n_grid;
  std::optional<McConfig> mc;
  OutputSpec output;
  std::int64_t budget = kDefaultTypeBudget;
};

/// Parses the versioned JSON config document (schema 1). Unknown keys at any
/// level are rejected. Throws Error{errc::config_error} with a message naming
/// the offending key or field.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

/// One table value; monostate renders as an empty CSV field / JSON null.
using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

/// Column-ordered result set. log_probability marks columns holding ln p
/// values, the only ones --linear exponentiates.
struct Table {
  std::vector<std::string> columns;
  std::vector<bool> log_probability;
  std::vector<std::vector<Cell>> rows;
};

/// Concentration bounds along n_grid. Moderate policies emit the full column
/// set; Fixed policies drop the schedule-dependent columns (expanded,
/// validity, scaled_bound_exp, limit_exp).
Table run_bounds(const ExperimentConfig& config);

/// Exact log-probabilities from the type oracle plus the one-sided refined
/// bound on alpha1 and its domination flag.
Table run_exact(const ExperimentConfig& config);

/// Monte Carlo estimates of the four tails with per-tail standard errors,
/// effective sample sizes, and z-scores against the exact oracle. When the
/// oracle budget is exceeded at some n the z columns are empty there.
Table run_simulate(const ExperimentConfig& config);

/// Moderate-deviations convergence study: exact alpha1, the scaled quantity
/// n^(1-2 eta) ln alpha1, the matching scaled bound exponent, and the two
/// candidate limits.
Table run_mdp_sweep(const ExperimentConfig& config);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

std::string render_csv(const Table& table, bool linear);
std::string render_json(const Table& table, bool linear);

/// Renders to output.path or stdout when the path is empty.
void write_output(const Table& table, const OutputSpec& output, bool linear);

}  // namespace moddev
