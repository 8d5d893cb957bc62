#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "moddev/errors.hpp"
#include "moddev/experiment.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

struct CommandArgs {
  std::string config_path;
  std::string out_path;
  bool linear = false;
};

void add_common_options(CLI::App& cmd, CommandArgs& args) {
  cmd.add_option("--config", args.config_path, "experiment config file (JSON)")
      ->required();
  cmd.add_option("--out", args.out_path,
                 "output path, overrides output.path from the config");
  cmd.add_flag("--linear", args.linear,
               "emit probabilities instead of log-probabilities where the column "
               "holds a log value");
}

std::int64_t budget_from_env(std::int64_t fallback) {
  const char* raw = std::getenv("MODDEV_BUDGET");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const long long value = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1) {
    moddev::fail(moddev::errc::config_error,
                 std::string("MODDEV_BUDGET must be a positive integer, got \"") + raw +
                     "\"");
  }
  return static_cast<std::int64_t>(value);
}

int run(moddev::Table (*command)(const moddev::ExperimentConfig&),
        const CommandArgs& args) {
  moddev::ExperimentConfig config = moddev::load_config(args.config_path);
  config.budget = budget_from_env(config.budget);
  if (!args.out_path.empty()) config.output.path = args.out_path;
  const moddev::Table table = command(config);
  moddev::write_output(table, config.output, args.linear);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"concentration bounds, exact error probabilities, and Monte Carlo "
               "estimates for the two-threshold LLR test"};
  app.require_subcommand(1);

  CommandArgs args;
  moddev::Table (*command)(const moddev::ExperimentConfig&) = nullptr;

  CLI::App* bounds = app.add_subcommand(
      "bounds", "concentration bounds on alpha1 along the n grid");
  add_common_options(*bounds, args);
  bounds->callback([&] { command = moddev::run_bounds; });

  CLI::App* exact = app.add_subcommand(
      "exact", "exact error probabilities from the type oracle");
  add_common_options(*exact, args);
  exact->callback([&] { command = moddev::run_exact; });

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte Carlo tail estimates with z-scores against the oracle");
  add_common_options(*simulate, args);
  simulate->callback([&] { command = moddev::run_simulate; });

  CLI::App* sweep = app.add_subcommand(
      "mdp-sweep", "scaled log alpha1 against its bound exponent and limits");
  add_common_options(*sweep, args);
  sweep->callback([&] { command = moddev::run_mdp_sweep; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    return run(command, args);
  } catch (const moddev::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == moddev::errc::budget_exceeded ? kExitBudget : kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
