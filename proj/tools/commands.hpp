#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace thermoact::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kConfigError = 1,
  kSolverError = 2,
  kValidationBreach = 3,
};

struct SimulateArgs {
  std::optional<std::string> config_path;
  std::optional<double> voltage;
  std::optional<std::string> csv_path;
};

struct SweepArgs {
  std::optional<std::string> config_path;
  std::string parameter;
  double from = 0.0;  // display units
  double to = 0.0;
  int steps = 0;
  std::optional<std::string> csv_path;  // stdout when absent
  std::optional<std::string> svg_path;
};

struct OptimizeArgs {
  std::optional<std::string> config_path;
  std::optional<int> grid;
};

struct ValidateArgs {
  std::optional<std::string> config_path;
};

int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);
int cmd_optimize_ratio(const OptimizeArgs& args, std::ostream& out, std::ostream& err);
int cmd_validate(const ValidateArgs& args, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to one of the commands above.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thermoact::cli
