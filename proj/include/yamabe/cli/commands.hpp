#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace yamabe::cli {

// Stable process exit codes.
enum ExitCode : int {
  exit_ok = 0,
  exit_check_failed = 1,
  exit_input_error = 2,
  exit_positivity_failure = 3,
  exit_non_convergence = 4,
};

struct CommonOptions {
  std::optional<std::string> output_dir;
  std::uint64_t seed = 0;
  bool quiet = false;
};

struct ValidationCheck {
  std::string name;
  double expected = 0.0;
  double computed = 0.0;
  double relative_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_pass = false;
  nlohmann::json notes;
};

// Closed-form checks of the model geometry and discretization. Every
// tolerance is multiplied by `tolerance_scale`.
ValidationReport run_validation(double tolerance_scale = 1.0);
nlohmann::json to_json(const ValidationReport& r);

// Value of SINGULAR_YAMABE_THREADS (1 when unset). Throws InputError unless
// it is a positive integer. Computation is sequential regardless.
int configured_threads();

int cmd_validate(double tolerance_scale, const CommonOptions& opts, std::ostream& out);
int cmd_flow(const std::string& config_path, const CommonOptions& opts, std::ostream& out);
int cmd_yamabe(const std::string& config_path, const CommonOptions& opts, std::ostream& out);
int cmd_eigen(const std::string& config_path, const CommonOptions& opts, std::ostream& out);
int cmd_report(const std::string& run_dir, const CommonOptions& opts, std::ostream& out);

// Runs a command, mapping exceptions to exit codes: InputError and
// DomainError -> 2, PositivityLoss -> 3, ConvergenceError -> 4, anything
// else -> 1. The message goes to `err`.
int guarded(const std::function<int()>& command, std::ostream& err);

}  // namespace yamabe::cli
