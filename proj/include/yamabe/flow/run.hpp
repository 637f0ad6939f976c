#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "yamabe/flow/state.hpp"

namespace yamabe::flow {

struct ConstantInit {
  // Empty means the constant with reduced volume equal to the target.
  std::optional<double> value;
};

struct FileInit {
  std::string path;
};

using InitialCondition = std::variant<ConstantInit, FileInit>;

struct FlowConfig {
  double t_end = 0.02;
  double safety = 0.4;
  int renorm_every = 20;
  double snapshot_every = 0.005;  // <= 0 keeps only the first and last profile
  double volume_target = default_volume_target;
  InitialCondition initial_condition = ConstantInit{};
  std::vector<double> cutoffs = {0.1};

  void validate() const;
};

struct TimeSeriesRecord {
  double t = 0.0;
  double sigma_tilde = 0.0;
  double volume = 0.0;
  double F2 = 0.0;
  double F3 = 0.0;
  double v_at_x1 = 0.0;
  std::vector<double> mass_fractions;  // aligned with FlowConfig::cutoffs
  double dt_used = 0.0;
};

struct Snapshot {
  double t = 0.0;
  ScalarField v;
};

struct RunFailure {
  double t = 0.0;
  std::size_t cell = 0;
  double w = 0.0;
};

struct RunResult {
  std::vector<TimeSeriesRecord> records;
  std::vector<Snapshot> snapshots;
  FlowState final_state;
  std::optional<RunFailure> failure;
  std::size_t steps = 0;
  std::size_t stability_warnings = 0;
};

// Two-column (x, v) profile; an optional header line is skipped.
struct Profile {
  std::vector<double> x;
  std::vector<double> v;
};
Profile load_profile(const std::string& path);

// Linear interpolation of a profile onto the grid cell centers, constant
// beyond the profile's ends.
ScalarField interpolate_profile(const Profile& p, const RadialGrid& grid);

// Initial state normalized to the configured volume target.
FlowState initial_state(const FlowConfig& config, std::shared_ptr<const RadialGrid> grid);

TimeSeriesRecord make_record(const FlowState& state, std::span<const double> cutoffs,
                             double dt_used);

// Integrates to t_end or until positivity is lost. On failure every record up
// to the last good state is kept and `failure` is set.
RunResult run(const FlowConfig& config, std::shared_ptr<const RadialGrid> grid);
RunResult run(const FlowConfig& config, const FlowState& initial);

// Same, calling `observer` with the state after every accepted step.
using StepObserver = std::function<void(const FlowState&)>;
RunResult run(const FlowConfig& config, const FlowState& initial, const StepObserver& observer);

}  // namespace yamabe::flow
