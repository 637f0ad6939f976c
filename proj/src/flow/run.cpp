#include "yamabe/flow/run.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "yamabe/diagnostics/monitors.hpp"
#include "yamabe/error.hpp"

namespace yamabe::flow {

void FlowConfig::validate() const {
  if (!(t_end > 0.0) || !std::isfinite(t_end)) throw InputError("t_end must be positive");
  if (!(safety > 0.0 && safety < 1.0)) throw InputError("safety must lie in (0,1)");
  if (renorm_every < 1) throw InputError("renorm_every must be >= 1");
  if (!std::isfinite(snapshot_every)) throw InputError("snapshot_every must be finite");
  if (!(volume_target > 0.0)) throw InputError("volume_target must be positive");
  for (double c : cutoffs)
    if (!(c > 0.0 && c <= 1.0)) throw InputError("cutoffs must lie in (0,1]");
  if (const auto* c = std::get_if<ConstantInit>(&initial_condition))
    if (c->value && !(*c->value > 0.0)) throw InputError("constant initial value must be positive");
}

Profile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open profile '" + path + "'");
  Profile p;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    double x = 0.0, v = 0.0;
    if (!(ss >> x >> v)) {
      if (lineno == 1) continue;  // header
      throw InputError(path + ":" + std::to_string(lineno) + ": expected two numbers");
    }
    if (!p.x.empty() && !(x > p.x.back()))
      throw InputError(path + ":" + std::to_string(lineno) + ": x must be strictly increasing");
    if (!(v > 0.0) || !std::isfinite(v))
      throw InputError(path + ":" + std::to_string(lineno) + ": v must be positive");
    p.x.push_back(x);
    p.v.push_back(v);
  }
  if (p.x.size() < 2) throw InputError(path + ": profile needs at least two rows");
  return p;
}

ScalarField interpolate_profile(const Profile& p, const RadialGrid& grid) {
  const auto xs = grid.centers();
  ScalarField out(grid.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    auto it = std::lower_bound(p.x.begin(), p.x.end(), x);
    if (it == p.x.begin()) {
      out[i] = p.v.front();
    } else if (it == p.x.end()) {
      out[i] = p.v.back();
    } else {
      const std::size_t k = static_cast<std::size_t>(it - p.x.begin());
      if (p.x[k] == x) {
        out[i] = p.v[k];
      } else {
        const double s = (x - p.x[k - 1]) / (p.x[k] - p.x[k - 1]);
        out[i] = (1.0 - s) * p.v[k - 1] + s * p.v[k];
      }
    }
  }
  return out;
}

FlowState initial_state(const FlowConfig& config, std::shared_ptr<const RadialGrid> grid) {
  ScalarField v;
  if (const auto* c = std::get_if<ConstantInit>(&config.initial_condition)) {
    v.assign(grid->size(), c->value.value_or(normalized_constant(config.volume_target)));
  } else {
    v = interpolate_profile(load_profile(std::get<FileInit>(config.initial_condition).path),
                            *grid);
  }
  auto state = FlowState::make(std::move(grid), std::move(v), 0.0, config.volume_target);
  if (!(state.volume() > 0.0)) throw InputError("initial volume is zero");
  return renormalize(state);
}

TimeSeriesRecord make_record(const FlowState& state, std::span<const double> cutoffs,
                             double dt_used) {
  TimeSeriesRecord r;
  r.t = state.t;
  r.sigma_tilde = state.sigma_tilde;
  r.volume = state.volume();
  r.F2 = diagnostics::f_p(state, 2.0);
  r.F3 = diagnostics::f_p(state, 3.0);
  r.v_at_x1 = boundary_value(state);
  r.mass_fractions = diagnostics::concentration_monitor(state, cutoffs);
  r.dt_used = dt_used;
  return r;
}

RunResult run(const FlowConfig& config, std::shared_ptr<const RadialGrid> grid) {
  config.validate();
  return run(config, initial_state(config, std::move(grid)));
}

RunResult run(const FlowConfig& config, const FlowState& initial) {
  return run(config, initial, StepObserver{});
}

RunResult run(const FlowConfig& config, const FlowState& initial, const StepObserver& observer) {
  config.validate();
  RunResult out;
  out.final_state = initial;
  FlowState& state = out.final_state;

  out.records.push_back(make_record(state, config.cutoffs, 0.0));
  out.snapshots.push_back({state.t, state.v});

  const double t_end = config.t_end;
  const double t_eps = 1e-12 * t_end;
  const bool periodic_snapshots = config.snapshot_every > 0.0;
  double next_snapshot = periodic_snapshots ? config.snapshot_every : t_end;

  while (state.t < t_end - t_eps) {
    double dt = std::min(stable_dt(state, config.safety), t_end - state.t);
    if (periodic_snapshots) dt = std::min(dt, next_snapshot - state.t);

    StepInfo info;
    try {
      state = step(state, dt, &info);
    } catch (const PositivityLoss& e) {
      out.failure = RunFailure{state.t, e.cell(), e.value()};
      break;
    }
    ++out.steps;
    if (info.above_stability_limit) ++out.stability_warnings;
    if (out.steps % static_cast<std::size_t>(config.renorm_every) == 0) state = renormalize(state);

    out.records.push_back(make_record(state, config.cutoffs, dt));
    if (observer) observer(state);

    if (periodic_snapshots && state.t >= next_snapshot - t_eps) {
      out.snapshots.push_back({state.t, state.v});
      while (next_snapshot <= state.t + t_eps) next_snapshot += config.snapshot_every;
    }
  }

  if (out.snapshots.back().t < state.t) out.snapshots.push_back({state.t, state.v});
  return out;
}

}  // namespace yamabe::flow
