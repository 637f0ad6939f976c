#include "yamabe/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "yamabe/cli/config.hpp"
#include "yamabe/cli/format.hpp"
#include "yamabe/diagnostics/bubble.hpp"
#include "yamabe/diagnostics/dichotomy.hpp"
#include "yamabe/diagnostics/monitors.hpp"
#include "yamabe/error.hpp"
#include "yamabe/flow/run.hpp"
#include "yamabe/variational/eigen.hpp"
#include "yamabe/variational/quotient.hpp"
#include "yamabe/variational/thresholds.hpp"

namespace yamabe::cli {

namespace fs = std::filesystem;
using nlohmann::json;
using std::numbers::pi;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError("cannot read '" + p.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Non-finite numbers are not valid JSON; spell them as strings.
json number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

fs::path output_dir(const ScenarioConfig& cfg, const CommonOptions& opts) {
  return fs::path(opts.output_dir.value_or(cfg.output.dir));
}

// Relative init paths are taken relative to the config file.
ScenarioConfig load_scenario(const std::string& path) {
  auto cfg = load_config(path);
  if (cfg.init.type == "file" && fs::path(cfg.init.path).is_relative()) {
    const auto resolved = fs::path(path).parent_path() / cfg.init.path;
    if (fs::exists(resolved)) cfg.init.path = resolved.string();
  }
  return cfg;
}

void apply_noise(std::vector<double>& v, double noise, std::uint64_t seed) {
  if (noise <= 0.0) return;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (double& x : v) x *= std::exp(noise * normal(rng));
}

json config_json(const ScenarioConfig& c) {
  return {
      {"model", {{"type", variational::to_string(c.model.type)}, {"a", c.model.a}, {"n", c.model.n}}},
      {"grid",
       {{"n_cells", c.grid.n_cells},
        {"grading", geometry::to_string(c.grid.grading)},
        {"ratio", c.grid.ratio}}},
      {"time",
       {{"t_end", c.time.t_end},
        {"safety", c.time.safety},
        {"renorm_every", c.time.renorm_every},
        {"snapshot_every", c.time.snapshot_every},
        {"volume_target", c.time.volume_target}}},
      {"init",
       {{"type", c.init.type},
        {"value", c.init.value ? json(*c.init.value) : json(nullptr)},
        {"path", c.init.path},
        {"noise", c.init.noise}}},
      {"diagnostics",
       {{"cutoffs", c.diagnostics.cutoffs}, {"f_p_exponents", c.diagnostics.f_p_exponents}}},
      {"output", {{"dir", c.output.dir}}},
  };
}

std::shared_ptr<const geometry::RadialGrid> make_grid(const ScenarioConfig& cfg) {
  return std::make_shared<const geometry::RadialGrid>(
      geometry::RadialGrid::build(cfg.grid.n_cells, cfg.grid.grading, cfg.grid.ratio));
}

flow::FlowState eh_initial_state(const ScenarioConfig& cfg, std::uint64_t seed) {
  const auto fc = cfg.flow_config();
  auto state = flow::initial_state(fc, make_grid(cfg));
  if (cfg.init.noise > 0.0) {
    auto v = state.v;
    apply_noise(v, cfg.init.noise, seed);
    state = flow::renormalize(flow::FlowState::make(state.grid, std::move(v), 0.0, fc.volume_target));
  }
  return state;
}

json state_summary(const flow::FlowState& s, std::span<const double> exponents, double a) {
  json fp = json::object();
  for (double p : exponents) fp[format_number(p)] = number(diagnostics::f_p(s, p));
  return {{"t", s.t},
          {"sigma_tilde", s.sigma_tilde},
          {"volume", s.volume()},
          {"unit_volume_sigma", diagnostics::unit_volume_sigma(s)},
          {"average_scalar_curvature", geometry::EguchiHansonModel(a).curvature_factor() * s.sigma_tilde},
          {"positive_curvature_l2_norm", diagnostics::positive_curvature_norm(s)},
          {"v_at_x1", flow::boundary_value(s)},
          {"green_identity_residual", diagnostics::green_identity_residual(s)},
          {"f_p", fp}};
}

void emit(const json& j, const fs::path& path, const CommonOptions& opts, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  atomic_write(path.string(), text);
  if (!opts.quiet) out << text;
}

}  // namespace

int configured_threads() {
  const char* env = std::getenv("SINGULAR_YAMABE_THREADS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 1 || n > 4096)
    throw InputError(std::string("SINGULAR_YAMABE_THREADS must be a positive integer, got '") + env +
                     "'");
  return static_cast<int>(n);
}

int guarded(const std::function<int()>& command, std::ostream& err) {
  try {
    return command();
  } catch (const PositivityLoss& e) {
    err << "error: " << e.what() << "\n";
    return exit_positivity_failure;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return exit_non_convergence;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_check_failed;
  }
}

int cmd_validate(double tolerance_scale, const CommonOptions& opts, std::ostream& out) {
  configured_threads();
  if (!(tolerance_scale >= 0.0)) throw InputError("--tolerance-scale must be nonnegative");
  const auto report = run_validation(tolerance_scale);
  const std::string text = to_json(report).dump(2) + "\n";
  if (opts.output_dir) atomic_write((fs::path(*opts.output_dir) / "validation.json").string(), text);
  if (!opts.quiet) out << text;
  return report.all_pass ? exit_ok : exit_check_failed;
}

int cmd_flow(const std::string& config_path, const CommonOptions& opts, std::ostream& out) {
  const int threads = configured_threads();
  const auto cfg = load_scenario(config_path);
  if (cfg.model.type != variational::QuotientModel::eguchi_hanson)
    throw InputError("flow is only defined for model.type = eguchi-hanson");
  const auto fc = cfg.flow_config();
  const auto initial = eh_initial_state(cfg, opts.seed);
  const auto result = flow::run(fc, initial);
  const auto dir = output_dir(cfg, opts);
  const auto& grid = *initial.grid;

  atomic_write((dir / "series.csv").string(), series_csv(result.records, fc.cutoffs));
  json snaps = json::array();
  for (const auto& s : result.snapshots) {
    const auto name = snapshot_name(s.t);
    atomic_write((dir / "snapshots" / name).string(), profile_csv(grid.centers(), s.v));
    snaps.push_back({{"t", s.t}, {"file", "snapshots/" + name}});
  }

  json report = {
      {"command", "flow"},
      {"status", result.failure ? "positivity_failure" : "ok"},
      {"config", config_json(cfg)},
      {"config_ini", dump_config(cfg)},
      {"grid",
       {{"n_cells", grid.size()},
        {"grading", geometry::to_string(grid.grading())},
        {"ratio", grid.ratio()},
        {"max_width", grid.max_width()}}},
      {"seed", opts.seed},
      {"threads", threads},
      {"steps", result.steps},
      {"stability_warnings", result.stability_warnings},
      {"snapshots", snaps},
      {"initial", state_summary(initial, cfg.diagnostics.f_p_exponents, cfg.model.a)},
      {"final", state_summary(result.final_state, cfg.diagnostics.f_p_exponents, cfg.model.a)},
  };
  if (result.failure)
    report["failure"] = {{"t", result.failure->t}, {"cell", result.failure->cell}, {"w", result.failure->w}};
  atomic_write((dir / "report.json").string(), report.dump(2) + "\n");

  if (!opts.quiet) {
    out << "flow: " << result.steps << " steps to t = " << format_number(result.final_state.t)
        << ", sigma_tilde " << format_number(initial.sigma_tilde) << " -> "
        << format_number(result.final_state.sigma_tilde) << ", artifacts in " << dir.string() << "\n";
    if (result.failure)
      out << "flow: positivity lost at t = " << format_number(result.failure->t) << " in cell "
          << result.failure->cell << "\n";
  }
  return result.failure ? exit_positivity_failure : exit_ok;
}

int cmd_yamabe(const std::string& config_path, const CommonOptions& opts, std::ostream& out) {
  const int threads = configured_threads();
  const auto cfg = load_scenario(config_path);
  variational::MinimizeOptions mo;
  mo.max_iterations = cfg.yamabe.max_iterations;
  mo.tolerance = cfg.yamabe.tolerance;

  json j = {{"command", "yamabe"}, {"config", config_json(cfg)}, {"seed", opts.seed}, {"threads", threads}};
  variational::QuotientResult res;
  std::vector<double> nodes;
  if (cfg.model.type == variational::QuotientModel::eguchi_hanson) {
    const auto grid = make_grid(cfg);
    std::vector<double> v;
    if (cfg.init.type == "file")
      v = flow::interpolate_profile(flow::load_profile(cfg.init.path), *grid);
    else
      v.assign(grid->size(), cfg.init.value.value_or(1.0));
    apply_noise(v, cfg.init.noise, opts.seed);
    const auto q = variational::eh_discrete_quotient(*grid);
    res = variational::minimize_quotient(q, v, mo);
    nodes.assign(grid->centers().begin(), grid->centers().end());
    const auto th = variational::Thresholds::eguchi_hanson();
    const double x0 = cfg.diagnostics.cutoffs.front();
    const auto frac = [&](std::span<const double> u) {
      return diagnostics::mass_fraction(flow::FlowState::make(grid, {u.begin(), u.end()}), x0);
    };
    j["reference"] = {{"quotient_of_constant", 16.0 * pi}, {"Y_local", th.Y_local}};
    const bool positive = std::all_of(res.minimizer.begin(), res.minimizer.end(),
                                      [](double x) { return x > 0.0; });
    if (positive && std::all_of(v.begin(), v.end(), [](double x) { return x > 0.0; }))
      j["mass_fraction_near_singular_point"] = {
          {"cutoff", x0}, {"initial", frac(v)}, {"final", frac(res.minimizer)}};
  } else {
    const geometry::SphereModel sphere(cfg.model.n, cfg.grid.n_cells);
    std::vector<double> v;
    if (cfg.init.type == "file") {
      const auto p = flow::load_profile(cfg.init.path);
      for (double th : sphere.nodes()) {
        auto it = std::lower_bound(p.x.begin(), p.x.end(), th);
        if (it == p.x.begin()) v.push_back(p.v.front());
        else if (it == p.x.end()) v.push_back(p.v.back());
        else {
          const auto k = static_cast<std::size_t>(it - p.x.begin());
          const double s = (th - p.x[k - 1]) / (p.x[k] - p.x[k - 1]);
          v.push_back((1.0 - s) * p.v[k - 1] + s * p.v[k]);
        }
      }
    } else {
      v.assign(sphere.size(), cfg.init.value.value_or(1.0));
    }
    apply_noise(v, cfg.init.noise, opts.seed);
    const auto q = variational::sphere_discrete_quotient(sphere);
    res = variational::minimize_quotient(q, v, mo);
    nodes.assign(sphere.nodes().begin(), sphere.nodes().end());
    j["reference"] = {{"Y_sphere", variational::sphere_yamabe_constant(cfg.model.n)}};
  }

  j["value"] = res.value;
  j["initial_value"] = res.initial_value;
  j["iterations"] = res.iterations;
  j["gradient_norm"] = res.gradient_norm;
  j["initial_gradient_norm"] = res.initial_gradient_norm;
  j["converged"] = res.converged;
  const auto dir = output_dir(cfg, opts);
  atomic_write((dir / "minimizer.csv").string(), profile_csv(nodes, res.minimizer));
  emit(j, dir / "yamabe.json", opts, out);
  return res.converged ? exit_ok : exit_non_convergence;
}

int cmd_eigen(const std::string& config_path, const CommonOptions& opts, std::ostream& out) {
  const int threads = configured_threads();
  const auto cfg = load_scenario(config_path);
  variational::EigenOptions eo;
  eo.max_iterations = cfg.eigen.max_iterations;
  eo.tolerance = cfg.eigen.tolerance;

  json j = {{"command", "eigen"}, {"config", config_json(cfg)}, {"seed", opts.seed}, {"threads", threads}};
  variational::EigenResult res;
  double sigma = 0.0;
  int n = 4;
  if (cfg.model.type == variational::QuotientModel::eguchi_hanson) {
    const auto state = eh_initial_state(cfg, opts.seed);
    res = variational::first_eigenvalue(state, cfg.model.a, eo);
    sigma = geometry::EguchiHansonModel(cfg.model.a).curvature_factor() * state.sigma_tilde;
  } else {
    n = cfg.model.n;
    const geometry::SphereModel sphere(n, cfg.grid.n_cells);
    std::vector<double> u(sphere.size(), cfg.init.value.value_or(1.0));
    if (cfg.init.type == "file") throw InputError("eigen on the sphere supports constant init only");
    apply_noise(u, cfg.init.noise, opts.seed);
    res = variational::first_eigenvalue(sphere, u, eo);
    const auto q = variational::sphere_discrete_quotient(sphere);
    double mass = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) mass += q.w[i] * std::pow(u[i], q.p);
    sigma = q.T.quadratic(u) / mass;
  }
  const double sigma_ref = cfg.eigen.sigma_inf.value_or(sigma);
  const auto crit = variational::eigen_criteria(res.lambda1, sigma_ref, n);
  j["lambda1"] = res.lambda1;
  j["residual"] = res.residual;
  j["iterations"] = res.iterations;
  j["average_scalar_curvature"] = sigma;
  j["sigma_inf"] = sigma_ref;
  j["critical_value"] = sigma_ref / (n - 1.0);
  j["criterion_flags"] = {{"uniqueness_criterion", crit.uniqueness_criterion},
                          {"no_concentration_criterion", crit.no_concentration_criterion}};
  emit(j, output_dir(cfg, opts) / "eigen.json", opts, out);
  return exit_ok;
}

int cmd_report(const std::string& run_dir, const CommonOptions& opts, std::ostream& out) {
  configured_threads();
  const fs::path dir(run_dir);
  if (!fs::exists(dir / "series.csv") || !fs::exists(dir / "report.json"))
    throw InputError("'" + run_dir + "' does not contain series.csv and report.json");
  const auto records = parse_series_csv(read_file(dir / "series.csv"));
  json run;
  try {
    run = json::parse(read_file(dir / "report.json"));
  } catch (const json::exception& e) {
    throw InputError(std::string("report.json: ") + e.what());
  }
  if (!run.contains("config_ini") || !run.contains("snapshots"))
    throw InputError("report.json lacks config_ini or snapshots");
  std::istringstream ini(run["config_ini"].get<std::string>());
  const auto cfg = parse_config(ini, (dir / "report.json").string());
  const auto grid = make_grid(cfg);
  const auto centers = grid->centers();

  std::vector<flow::FlowState> states;
  for (const auto& s : run["snapshots"]) {
    const auto file = dir / s.at("file").get<std::string>();
    if (!fs::exists(file)) throw InputError("missing snapshot '" + file.string() + "'");
    const auto p = flow::load_profile(file.string());
    if (p.x.size() != grid->size())
      throw InputError("snapshot '" + file.string() + "' does not match the configured grid");
    for (std::size_t i = 0; i < p.x.size(); ++i)
      if (std::abs(p.x[i] - centers[i]) > 1e-12 * std::max(1.0, std::abs(centers[i])))
        throw InputError("snapshot '" + file.string() + "' is not sampled at the grid centers");
    states.push_back(flow::FlowState::make(grid, p.v, s.at("t").get<double>(), cfg.time.volume_target));
  }
  if (states.empty()) throw InputError("no snapshots listed in report.json");

  const auto th = variational::Thresholds::eguchi_hanson();
  const auto& first = states.front();
  const auto& last = states.back();
  diagnostics::DichotomyInputs in;
  in.s0_plus_norm = diagnostics::positive_curvature_norm(first);
  in.sigma0 = diagnostics::unit_volume_sigma(first);
  in.sigma_inf = diagnostics::unit_volume_sigma(last);
  in.Y = th.Y;
  in.Y_local = th.Y_local;
  in.n = th.n;
  const double threshold = diagnostics::point_mass_threshold(in.sigma_inf, th.Y_local, th.n);
  const double base = cfg.diagnostics.cutoffs.front();
  for (const auto& s : states) in.flags.emplace_back(s.t, diagnostics::detect_concentration(s, base, threshold));
  const auto rep = diagnostics::assess_dichotomy(in);

  json history = json::array();
  for (const auto& h : rep.concentration_cutoff_history)
    history.push_back({{"t", h.t}, {"x0", h.x0}, {"fraction", h.fraction}});

  // sigma(0)^2 = pi^10 is a value quoted for this example that disagrees with
  // the closed-form oracle; both outcomes are reported.
  const double quoted_sigma0 = std::pow(pi, 5);
  json j = {
      {"command", "report"},
      {"run_dir", run_dir},
      {"dichotomy",
       {{"small_energy_ok", rep.small_energy_ok},
        {"low_average_ok", rep.low_average_ok},
        {"max_bubble_count", rep.max_bubble_count},
        {"concentration_detected", rep.concentration_detected},
        {"concentration_cutoff_history", history}}},
      {"inputs",
       {{"s0_plus_norm", in.s0_plus_norm},
        {"sigma0", in.sigma0},
        {"sigma_inf", in.sigma_inf},
        {"Y", in.Y},
        {"Y_local", in.Y_local},
        {"n", in.n},
        {"point_mass_threshold", threshold}}},
      {"notes",
       {{"sigma0_squared", in.sigma0 * in.sigma0},
        {"sigma0_squared_quoted", quoted_sigma0 * quoted_sigma0},
        {"low_average_ok_with_quoted_sigma0",
         diagnostics::low_average_test(quoted_sigma0, th.Y, th.Y_local, th.n)},
        {"comment",
         "sigma values are unit-volume averages of the real metric; the quoted value "
         "sigma(0)^2 = pi^10 disagrees with the closed form 256 pi^2 for the constant factor"}}},
  };

  json fp = json::object();
  for (double p : cfg.diagnostics.f_p_exponents) fp[format_number(p)] = number(diagnostics::f_p(last, p));
  j["final"] = {{"t", last.t}, {"sigma_tilde", last.sigma_tilde}, {"f_p", fp},
                {"green_identity_residual", diagnostics::green_identity_residual(last)}};
  const double lambda = diagnostics::curvature_l2(first);
  const auto sup = diagnostics::sup_bound_check(last, lambda);
  j["sup_bound"] = {{"Lambda", lambda},
                    {"C", sup.C},
                    {"max_bound_violation", sup.max_bound_violation},
                    {"max_monotonicity_violation", sup.max_monotonicity_violation}};
  j["decay_rate"] = records.size() >= 10 ? number(diagnostics::decay_rate_fit(records)) : json(nullptr);

  // Fitted on the last profile whether or not concentration was flagged; a
  // single exact bubble sits at the point-mass threshold itself.
  {
    const geometry::EguchiHansonModel model(cfg.model.a);
    try {
      const auto fit = diagnostics::bubble_fit(last, model);
      if (fit.window_end == last.v.size())
        throw DomainError("bubble_fit: v stays above half its maximum up to x = 1, no bubble");
      const double sigma_real = model.curvature_factor() * last.sigma_tilde;
      const double c_rigid = std::sqrt(th.n * (th.n - 1.0) / sigma_real);
      j["bubble_fit"] = {{"scale_eps_lambda", fit.scale_eps_lambda},
                         {"c_fit", fit.c_fit},
                         {"residual", fit.residual},
                         {"window", {fit.window_begin, fit.window_end}},
                         {"c_rigid", c_rigid},
                         {"c_ratio", fit.c_fit / c_rigid}};
    } catch (const DomainError& e) {
      j["bubble_fit"] = {{"error", e.what()}};
    }
  }

  emit(j, fs::path(opts.output_dir.value_or(run_dir)) / "dichotomy.json", opts, out);
  return exit_ok;
}

}  // namespace yamabe::cli
