// Acceptance runner: one [PASS]/[FAIL] line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "support/bubble.hpp"
#include "support/oracles.hpp"
#include "yamabe/diagnostics/bubble.hpp"
#include "yamabe/diagnostics/monitors.hpp"
#include "yamabe/flow/run.hpp"
#include "yamabe/geometry/eguchi_hanson.hpp"
#include "yamabe/geometry/reduced.hpp"
#include "yamabe/geometry/sphere.hpp"
#include "yamabe/variational/quotient.hpp"
#include "yamabe/variational/thresholds.hpp"

using namespace yamabe;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double rel(double a, double b) { return std::abs(a / b - 1.0); }

using Grid = std::shared_ptr<const geometry::RadialGrid>;
Grid make_grid(std::size_t n, geometry::Grading g = geometry::Grading::uniform, double ratio = 0.97) {
  return std::make_shared<const geometry::RadialGrid>(geometry::RadialGrid::build(n, g, ratio));
}

Outcome closed_form_suite() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const geometry::EguchiHansonModel eh(1.0);

  const double vol_err = rel(eh.volume_by_quadrature(), pi * pi / 4);
  o.require(vol_err <= 1e-8, "volume " + fmt("%.2e", vol_err));

  double worst_energy = 0.0;
  for (double a : {0.5, 1.0, 2.0})
    worst_energy = std::max(worst_energy, rel(geometry::EguchiHansonModel(a).scalar_l2_energy(), 288 * pi * pi));
  o.require(worst_energy <= 1e-6, "L2 energy " + fmt("%.2e", worst_energy));

  o.require(eh.scalar_curvature(0.0) == 48.0, "S(0) = 48");

  const double dist_err = rel(eh.distance_to_infinity(), testing_support::distance_beta_oracle(1.0));
  o.require(dist_err <= 1e-8, "distance " + fmt("%.2e", dist_err));

  const auto one = [](double) { return 1.0; };
  const auto zero = [](double) { return 0.0; };
  const double q4 = rel(variational::yamabe_quotient_sphere(one, zero, 4), 8 * std::sqrt(6.0) * pi);
  const double q3 = rel(variational::yamabe_quotient_sphere(one, zero, 3), 6 * std::pow(2 * pi * pi, 2.0 / 3.0));
  const geometry::SphereModel s512(4, 512);
  const double q4h = rel(variational::sphere_discrete_quotient(s512).value(std::vector<double>(512, 1.0)),
                         8 * std::sqrt(6.0) * pi);
  o.require(q4 <= 1e-6 && q3 <= 1e-6 && q4h <= 1e-6,
            "sphere quotients " + fmt("%.2e", q4) + " " + fmt("%.2e", q3) + " " + fmt("%.2e", q4h));

  const auto th = variational::Thresholds::eguchi_hanson();
  o.require(rel(th.Y_local, 8 * std::sqrt(3.0) * pi) <= 1e-15, "Y_local = 8 sqrt3 pi");
  const double s_plus = std::sqrt(eh.scalar_l2_energy());
  o.require(12 * std::sqrt(2.0) * pi > th.Y_local, "12 sqrt2 pi > Y_local");
  o.require(!diagnostics::small_energy_test(s_plus, th.Y_local), "small_energy_test = false");
  // discrete counterpart on a 512-cell grid
  const auto flat = flow::FlowState::make(make_grid(512), std::vector<double>(512, std::sqrt(2.0)));
  o.require(!diagnostics::small_energy_test(diagnostics::positive_curvature_norm(flat), th.Y_local),
            "discrete small_energy_test = false");

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 10.0, "runtime " + fmt("%.2f s", secs));
  o.note("max rel err " + fmt("%.1e", std::max({vol_err, worst_energy, dist_err, q4, q3, q4h})) +
         ", " + fmt("%.3f s", secs));
  return o;
}

Outcome flow_suite() {
  Outcome o;
  flow::FlowConfig cfg;
  cfg.t_end = 0.02;
  cfg.cutoffs = {0.1};
  const auto grid = make_grid(256);
  const auto initial = flow::initial_state(cfg, grid);
  const double dx2 = grid->max_width() * grid->max_width();

  double worst_increase = -1e300, worst_volume = 0.0, min_s = 1e300, min_jump = 1e300;
  double prev_sigma = initial.sigma_tilde;
  const auto check_state = [&](const flow::FlowState& s) {
    worst_volume = std::max(worst_volume, rel(s.volume(), cfg.volume_target));
    const auto sc = geometry::scalar_from_v(*s.grid, s.v);
    min_s = std::min(min_s, *std::min_element(sc.begin(), sc.end()));
    const auto jumps = geometry::xv_jumps(*s.grid, s.v);
    min_jump = std::min(min_jump, *std::min_element(jumps.begin(), jumps.end()));
  };
  check_state(initial);
  const double s0_min = min_s;
  const auto res = flow::run(cfg, initial, [&](const flow::FlowState& s) {
    worst_increase = std::max(worst_increase, s.sigma_tilde - prev_sigma);
    prev_sigma = s.sigma_tilde;
    check_state(s);
  });

  o.require(!res.failure, "positivity");
  o.require(s0_min >= 0.0, "initial S~ >= 0");
  o.require(worst_increase <= 1e-9, "sigma~ increase " + fmt("%.2e", worst_increase));
  o.require(worst_volume <= 1e-6, "volume drift " + fmt("%.2e", worst_volume));
  o.require(min_s >= -10.0 * dx2, "min S~ " + fmt("%.2e", min_s));
  const double jump_tol = 1e-12;
  o.require(min_jump >= -jump_tol, "min delta(xv) " + fmt("%.2e", min_jump));

  const auto& recs = res.records;
  const double m0 = recs.front().mass_fractions[0], m1 = recs.back().mass_fractions[0];
  o.require(m1 > m0, "mass fraction " + fmt("%.5f", m0) + " -> " + fmt("%.5f", m1));
  const std::size_t tenth = std::max<std::size_t>(1, recs.size() / 10);
  double first = 0.0, last = 0.0;
  for (std::size_t k = 0; k < tenth; ++k) {
    first += recs[k].F2 / tenth;
    last += recs[recs.size() - 1 - k].F2 / tenth;
  }
  o.require(last < first, "F2 trend " + fmt("%.5f", first) + " -> " + fmt("%.5f", last));
  o.note(std::to_string(res.steps) + " steps, max dsigma~ " + fmt("%.1e", worst_increase) +
         ", vol drift " + fmt("%.1e", worst_volume) + ", min S~ " + fmt("%.2e", min_s) +
         ", mass_frac_0.1 " + fmt("%.5f", m0) + "->" + fmt("%.5f", m1) + ", F2 " + fmt("%.5f", first) +
         "->" + fmt("%.5f", last));
  return o;
}

Outcome order_suite() {
  Outcome o;
  std::vector<double> s_err, g_res;
  for (std::size_t n : {64u, 128u, 256u, 512u}) {
    const auto g = make_grid(n);
    const std::vector<double> v(n, std::sqrt(2.0));
    const auto s = geometry::scalar_from_v(*g, v);
    double e = 0.0;
    for (std::size_t i = 0; i < n; ++i) e += g->weights()[i] * std::abs(s[i] - g->centers()[i]);
    s_err.push_back(e);
    g_res.push_back(diagnostics::green_identity_residual(flow::FlowState::make(g, v)));
  }
  const auto sr = testing_support::observed_ratios(s_err);
  const auto gr = testing_support::observed_ratios(g_res);
  const double s_min = *std::min_element(sr.begin(), sr.end());
  const double g_min = *std::min_element(gr.begin(), gr.end());
  o.require(s_min >= 3.5, "S~ ratio " + fmt("%.3f", s_min));
  o.require(g_min >= 2.0, "Green ratio " + fmt("%.3f", g_min));
  o.note("min S~ error ratio " + fmt("%.3f", s_min) + ", min Green residual ratio " + fmt("%.3f", g_min));
  return o;
}

Outcome diagnostics_suite() {
  Outcome o;
  const geometry::EguchiHansonModel m(1.0);
  const auto g = make_grid(512, geometry::Grading::geometric, 0.97);

  const auto exact = diagnostics::bubble_fit(testing_support::bubble_state(g, m, 0.05, 2.0), m);
  const double e_le = rel(exact.scale_eps_lambda, 0.05), e_c = rel(exact.c_fit, 2.0);
  o.require(e_le <= 1e-8 && e_c <= 1e-8, "exact bubble " + fmt("%.1e", e_le) + " " + fmt("%.1e", e_c));

  double worst = 0.0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto fit = diagnostics::bubble_fit(testing_support::bubble_state(g, m, 0.05, 2.0, 0.01, seed), m);
    worst = std::max({worst, rel(fit.scale_eps_lambda, 0.05), rel(fit.c_fit, 2.0)});
  }
  o.require(worst <= 0.02, "noisy bubble " + fmt("%.3f", worst));

  std::vector<flow::TimeSeriesRecord> series(200);
  for (std::size_t k = 0; k < series.size(); ++k) {
    series[k].t = 0.01 * static_cast<double>(k);
    series[k].F2 = std::exp(-3.0 * series[k].t);
  }
  const double mu_err = std::abs(diagnostics::decay_rate_fit(series) - 3.0);
  o.require(mu_err <= 1e-6, "decay rate " + fmt("%.1e", mu_err));

  const double yl = 8 * std::sqrt(3.0) * pi;
  o.require(diagnostics::max_bubble_count(yl, yl, 4) == 1, "count(Y_l) = 1");
  o.require(diagnostics::max_bubble_count(0.999 * yl, yl, 4) == 0, "count(< Y_l) = 0");
  o.require(diagnostics::max_bubble_count(std::sqrt(2.0) * yl, yl, 4) == 2, "count(2^{1/2} Y_l) = 2");
  o.require(diagnostics::max_bubble_count(std::pow(3.0, 2.0 / 3.0) * yl, yl, 3) == 3, "count n=3");
  o.note("bubble " + fmt("%.1e", std::max(e_le, e_c)) + ", noisy worst " + fmt("%.4f", worst) +
         " over 100 seeds, decay err " + fmt("%.1e", mu_err));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 closed-form suite", closed_form_suite},
      {"2 flow property suite", flow_suite},
      {"3 discretization order", order_suite},
      {"4 diagnostics suite", diagnostics_suite},
  };
  bool all = true;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.pass;
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  }
  // Long-time limits and the quoted sigma(0) are outside desk scale; print the
  // derived value next to the quoted one.
  std::printf("[INFO] 5 not reproduced: t -> inf limits; sigma(0) derived 16 pi = %.4f (unnormalized 32), quoted pi^5 = %.4f\n",
              16 * pi, std::pow(pi, 5));
  return all ? 0 : 1;
}
