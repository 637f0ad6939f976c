#include "yamabe/diagnostics/bubble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "yamabe/error.hpp"

namespace yamabe::diagnostics {

namespace {

constexpr std::size_t min_window = 8;

struct LineFit {
  double slope;
  double intercept;
};

LineFit least_squares(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw DomainError("least squares: abscissae are all equal");
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

}  // namespace

std::vector<double> distances_to_singular_point(const flow::FlowState& state,
                                                const geometry::EguchiHansonModel& model,
                                                DistanceMode mode) {
  const auto x = state.grid->centers();
  std::vector<double> d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = model.distance_from_singular_point(x[i]);
  if (mode == DistanceMode::background) return d;

  // Line element of v^2 g_psi is v times the background one.
  std::vector<double> out(x.size());
  out[0] = state.v[0] * d[0];
  for (std::size_t i = 1; i < x.size(); ++i)
    out[i] = out[i - 1] + 0.5 * (state.v[i - 1] + state.v[i]) * (d[i] - d[i - 1]);
  return out;
}

BubbleFit bubble_fit(const flow::FlowState& state, const geometry::EguchiHansonModel& model,
                     DistanceMode mode) {
  const auto& v = state.v;
  const std::size_t peak =
      static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
  const double half = 0.5 * v[peak];
  std::size_t lo = peak, hi = peak + 1;
  while (lo > 0 && v[lo - 1] > half) --lo;
  while (hi < v.size() && v[hi] > half) ++hi;
  if (hi - lo < min_window)
    throw DomainError("bubble_fit: window has " + std::to_string(hi - lo) + " cells, need " +
                      std::to_string(min_window));

  const auto d = distances_to_singular_point(state, model, mode);
  std::vector<double> z, y;
  for (std::size_t i = lo; i < hi; ++i) {
    z.push_back(d[i] * d[i]);
    y.push_back(1.0 / v[i]);
  }
  const auto line = least_squares(z, y);
  if (!(line.slope > 0.0) || !(line.intercept > 0.0))
    throw DomainError("bubble_fit: profile is not bubble shaped (slope " +
                      std::to_string(line.slope) + ", intercept " +
                      std::to_string(line.intercept) + ")");

  BubbleFit fit;
  fit.slope = line.slope;
  fit.intercept = line.intercept;
  fit.scale_eps_lambda = std::sqrt(line.intercept / line.slope);
  fit.c_fit = 1.0 / (line.slope * fit.scale_eps_lambda);
  fit.window_begin = lo;
  fit.window_end = hi;
  double ss = 0.0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    const double model_v = 1.0 / (line.slope * z[j] + line.intercept);
    const double rel = (model_v - v[lo + j]) / v[lo + j];
    ss += rel * rel;
  }
  fit.residual = std::sqrt(ss / static_cast<double>(z.size()));
  return fit;
}

double decay_rate_fit(std::span<const flow::TimeSeriesRecord> series) {
  if (series.size() < 10) throw InputError("decay_rate_fit: need at least 10 records");
  const std::size_t count = std::max<std::size_t>(10, series.size() / 2);
  const auto window = series.subspan(series.size() - count);
  std::vector<double> t, logf;
  for (const auto& r : window) {
    if (!(r.F2 > 0.0)) return std::numeric_limits<double>::infinity();
    t.push_back(r.t);
    logf.push_back(std::log(r.F2));
  }
  const double mu = -least_squares(t, logf).slope;
  return mu == 0.0 ? 0.0 : mu;
}

}  // namespace yamabe::diagnostics
