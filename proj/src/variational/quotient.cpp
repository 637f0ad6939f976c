#include "yamabe/variational/quotient.hpp"

#include <cmath>
#include <numbers>

#include "yamabe/error.hpp"
#include "yamabe/geometry/quadrature.hpp"

namespace yamabe::variational {

using std::numbers::pi;

namespace {

double derivative_s(const geometry::RadialFunction& v, double s) {
  if (v.d1) return v.d1(s);
  const double h = 1e-6 * std::max(1.0, s);
  if (s < h) return (-3.0 * v.value(s) + 4.0 * v.value(s + h) - v.value(s + 2.0 * h)) / (2.0 * h);
  return (v.value(s + h) - v.value(s - h)) / (2.0 * h);
}

}  // namespace

double yamabe_quotient_eh(const geometry::RadialFunction& v, double a) {
  if (!v.value) throw InputError("yamabe_quotient_eh: empty function");
  const geometry::EguchiHansonModel model(a);
  const double a4 = a * a * a * a;
  constexpr double c4 = 6.0;  // 4 (n-1) / (n-2)

  // Both integrands decay like r^{-5}; far tail points where r^4 overflows
  // contribute nothing.
  const auto numerator = geometry::quad::half_line([&](double r) {
    const double r2 = r * r;
    if (!std::isfinite(r2 * r2 * r)) return 0.0;
    const double root = std::sqrt(a4 + r2 * r2);
    const double psi2 = a4 / (a4 + r2 * r2);
    const double val = v.value(r2);
    const double ds = derivative_s(v, r2);
    const double integrand = c4 * 4.0 * (a4 / root) * ds * ds +
                             model.scalar_curvature(r) * val * val * psi2 * psi2;
    return integrand * pi * pi * r2 * r;
  }, 1e-11);
  const auto l4 = geometry::quad::half_line([&](double r) {
    const double r2 = r * r;
    if (!std::isfinite(r2 * r2 * r)) return 0.0;
    const double psi2 = a4 / (a4 + r2 * r2);
    const double val2 = v.value(r2) * v.value(r2);
    return val2 * val2 * psi2 * psi2 * pi * pi * r2 * r;
  }, 1e-11);
  if (!(l4.value > 0.0)) throw DomainError("yamabe_quotient_eh: zero denominator");
  return numerator.value / std::sqrt(l4.value);
}

double yamabe_quotient_sphere(const std::function<double(double)>& v,
                              const std::function<double(double)>& dv, int n) {
  if (n < 3) throw InputError("yamabe_quotient_sphere: n must be >= 3");
  const double omega = geometry::sphere_volume(n - 1);
  const double cn = 4.0 * (n - 1.0) / (n - 2.0);
  const double s0 = n * (n - 1.0);
  const double p = 2.0 * n / (n - 2.0);
  const auto num = geometry::quad::interval([&](double th) {
    const double d = dv(th), u = v(th);
    return (cn * d * d + s0 * u * u) * omega * std::pow(std::sin(th), n - 1);
  }, 0.0, pi, 1e-12);
  const auto den = geometry::quad::interval([&](double th) {
    return std::pow(std::abs(v(th)), p) * omega * std::pow(std::sin(th), n - 1);
  }, 0.0, pi, 1e-12);
  if (!(den.value > 0.0)) throw DomainError("yamabe_quotient_sphere: zero denominator");
  return num.value / std::pow(den.value, 2.0 / p);
}

double DiscreteQuotient::lp_norm(std::span<const double> v) const {
  double d = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) d += w[i] * std::pow(std::abs(v[i]), p);
  return std::pow(d, 1.0 / p);
}

double DiscreteQuotient::value(std::span<const double> v) const {
  const double norm = lp_norm(v);
  if (!(norm > 0.0)) throw DomainError("quotient: zero denominator");
  return alpha * T.quadratic(v) / (norm * norm);
}

DiscreteQuotient eh_discrete_quotient(const geometry::RadialGrid& grid) {
  const std::size_t n = grid.size();
  const auto faces = grid.faces();
  const auto m = grid.midpoints();
  // E_h = sum_k c_k (m_k v_k - m_{k-1} v_{k-1})^2 with the k = 0 term c_0 (m_0 v_0)^2
  std::vector<double> c(n);
  for (std::size_t k = 0; k < n; ++k)
    c[k] = (1.0 - faces[k]) * (1.0 + faces[k]) / grid.face_spacing(k);
  DiscreteQuotient q;
  q.T.diag.assign(n, 0.0);
  q.T.off.assign(n - 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    q.T.diag[i] += c[i] * m[i] * m[i];
    if (i + 1 < n) {
      q.T.diag[i] += c[i + 1] * m[i] * m[i];
      q.T.off[i] = -c[i + 1] * m[i] * m[i + 1];
    }
  }
  const auto w = grid.weights();
  q.w.assign(w.begin(), w.end());
  q.p = 4.0;
  q.alpha = 12.0 * std::numbers::sqrt2 * pi;
  return q;
}

DiscreteQuotient sphere_discrete_quotient(const geometry::SphereModel& sphere) {
  const int n = sphere.dimension();
  const double cn = 4.0 * (n - 1.0) / (n - 2.0);
  DiscreteQuotient q;
  q.T = path_laplacian(sphere.conductances());
  const auto w = sphere.weights();
  for (std::size_t i = 0; i < q.T.size(); ++i) q.T.diag[i] *= cn;
  for (double& o : q.T.off) o *= cn;
  for (std::size_t i = 0; i < q.T.size(); ++i) q.T.diag[i] += sphere.scalar_curvature() * w[i];
  q.w.assign(w.begin(), w.end());
  q.p = 2.0 * n / (n - 2.0);
  q.alpha = 1.0;
  return q;
}

const char* to_string(QuotientModel m) {
  return m == QuotientModel::sphere ? "sphere" : "eguchi-hanson";
}

QuotientModel quotient_model_from_string(const std::string& s) {
  if (s == "sphere") return QuotientModel::sphere;
  if (s == "eguchi-hanson") return QuotientModel::eguchi_hanson;
  throw InputError("unknown model type '" + s + "'");
}

namespace {

struct Direction {
  ScalarField g;
  double norm;
};

Direction descent_direction(const DiscreteQuotient& q, std::span<const double> v) {
  const std::size_t n = q.size();
  const double num = q.T.quadratic(v);
  const double lp = q.lp_norm(v);
  const double den = std::pow(lp, q.p);
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = q.w[i] * std::pow(std::abs(v[i]), q.p - 2.0) * v[i];
  const auto z = q.T.solve(r);
  Direction d{ScalarField(n), 0.0};
  for (std::size_t i = 0; i < n; ++i) d.g[i] = v[i] - (num / den) * z[i];
  d.norm = std::sqrt(std::max(0.0, q.T.quadratic(d.g)) / num);
  return d;
}

bool normalize(const DiscreteQuotient& q, ScalarField& v) {
  const double norm = q.lp_norm(v);
  if (!(norm > 0.0) || !std::isfinite(norm)) return false;
  for (double& x : v) x /= norm;
  return true;
}

}  // namespace

QuotientResult minimize_quotient(const DiscreteQuotient& q, ScalarField init,
                                 const MinimizeOptions& opts) {
  if (init.size() != q.size())
    throw InputError("minimize_quotient: initial field has " + std::to_string(init.size()) +
                     " entries, expected " + std::to_string(q.size()));
  if (opts.max_iterations < 0 || !(opts.tolerance >= 0.0))
    throw InputError("minimize_quotient: invalid options");
  ScalarField v = std::move(init);
  if (!normalize(q, v)) throw InputError("minimize_quotient: initial field is zero");

  QuotientResult res;
  double value = q.value(v);
  auto dir = descent_direction(q, v);
  res.initial_value = value;
  res.initial_gradient_norm = dir.norm;
  res.history.push_back(value);

  while (res.iterations < opts.max_iterations) {
    if (dir.norm < opts.tolerance) {
      res.converged = true;
      break;
    }
    bool accepted = false;
    double tau = 1.0;
    ScalarField cand(v.size());
    double cand_value = value;
    for (int h = 0; h <= opts.max_halvings; ++h, tau *= 0.5) {
      for (std::size_t i = 0; i < v.size(); ++i) cand[i] = v[i] - tau * dir.g[i];
      if (!normalize(q, cand)) continue;
      cand_value = q.value(cand);
      if (cand_value <= value) {
        accepted = true;
        break;
      }
    }
    if (!accepted) break;  // stagnated at round-off level
    v.swap(cand);
    value = cand_value;
    dir = descent_direction(q, v);
    ++res.iterations;
    res.history.push_back(value);
  }
  if (!res.converged && dir.norm < opts.tolerance) res.converged = true;

  res.value = value;
  res.minimizer = std::move(v);
  res.gradient_norm = dir.norm;
  return res;
}

}  // namespace yamabe::variational
