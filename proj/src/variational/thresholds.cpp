#include "yamabe/variational/thresholds.hpp"

#include <cmath>
#include <string>

#include "yamabe/error.hpp"
#include "yamabe/geometry/sphere.hpp"

namespace yamabe::variational {

double sphere_yamabe_constant(int n) {
  if (n < 3) throw InputError("sphere_yamabe_constant: n must be >= 3");
  return n * (n - 1.0) * std::pow(geometry::sphere_volume(n), 2.0 / n);
}

Thresholds Thresholds::sphere(int n) {
  const double y = sphere_yamabe_constant(n);
  return {y, y, n};
}

Thresholds Thresholds::orbifold_quotient(int group_order, int n) {
  if (n != 4)
    throw InputError("orbifold thresholds are only available in dimension 4, got " +
                     std::to_string(n));
  if (group_order < 1) throw InputError("orbifold group order must be >= 1");
  const double y = sphere_yamabe_constant(4) / std::sqrt(static_cast<double>(group_order));
  return {y, y, n};
}

}  // namespace yamabe::variational
