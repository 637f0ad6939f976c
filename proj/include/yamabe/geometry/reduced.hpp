#pragma once

#include <span>
#include <vector>

#include "yamabe/geometry/grid.hpp"

namespace yamabe::geometry {

// Discrete form of the reduced operator v -> -d/dx((1 - x^2) d/dx(x v)) on a
// RadialGrid. Products x v are formed at the cell midpoints, which makes
//
//   sum_i weight_i * S~_i * v_i^4  ==  energy(grid, v)
//
// an exact summation-by-parts identity.

// Jumps delta(xv) across faces 0..n-1. Face 0 uses the ghost value (xv)(0) = 0.
std::vector<double> xv_jumps(const RadialGrid& grid, std::span<const double> v);

// Face fluxes F_k = (1 - x_k^2) delta(xv)_k / spacing_k for k = 0..n; F_n = 0
// because the factor 1 - x^2 vanishes at x = 1.
std::vector<double> face_fluxes(const RadialGrid& grid, std::span<const double> v);

// S~_i = -(F_{i+1} - F_i) / (width_i v_i^3). Throws DomainError unless v > 0.
ScalarField scalar_from_v(const RadialGrid& grid, std::span<const double> v);

// E(v) = \int_0^1 (1 - x^2) (d/dx(x v))^2 dx, discretized with the face jumps.
double energy(const RadialGrid& grid, std::span<const double> v);

// \int_0^1 v^4 x dx
double reduced_volume(const RadialGrid& grid, std::span<const double> v);

// G(x) = log((1+x)/(1-x)) / x, continuous at 0 with G(0) = 2.
double green_kernel(double x);

// Exact cell integrals \int_cell G(x) x dx, used as product-integration
// weights against the logarithmic singularity at x = 1.
std::vector<double> green_cell_weights(const RadialGrid& grid);

// \int_0^1 G(x)^4 x dx
double green_l4_moment();

}  // namespace yamabe::geometry
