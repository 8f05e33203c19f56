#pragma once

// Finite-difference reference computations. They only touch metric_inner and
// raw surface evaluation, never the closed forms they are compared against.

#include "radialgeo/metric.hpp"
#include "radialgeo/surface.hpp"

namespace radialgeo::oracles {

/// Levi-Civita symbols from central differences of g_ij = metric_inner(e_i, e_j).
ChristoffelTable fd_christoffel(const ConformalFactor& factor, const Vec3& x, double step = 1e-5);

/// Sectional curvature of the coordinate plane (e_i, e_j) from a Riemann
/// tensor assembled from fd_christoffel and its own central differences.
double fd_sectional_curvature(const ConformalFactor& factor, const Vec3& x, int i, int j, double metric_step = 1e-5,
                              double christoffel_step = 1e-4);

/// Central-difference first partials (X_u, X_v) of the surface position.
std::pair<Vec3, Vec3> fd_first_partials(const SurfaceSpec& spec, double u, double v, double step = 1e-5);

/// Central-difference second partials (X_uu, X_uv, X_vv) of the surface position.
std::array<Vec3, 3> fd_second_partials(const SurfaceSpec& spec, double u, double v, double step = 1e-4);

}  // namespace radialgeo::oracles
