#pragma once

#include "radialgeo/metric.hpp"
#include "radialgeo/surface.hpp"
#include "radialgeo/types.hpp"

namespace radialgeo {

/// A point of S^2 x R: unit direction p and height h.
struct ProductPoint {
  Vec3 p = Vec3::UnitX();
  double h = 0.0;
};

/// Psi(x) = (x/|x|, log |x|), the isometry of the radial model onto S^2 x R.
/// Throws DomainError for |x| < kMinRadius.
ProductPoint psi(const Vec3& x);
Vec3 psi_inv(const ProductPoint& pp);

/// Differential of Psi at x applied to v: tangent vector to S^2 at x/|x| and a height rate.
struct ProductTangent {
  Vec3 sphere = Vec3::Zero();
  double height = 0.0;
};
ProductTangent psi_differential(const Vec3& x, const Vec3& v);

/// |<v,w>/<x,x> - (<dPsi v, dPsi w>_{S^2} + dh(v) dh(w))|, with the unit
/// round sphere on the first factor.
double psi_isometry_residual(const Vec3& x, const Vec3& v, const Vec3& w);

/// f(x) = x/<x,x> and its differential.
Vec3 inversion(const Vec3& x);
Vec3 inversion_differential(const Vec3& x, const Vec3& v);

/// |<v,w>_g(x) - <df v, df w>_g(f(x))| for the given factor.
double inversion_isometry_residual(const ConformalFactor& factor, const Vec3& x, const Vec3& v, const Vec3& w);

/// Worst-case conformal curvatures of an origin sphere over a grid of its
/// rotation parametrization.
struct SphereReport {
  double radius = 0.0;
  double extrinsic_max_abs = 0.0;        // max |K~_E|
  double extrinsic_mean = 0.0;           // mean K~_E over the grid
  double gauss_min = 0.0;                // min K~
  double gauss_max = 0.0;                // max K~
  double mean_max_abs = 0.0;             // max |H~|
  double totally_geodesic_residual = 0.0;  // max |lambda~_i|
};

SphereReport sphere_report(double radius, const ConformalFactor& factor = ConformalFactor::radial_model(),
                           const Grid& grid = {10, 10});

}  // namespace radialgeo
