#include "radialgeo/radialmodel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "radialgeo/conformal.hpp"
#include "radialgeo/errors.hpp"

namespace radialgeo {

namespace {

double checked_norm(const Vec3& x) {
  const double r = x.norm();
  if (!(r >= kMinRadius)) throw DomainError("point too close to the origin");
  return r;
}

}  // namespace

ProductPoint psi(const Vec3& x) {
  const double r = checked_norm(x);
  return {x / r, std::log(r)};
}

Vec3 psi_inv(const ProductPoint& pp) { return std::exp(pp.h) * pp.p; }

ProductTangent psi_differential(const Vec3& x, const Vec3& v) {
  const double r = checked_norm(x);
  const double radial = x.dot(v) / (r * r);
  return {v / r - radial * x / r, radial};
}

double psi_isometry_residual(const Vec3& x, const Vec3& v, const Vec3& w) {
  const double t = x.squaredNorm();
  const ProductTangent dv = psi_differential(x, v);
  const ProductTangent dw = psi_differential(x, w);
  return std::abs(v.dot(w) / t - (dv.sphere.dot(dw.sphere) + dv.height * dw.height));
}

Vec3 inversion(const Vec3& x) {
  checked_norm(x);
  return x / x.squaredNorm();
}

Vec3 inversion_differential(const Vec3& x, const Vec3& v) {
  checked_norm(x);
  const double t = x.squaredNorm();
  return v / t - 2.0 * x.dot(v) / (t * t) * x;
}

double inversion_isometry_residual(const ConformalFactor& factor, const Vec3& x, const Vec3& v, const Vec3& w) {
  const Vec3 y = inversion(x);
  return std::abs(metric_inner(factor, x, v, w) -
                  metric_inner(factor, y, inversion_differential(x, v), inversion_differential(x, w)));
}

SphereReport sphere_report(double radius, const ConformalFactor& factor, const Grid& grid) {
  const SurfaceSpec sphere = SurfaceSpec::sphere_origin(radius);
  SphereReport report;
  report.radius = radius;
  report.gauss_min = std::numeric_limits<double>::infinity();
  report.gauss_max = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& [u, v] : grid_points(sphere.domain(), grid)) {
    const ConformalCurvature c = transform(factor, euclidean_curvatures(jet(sphere, u, v)));
    report.extrinsic_max_abs = std::max(report.extrinsic_max_abs, std::abs(c.extrinsic_t));
    report.gauss_min = std::min(report.gauss_min, c.gauss_t);
    report.gauss_max = std::max(report.gauss_max, c.gauss_t);
    report.mean_max_abs = std::max(report.mean_max_abs, std::abs(c.mean_t));
    report.totally_geodesic_residual =
        std::max({report.totally_geodesic_residual, std::abs(c.lambda1_t), std::abs(c.lambda2_t)});
    sum += c.extrinsic_t;
    ++count;
  }
  report.extrinsic_mean = sum / static_cast<double>(count);
  return report;
}

}  // namespace radialgeo
