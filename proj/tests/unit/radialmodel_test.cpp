#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "radialgeo/errors.hpp"
#include "radialgeo/geodesic.hpp"
#include "radialgeo/radialmodel.hpp"
#include "test_support.hpp"

namespace radialgeo {
namespace {

using testing::all_factors;
using testing::random_point;
using testing::random_vector;

TEST(Psi, Examples) {
  const ProductPoint a = psi(Vec3(1, 0, 0));
  EXPECT_EQ(a.p, Vec3(1, 0, 0));
  EXPECT_EQ(a.h, 0.0);
  const ProductPoint b = psi(Vec3(0, 0, std::numbers::e));
  EXPECT_NEAR((b.p - Vec3(0, 0, 1)).norm(), 0.0, 1e-15);
  EXPECT_NEAR(b.h, 1.0, 1e-15);
  EXPECT_THROW((void)psi(Vec3::Zero()), DomainError);
  EXPECT_THROW((void)psi(Vec3(1e-13, 0, 0)), DomainError);
}

TEST(Psi, RoundTrip) {
  std::mt19937_64 rng(41);
  for (int n = 0; n < 100; ++n) {
    const Vec3 x = random_point(rng, 1e-3, 1e3);
    const ProductPoint pp = psi(x);
    EXPECT_NEAR(pp.p.norm(), 1.0, 1e-12);
    EXPECT_LT((psi_inv(pp) - x).norm(), 1e-12 * std::max(1.0, x.norm()));
  }
}

TEST(Psi, IsometryResidual) {
  EXPECT_NEAR(psi_isometry_residual(Vec3(1, 0, 0), Vec3::UnitX(), Vec3::UnitX()), 0.0, 1e-15);
  EXPECT_NEAR(psi_isometry_residual(Vec3(1, 0, 0), Vec3::UnitY(), Vec3::UnitY()), 0.0, 1e-15);
  const ProductTangent radial = psi_differential(Vec3(2, 0, 0), Vec3::UnitX());
  EXPECT_NEAR(radial.sphere.norm(), 0.0, 1e-15);
  EXPECT_NEAR(radial.height, 0.5, 1e-15);
  EXPECT_NEAR(psi_isometry_residual(Vec3(0, 3, 0), Vec3(0, 2, 0), Vec3(1, 0, -1)), 0.0, 1e-15);

  std::mt19937_64 rng(42);
  for (int n = 0; n < 1000; ++n) {
    const Vec3 x = random_point(rng, 0.1, 10.0);
    EXPECT_LT(psi_isometry_residual(x, random_vector(rng), random_vector(rng)), 1e-10);
  }
}

TEST(Inversion, IsAnInvolutionFixingTheUnitSphere) {
  std::mt19937_64 rng(43);
  for (int n = 0; n < 50; ++n) {
    const Vec3 x = random_point(rng, 0.1, 10.0);
    EXPECT_LT((inversion(inversion(x)) - x).norm(), 1e-13 * x.norm());
    const Vec3 on = x.normalized();
    EXPECT_LT((inversion(on) - on).norm(), 1e-15);
  }
  EXPECT_THROW((void)inversion(Vec3::Zero()), DomainError);
}

TEST(Inversion, IsometryOfTheRadialModelOnly) {
  std::mt19937_64 rng(44);
  const auto radial = ConformalFactor::radial_model();
  const auto expo = ConformalFactor::exp_model();
  for (int n = 0; n < 1000; ++n) {
    const Vec3 x = random_point(rng, 0.1, 10.0);
    EXPECT_LT(inversion_isometry_residual(radial, x, random_vector(rng), random_vector(rng)), 1e-10);
  }
  std::uniform_real_distribution<double> log_radius(std::log(0.25), std::log(4.0));
  for (int n = 0; n < 100; ++n) {
    double r = 1.0;
    while (std::abs(std::log(r)) < 0.1) r = std::exp(log_radius(rng));
    const Vec3 x = r * random_point(rng, 1.0, 1.0);
    const Vec3 v = x.cross(random_vector(rng)).normalized();
    EXPECT_GE(inversion_isometry_residual(expo, x, v, v), 1e-3);
  }
}

TEST(Inversion, EveryFactorIsPreservedTangentiallyOnTheUnitSphere) {
  std::mt19937_64 rng(45);
  for (const auto& factor : all_factors()) {
    const Vec3 x = random_point(rng, 1.0, 1.0);
    const Vec3 v = x.cross(random_vector(rng));
    EXPECT_LT(inversion_isometry_residual(factor, x, v, v), 1e-12) << factor.name();
  }
}

TEST(SphereReport, RadialModelBattery) {
  for (double r : {0.5, 1.0, 10.0}) {
    const SphereReport rep = sphere_report(r);
    EXPECT_LT(rep.extrinsic_max_abs, 1e-9);
    EXPECT_LT(rep.mean_max_abs, 1e-9);
    EXPECT_LT(rep.totally_geodesic_residual, 1e-9);
    EXPECT_NEAR(rep.gauss_min, 1.0, 1e-9);
    EXPECT_NEAR(rep.gauss_max, 1.0, 1e-9);
  }
}

TEST(SphereReport, ExpModelComparison) {
  for (double r : {0.5, 1.0, 2.0}) {
    const SphereReport rep = sphere_report(r, ConformalFactor::exp_model());
    const double expected = std::pow(1 + 2 * r * r, 2) * std::exp(-2 * r * r) / (r * r);
    EXPECT_NEAR(rep.extrinsic_mean, expected, 1e-10);
    EXPECT_NEAR(rep.totally_geodesic_residual, std::exp(-r * r) * (1 / r + 2 * r), 1e-10);
  }
}

TEST(ProductPicture, RadialGeodesicsBecomeVerticalLines) {
  const auto radial = ConformalFactor::radial_model();
  const Vec3 start(0.3, -0.4, 1.2);
  const Trajectory tr = integrate(radial, {start, start}, 2.0, 1e-3);
  const ProductPoint p0 = psi(start);
  std::vector<double> heights;
  for (const auto& st : tr.states) {
    const ProductPoint pp = psi(st.x);
    EXPECT_LT((pp.p - p0.p).norm(), 1e-8);
    heights.push_back(pp.h);
  }
  for (std::size_t i = 1; i + 1 < heights.size(); ++i)
    EXPECT_LT(std::abs(heights[i + 1] - 2 * heights[i] + heights[i - 1]), 1e-6);
  EXPECT_NEAR(heights.back() - heights.front(), 2.0, 1e-6);
}

TEST(ProductPicture, OriginCirclesBecomeHorizontalGreatCircles) {
  const auto radial = ConformalFactor::radial_model();
  const Trajectory tr = integrate(radial, {Vec3(0, 2, 0), Vec3(1, 0, 1)}, 7.0, 1e-3);
  for (const auto& st : tr.states) EXPECT_NEAR(psi(st.x).h, std::log(2.0), 1e-8);
}

TEST(ProductPicture, SectionalCurvatureVanishesOnVerticalPlanes) {
  const auto radial = ConformalFactor::radial_model();
  const Vec3 x(0, 0, 3.0);
  EXPECT_NEAR(sectional_curvature(radial, x, 0, 2), 0.0, 1e-15);
  EXPECT_NEAR(sectional_curvature(radial, x, 1, 2), 0.0, 1e-15);
  EXPECT_NEAR(sectional_curvature(radial, x, 0, 1), 1.0, 1e-15);
}

TEST(Completeness, RadialApproachLengthGrowsLogarithmically) {
  const auto radial = ConformalFactor::radial_model();
  for (double r : {1e-2, 1e-4, 1e-6}) {
    std::vector<Vec3> path;
    const int n = 400;
    for (int i = 0; i <= n; ++i) path.emplace_back(std::pow(r, static_cast<double>(i) / n), 0.0, 0.0);
    const double length = curve_length(radial, path);
    EXPECT_LT(std::abs(length / std::log(1 / r) - 1.0), 1e-2);
  }
}

}  // namespace
}  // namespace radialgeo
