#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "radialgeo/conformal.hpp"
#include "radialgeo/errors.hpp"
#include "radialgeo/rotation.hpp"
#include "test_support.hpp"

namespace radialgeo {
namespace {

using testing::all_factors;

TEST(ExtrinsicResidual, VanishesOnOriginSpheresForEveryFactor) {
  for (const auto& factor : all_factors()) {
    for (double r : {0.4, 1.0, 1.6}) {
      const double c0 = sphere_extrinsic(factor, r);
      if (!(c0 > 0.0)) continue;
      const RotationProfile sphere = RotationProfile::sphere(r);
      for (double s : {-0.9, -0.3, 0.0, 0.5, 0.9}) {
        const double u = s * r;
        const double scale = std::max(1.0, c0 * std::pow(1 + u * u / (r * r - u * u), 2) * r);
        EXPECT_NEAR(extrinsic_residual(factor, sphere, u, c0), 0.0, 1e-10 * scale) << factor.name() << " R=" << r;
      }
    }
  }
}

TEST(ExtrinsicResidual, SignTracksTheCurvatureGap) {
  const auto expo = ConformalFactor::exp_model();
  const RotationProfile sphere = RotationProfile::sphere(1.0);
  const double c0 = sphere_extrinsic(expo, 1.0);
  EXPECT_GT(extrinsic_residual(expo, sphere, 0.2, 2 * c0), 0.0);
  EXPECT_LT(extrinsic_residual(expo, sphere, 0.2, 0.5 * c0), 0.0);
}

TEST(E3Residual, IsTheGeneralResidualRescaled) {
  const auto expo = ConformalFactor::exp_model();
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int n = 0; n < 50; ++n) {
    const ProfileValue p{0.5 + std::abs(d(rng)), d(rng), d(rng)};
    const double u = d(rng);
    const double c0 = 1.0 + d(rng);
    const double t = u * u + p.phi * p.phi;
    EXPECT_NEAR(e3_residual(p, u, c0), extrinsic_residual(expo, p, u, c0) * std::exp(2 * t),
                1e-12 * std::max(1.0, std::abs(e3_residual(p, u, c0))));
  }
}

TEST(E3Residual, Examples) {
  const double c0 = 9.0 * std::exp(-2.0);
  const RotationProfile sphere = RotationProfile::sphere(1.0);
  for (double u : {-0.8, 0.0, 0.6}) EXPECT_NEAR(e3_residual(sphere, u, c0), 0.0, 1e-12);
  EXPECT_NEAR(e3_residual(ProfileValue{1.0, 0.0, 0.0}, 0.0, 1.0), -6.0 + std::exp(2.0), 1e-12);
  EXPECT_GT(std::abs(e3_residual_printed(sphere(0.3), 0.3, c0)), 1.0);
}

TEST(CurvatureRadiusFunction, ClosedForms) {
  EXPECT_DOUBLE_EQ(curvature_radius_function(ConformalFactor::euclidean(), 0.25), 4.0);
  EXPECT_NEAR(curvature_radius_function(ConformalFactor::radial_model(), 3.0), 0.0, 1e-15);
  EXPECT_NEAR(curvature_radius_function(ConformalFactor::exp_model(), 1.0), 9.0 * std::exp(-2.0), 1e-15);
  EXPECT_NEAR(sphere_extrinsic(ConformalFactor::exp_model(), 1.0), 9.0 * std::exp(-2.0), 1e-15);
}

TEST(RadiusForCurvature, Examples) {
  const RadiusRoots flat = radius_for_curvature(ConformalFactor::euclidean(), 4.0);
  EXPECT_NEAR(flat.smallest, 0.5, 1e-12);
  ASSERT_EQ(flat.roots.size(), 1u);

  const RadiusRoots expo = radius_for_curvature(ConformalFactor::exp_model(), 9.0 * std::exp(-2.0));
  EXPECT_NEAR(expo.smallest, 1.0, 1e-12);
  EXPECT_EQ(expo.roots.size(), 1u);
}

TEST(RadiusForCurvature, RoundTripUnderExpModel) {
  const auto expo = ConformalFactor::exp_model();
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> radius(0.2, 3.0);
  for (int n = 0; n < 20; ++n) {
    const double r = radius(rng);
    EXPECT_NEAR(radius_for_curvature(expo, sphere_extrinsic(expo, r)).smallest, r, 1e-9);
  }
}

TEST(RadiusForCurvature, ReportsEveryRoot) {
  // w = (1 - t)^2 / t, so w = 1 at t = (3 -+ sqrt 5)/2.
  const RadiusRoots r = radius_for_curvature(ConformalFactor::parse("custom:affine:1,1"), 1.0);
  ASSERT_EQ(r.roots.size(), 2u);
  EXPECT_NEAR(r.roots[0], std::sqrt((3 - std::sqrt(5.0)) / 2), 1e-10);
  EXPECT_NEAR(r.roots[1], std::sqrt((3 + std::sqrt(5.0)) / 2), 1e-10);
  EXPECT_EQ(r.smallest, r.roots[0]);
  EXPECT_EQ(r.brackets.size(), 2u);
  EXPECT_NEAR(r.w_min, 0.0, 1e-3);
}

TEST(RadiusForCurvature, Errors) {
  EXPECT_THROW((void)radius_for_curvature(ConformalFactor::radial_model(), 0.5), NoBracketError);
  EXPECT_THROW((void)radius_for_curvature(ConformalFactor::exp_model(), 0.0), DomainError);
  EXPECT_THROW((void)radius_for_curvature(ConformalFactor::exp_model(), -1.0), DomainError);
  // h = t gives w = t: a root exists but w does not blow up at the origin.
  EXPECT_THROW((void)radius_for_curvature(ConformalFactor::parse("custom:power:1,1"), 1.0), HypothesisError);
}

TEST(Profile, SphereAndCosineSamplers) {
  const RotationProfile s = RotationProfile::sphere(2.0);
  EXPECT_NEAR(s.u_max(), 2.0 - 4e-3, 1e-15);
  const ProfileValue p = s(1.2);
  EXPECT_NEAR(p.phi, 1.6, 1e-15);
  EXPECT_NEAR(p.dphi, -0.75, 1e-15);
  EXPECT_THROW((void)s(2.5), DomainError);
  EXPECT_THROW((void)RotationProfile::cosine(1.0, 2.0, -3.0, 3.0), DomainError);  // 1 + 2 cos 3 < 0
}

TEST(Profile, HermiteInterpolationIsFifthOrder) {
  const auto sampled = [](int n) {
    std::vector<double> u;
    std::vector<ProfileValue> v;
    for (int i = 0; i <= n; ++i) {
      const double x = -1.0 + 2.0 * i / n;
      u.push_back(x);
      v.push_back({2 + std::sin(x), std::cos(x), -std::sin(x)});
    }
    return RotationProfile::from_nodes("sin", u, v);
  };
  const auto error = [](const RotationProfile& p) {
    double worst = 0.0;
    for (int i = 0; i <= 997; ++i) {
      const double x = -1.0 + 2.0 * i / 997.0;
      worst = std::max(worst, std::abs(p(x).phi - 2 - std::sin(x)));
    }
    return worst;
  };
  const double e1 = error(sampled(8));
  const double e2 = error(sampled(16));
  EXPECT_LT(e1, 1e-7);
  EXPECT_GT(e1 / e2, 40.0);
  EXPECT_THROW(RotationProfile::from_nodes("bad", {0.0, -1.0}, {{1, 0, 0}, {1, 0, 0}}), std::invalid_argument);
}

TEST(SolveProfile, RecoversTheUnitSphereUnderExpModel) {
  const double c0 = 9.0 * std::exp(-2.0);
  const RotationProfile p = solve_profile(ConformalFactor::exp_model(), c0, {0.0, 1.0, 0.0}, -0.9, 0.9, 1e-3);
  EXPECT_DOUBLE_EQ(p.u_min(), -0.9);
  EXPECT_DOUBLE_EQ(p.u_max(), 0.9);
  double worst = 0.0;
  for (int i = 0; i <= 180; ++i) {
    const double u = -0.9 + 0.01 * i;
    worst = std::max(worst, std::abs(p(u).phi - std::sqrt(1 - u * u)));
  }
  EXPECT_LT(worst, 1e-6);
}

TEST(SolveProfile, SolutionHasThePrescribedExtrinsicCurvature) {
  const auto expo = ConformalFactor::exp_model();
  const double c0 = 0.5;
  const RotationProfile p = solve_profile(expo, c0, {0.0, 0.8, 0.1}, -0.3, 0.3, 1e-3);
  const SurfaceSpec surface = SurfaceSpec::rotation(p);
  for (const auto& [u, v] : grid_points(surface.domain(), {7, 3})) {
    const ConformalCurvature c = transform(expo, euclidean_curvatures(jet(surface, u, v)));
    EXPECT_NEAR(c.extrinsic_t, c0, 1e-7);
  }
}

TEST(SolveProfile, Errors) {
  const auto expo = ConformalFactor::exp_model();
  // 1 + 2 phi^2 - 2 u phi phi' = 0 at the start.
  EXPECT_THROW((void)solve_profile(expo, 0.5, {1.0, 1.0, 1.5}, 0.5, 1.5, 1e-3), SingularCoefficientError);
  EXPECT_THROW((void)solve_profile(ConformalFactor::euclidean(), 1.0, {0.0, 0.5, 0.0}, -2.0, 2.0, 1e-3), DomainError);
  EXPECT_THROW((void)solve_profile(expo, 0.5, {0.0, 1.0, 0.0}, -1.0, 1.0, 0.0), StepError);
}

}  // namespace
}  // namespace radialgeo
