#pragma once

#include <utility>
#include <vector>

#include "radialgeo/metric.hpp"
#include "radialgeo/profile.hpp"

namespace radialgeo {

/// Residual of the constant-extrinsic-curvature ODE for X = (phi cos v, phi sin v, u):
///   [F + 2 phi F'(-phi + u phi')] [F phi'' - 2 a^2 F'(-phi + u phi')] + c0 a^4 phi,
/// a^2 = 1 + phi'^2, F and F' evaluated at t = phi^2 + u^2. Zero iff the
/// extrinsic curvature at u equals c0.
double extrinsic_residual(const ConformalFactor& factor, const ProfileValue& p, double u, double c0);
double extrinsic_residual(const ConformalFactor& factor, const RotationProfile& profile, double u, double c0);

/// The same ODE specialized to F = exp(-t) and multiplied through by exp(2t):
///   [1 + 2 phi^2 - 2 u phi phi'] [phi'' - 2 a^2 (phi - u phi')] + c0 a^4 phi e^{2(u^2 + phi^2)}.
double e3_residual(const ProfileValue& p, double u, double c0);
double e3_residual(const RotationProfile& profile, double u, double c0);

/// The alternative arrangement
///   [1 + 2 phi^2 - 2 u phi phi'] phi'' + a^2 [4 phi phi'^2 + 2 phi + 2 u phi'] + c0 a^4 phi e^{2(u^2 + phi^2)}.
/// It does not vanish on the sphere solution; kept for the verification report.
double e3_residual_printed(const ProfileValue& p, double u, double c0);

/// w(t) = ((F(t) - 2 F'(t) t) / sqrt t)^2, the extrinsic curvature of the
/// origin sphere with t = R^2.
double curvature_radius_function(const ConformalFactor& factor, double t);

/// Extrinsic curvature (F(R^2) - 2 F'(R^2) R^2)^2 / R^2 of the sphere |x| = R.
double sphere_extrinsic(const ConformalFactor& factor, double radius);

struct RadiusRoots {
  double smallest = 0.0;
  std::vector<double> roots;                             // radii, ascending
  std::vector<std::pair<double, double>> brackets;       // t-brackets found by the scan
  double w_min = 0.0;                                    // smallest w on the scan
};

inline constexpr double kScanTMin = 1e-6;
inline constexpr double kScanTMax = 1e6;
inline constexpr int kScanNodes = 2000;

/// Solves w(R^2) = c0 by a log-spaced scan of t in [1e-6, 1e6] followed by
/// bisection of every sign-change bracket. Throws NoBracketError when no
/// bracket exists and HypothesisError when w(1e-6) < c0.
RadiusRoots radius_for_curvature(const ConformalFactor& factor, double c0);

struct ProfileStart {
  double u0 = 0.0;
  double phi = 1.0;
  double dphi = 0.0;
};

/// Integrates the constant-extrinsic-curvature ODE as an initial value problem
/// for phi'' (RK4, fixed step) from `start.u0` out to both ends of [u_min, u_max].
/// Throws SingularCoefficientError when |F + 2 phi F'(-phi + u phi')| < 1e-10
/// and DomainError when phi <= 0 or t leaves the factor domain.
RotationProfile solve_profile(const ConformalFactor& factor, double c0, const ProfileStart& start, double u_min,
                              double u_max, double step);

}  // namespace radialgeo
