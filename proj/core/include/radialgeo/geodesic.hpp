#pragma once

#include <span>
#include <string>
#include <vector>

#include "radialgeo/metric.hpp"
#include "radialgeo/types.hpp"

namespace radialgeo {

struct GeodesicState {
  Vec3 x = Vec3::Zero();
  Vec3 xdot = Vec3::Zero();
};

/// Speed |xdot|_g of a state.
double g_speed(const ConformalFactor& factor, const GeodesicState& state);

/// Acceleration of the geodesic through `state` from the radial form of the
/// geodesic equations (written directly in h and h').
Vec3 geodesic_rhs(const ConformalFactor& factor, const GeodesicState& state);

/// The same acceleration as the Christoffel contraction -Gamma^k_{ij} xdot^i xdot^j.
Vec3 christoffel_acceleration(const ConformalFactor& factor, const GeodesicState& state);

/// Integration stops once |g-speed - 1| exceeds this.
inline constexpr double kSpeedDriftLimit = 1e-3;

struct Trajectory {
  std::vector<double> s;
  std::vector<GeodesicState> states;
  bool truncated = false;  // left the factor domain before reaching the full length
  std::string note;
};

/// Fixed-step RK4 integration of an arc-length geodesic. The initial velocity
/// is rescaled to unit g-speed. Produces ceil(length/step) + 1 states unless
/// the trajectory leaves the domain or its g-speed drifts past kSpeedDriftLimit,
/// in which case it is truncated and flagged.
/// Throws StepError if step <= 0 or length < 0, ParametrizationError for a zero velocity.
Trajectory integrate(const ConformalFactor& factor, GeodesicState start, double length, double step);

/// Integrates independent trajectories concurrently; output order matches input.
std::vector<Trajectory> integrate_batch(const ConformalFactor& factor, std::span<const GeodesicState> starts,
                                        double length, double step);

/// A sample of a curve with its first and second derivatives in arc length.
struct CurveSample {
  Vec3 x = Vec3::Zero();
  Vec3 d1 = Vec3::Zero();
  Vec3 d2 = Vec3::Zero();
};

/// max |x'' + Gamma(x', x')| over the samples. Throws ParametrizationError if
/// any sample's g-speed differs from 1 by more than 1e-4.
double geodesic_residual(const ConformalFactor& factor, std::span<const CurveSample> curve);

/// The straight line point + tau * direction for tau in [tau0, tau1],
/// reparametrized by g-arc length (exact derivatives), n samples.
std::vector<CurveSample> line_samples(const ConformalFactor& factor, const Vec3& point, const Vec3& direction,
                                      double tau0, double tau1, int n);

/// The circle of radius R about the origin in the x3 = 0 plane, by g-arc length,
/// n samples over one turn.
std::vector<CurveSample> origin_circle_samples(const ConformalFactor& factor, double radius, int n);

}  // namespace radialgeo
