#include "radialgeo/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <sstream>
#include <thread>

#include "radialgeo/errors.hpp"
#include "radialgeo/ode.hpp"

namespace radialgeo {

namespace {

using State6 = ode::State<6>;

State6 pack(const GeodesicState& s) {
  return {s.x.x(), s.x.y(), s.x.z(), s.xdot.x(), s.xdot.y(), s.xdot.z()};
}

GeodesicState unpack(const State6& y) { return {{y[0], y[1], y[2]}, {y[3], y[4], y[5]}}; }

bool finite(const GeodesicState& s) { return s.x.allFinite() && s.xdot.allFinite(); }

}  // namespace

double g_speed(const ConformalFactor& factor, const GeodesicState& state) {
  return metric_norm(factor, state.x, state.xdot);
}

Vec3 geodesic_rhs(const ConformalFactor& factor, const GeodesicState& state) {
  const FactorValue fv = factor.at(state.x);
  const double ratio = fv.dh / fv.h;
  const Vec3& x = state.x;
  const Vec3& v = state.xdot;
  const double speed2 = v.squaredNorm();
  const double radial = x.dot(v);
  Vec3 acc;
  for (int k = 0; k < 3; ++k) {
    const double others_sq = speed2 - v[k] * v[k];
    const double others_radial = radial - x[k] * v[k];
    acc[k] = -2.0 * x[k] * ratio * (others_sq - v[k] * v[k]) + 4.0 * ratio * v[k] * others_radial;
  }
  return acc;
}

Vec3 christoffel_acceleration(const ConformalFactor& factor, const GeodesicState& state) {
  return -christoffel(factor, state.x).contract(state.xdot, state.xdot);
}

Trajectory integrate(const ConformalFactor& factor, GeodesicState start, double length, double step) {
  if (!(step > 0.0)) throw StepError("integration step must be positive");
  if (!(length >= 0.0)) throw StepError("integration length must be non-negative");
  const double speed = g_speed(factor, start);
  if (!(speed > 0.0) || !std::isfinite(speed)) throw ParametrizationError("initial velocity must be nonzero");
  start.xdot /= speed;

  const auto rhs = [&factor](double, const State6& y) {
    const GeodesicState s = unpack(y);
    const Vec3 a = geodesic_rhs(factor, s);
    return State6{s.xdot.x(), s.xdot.y(), s.xdot.z(), a.x(), a.y(), a.z()};
  };

  const auto steps = static_cast<std::size_t>(std::ceil(length / step - 1e-9));
  Trajectory traj;
  traj.s.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.s.push_back(0.0);
  traj.states.push_back(start);

  State6 y = pack(start);
  double s = 0.0;
  for (std::size_t n = 0; n < steps; ++n) {
    const double h = std::min(step, length - s);
    State6 next;
    try {
      next = ode::rk4_step<6>(rhs, s, y, h);
    } catch (const DomainError& err) {
      traj.truncated = true;
      traj.note = err.what();
      break;
    }
    const GeodesicState st = unpack(next);
    if (!finite(st) || !factor.in_domain(st.x.squaredNorm())) {
      traj.truncated = true;
      std::ostringstream msg;
      msg << "left the factor domain near s = " << s + h;
      traj.note = msg.str();
      break;
    }
    if (const double drift = std::abs(g_speed(factor, st) - 1.0); !(drift <= kSpeedDriftLimit)) {
      traj.truncated = true;
      std::ostringstream msg;
      msg << "g-speed drifted by " << drift << " near s = " << s + h << " (step too coarse or singular approach)";
      traj.note = msg.str();
      break;
    }
    y = next;
    s = (n + 1 == steps) ? length : s + h;
    traj.s.push_back(s);
    traj.states.push_back(st);
  }
  return traj;
}

std::vector<Trajectory> integrate_batch(const ConformalFactor& factor, std::span<const GeodesicState> starts,
                                        double length, double step) {
  std::vector<Trajectory> out(starts.size());
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), starts.size()));
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < starts.size(); i += workers) out[i] = integrate(factor, starts[i], length, step);
    }));
  }
  for (auto& job : jobs) job.get();
  return out;
}

double geodesic_residual(const ConformalFactor& factor, std::span<const CurveSample> curve) {
  double worst = 0.0;
  for (const CurveSample& c : curve) {
    const double speed = metric_norm(factor, c.x, c.d1);
    if (std::abs(speed - 1.0) > 1e-4) {
      std::ostringstream msg;
      msg << "curve sample at |x| = " << c.x.norm() << " has g-speed " << speed;
      throw ParametrizationError(msg.str());
    }
    const Vec3 r = c.d2 + christoffel(factor, c.x).contract(c.d1, c.d1);
    worst = std::max(worst, r.norm());
  }
  return worst;
}

std::vector<CurveSample> line_samples(const ConformalFactor& factor, const Vec3& point, const Vec3& direction,
                                      double tau0, double tau1, int n) {
  if (n < 2) throw std::invalid_argument("need at least two samples");
  const Vec3 d = direction.normalized();
  std::vector<CurveSample> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double tau = tau0 + (tau1 - tau0) * static_cast<double>(i) / (n - 1);
    const Vec3 x = point + tau * d;
    const FactorValue fv = factor.at(x);
    // ds = dtau / F, so d/ds = F d/dtau and dF/dtau = 2 h' <x, d>.
    out.push_back({x, fv.h * d, 2.0 * fv.h * fv.dh * x.dot(d) * d});
  }
  return out;
}

std::vector<CurveSample> origin_circle_samples(const ConformalFactor& factor, double radius, int n) {
  if (n < 1) throw std::invalid_argument("need at least one sample");
  if (!(radius > 0.0)) throw DomainError("circle radius must be positive");
  const double f = std::abs(factor.eval(radius * radius).h);
  const double period = 2.0 * std::numbers::pi * radius / f;
  std::vector<CurveSample> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double s = period * static_cast<double>(i) / n;
    const double c = std::cos(f * s / radius);
    const double sn = std::sin(f * s / radius);
    out.push_back({{radius * c, radius * sn, 0.0}, {-f * sn, f * c, 0.0}, {-f * f / radius * c, -f * f / radius * sn, 0.0}});
  }
  return out;
}

}  // namespace radialgeo
