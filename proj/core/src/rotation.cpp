#include "radialgeo/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "radialgeo/errors.hpp"
#include "radialgeo/ode.hpp"

namespace radialgeo {

namespace {

constexpr double kSingularThreshold = 1e-10;

// phi'' from the ODE at (u, phi, phi').
double profile_curvature(const ConformalFactor& factor, double c0, double u, double phi, double dphi) {
  if (!(phi > 0.0)) {
    std::ostringstream msg;
    msg << "profile reached phi = " << phi << " at u = " << u;
    throw DomainError(msg.str());
  }
  const auto [f, df, d2f] = factor.eval(phi * phi + u * u);
  const double a2 = 1.0 + dphi * dphi;
  const double support = -phi + u * dphi;
  const double coeff = f + 2.0 * phi * df * support;
  if (std::abs(coeff) < kSingularThreshold) {
    std::ostringstream msg;
    msg << "phi'' coefficient " << coeff << " is singular at u = " << u;
    throw SingularCoefficientError(msg.str());
  }
  return (-c0 * a2 * a2 * phi / coeff + 2.0 * a2 * df * support) / f;
}

void integrate_branch(const ConformalFactor& factor, double c0, double u, ode::State<2> y, double u_end, double step,
                      std::vector<double>& us, std::vector<ProfileValue>& values) {
  const auto rhs = [&](double x, const ode::State<2>& s) {
    return ode::State<2>{s[1], profile_curvature(factor, c0, x, s[0], s[1])};
  };
  const double dir = u_end >= u ? 1.0 : -1.0;
  const auto steps = static_cast<std::size_t>(std::ceil(std::abs(u_end - u) / step - 1e-9));
  for (std::size_t n = 0; n < steps; ++n) {
    const double h = dir * std::min(step, std::abs(u_end - u));
    y = ode::rk4_step<2>(rhs, u, y, h);
    u = (n + 1 == steps) ? u_end : u + h;
    us.push_back(u);
    values.push_back({y[0], y[1], profile_curvature(factor, c0, u, y[0], y[1])});
  }
}

}  // namespace

double extrinsic_residual(const ConformalFactor& factor, const ProfileValue& p, double u, double c0) {
  const auto [f, df, d2f] = factor.eval(p.phi * p.phi + u * u);
  const double a2 = 1.0 + p.dphi * p.dphi;
  const double support = -p.phi + u * p.dphi;
  return (f + 2.0 * p.phi * df * support) * (f * p.d2phi - 2.0 * a2 * df * support) + c0 * a2 * a2 * p.phi;
}

double extrinsic_residual(const ConformalFactor& factor, const RotationProfile& profile, double u, double c0) {
  return extrinsic_residual(factor, profile(u), u, c0);
}

double e3_residual(const ProfileValue& p, double u, double c0) {
  const double a2 = 1.0 + p.dphi * p.dphi;
  const double t = u * u + p.phi * p.phi;
  const double bracket = 1.0 + 2.0 * p.phi * p.phi - 2.0 * u * p.phi * p.dphi;
  return bracket * (p.d2phi - 2.0 * a2 * (p.phi - u * p.dphi)) + c0 * a2 * a2 * p.phi * std::exp(2.0 * t);
}

double e3_residual(const RotationProfile& profile, double u, double c0) { return e3_residual(profile(u), u, c0); }

double e3_residual_printed(const ProfileValue& p, double u, double c0) {
  const double a2 = 1.0 + p.dphi * p.dphi;
  const double t = u * u + p.phi * p.phi;
  const double bracket = 1.0 + 2.0 * p.phi * p.phi - 2.0 * u * p.phi * p.dphi;
  return bracket * p.d2phi + a2 * (4.0 * p.phi * p.dphi * p.dphi + 2.0 * p.phi + 2.0 * u * p.dphi) +
         c0 * a2 * a2 * p.phi * std::exp(2.0 * t);
}

double curvature_radius_function(const ConformalFactor& factor, double t) {
  if (!(t > 0.0)) throw DomainError("w(t) needs t > 0");
  const auto [f, df, d2f] = factor.eval(t);
  const double q = (f - 2.0 * df * t) / std::sqrt(t);
  return q * q;
}

double sphere_extrinsic(const ConformalFactor& factor, double radius) {
  if (!(radius > 0.0)) throw DomainError("sphere radius must be positive");
  return curvature_radius_function(factor, radius * radius);
}

RadiusRoots radius_for_curvature(const ConformalFactor& factor, double c0) {
  if (!(c0 > 0.0)) throw DomainError("prescribed extrinsic curvature must be positive");

  std::vector<double> ts(kScanNodes);
  std::vector<double> gap(kScanNodes);
  const double log_lo = std::log(kScanTMin);
  const double log_hi = std::log(kScanTMax);
  RadiusRoots out;
  out.w_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kScanNodes; ++i) {
    ts[i] = std::exp(log_lo + (log_hi - log_lo) * i / (kScanNodes - 1));
    double w = std::numeric_limits<double>::quiet_NaN();
    try {
      w = curvature_radius_function(factor, ts[i]);
    } catch (const DomainError&) {
    }
    if (std::isfinite(w)) out.w_min = std::min(out.w_min, w);
    gap[i] = w - c0;
  }
  ts.front() = kScanTMin;
  ts.back() = kScanTMax;

  for (int i = 0; i + 1 < kScanNodes; ++i) {
    if (!std::isfinite(gap[i]) || !std::isfinite(gap[i + 1])) continue;
    if (gap[i] == 0.0) {
      out.brackets.emplace_back(ts[i], ts[i]);
    } else if ((gap[i] < 0.0) != (gap[i + 1] < 0.0) && gap[i + 1] != 0.0) {
      out.brackets.emplace_back(ts[i], ts[i + 1]);
    }
  }
  if (std::isfinite(gap.back()) && gap.back() == 0.0) out.brackets.emplace_back(ts.back(), ts.back());

  if (out.brackets.empty()) {
    std::ostringstream msg;
    msg << "no sign change of w(t) - c0 on [" << kScanTMin << ", " << kScanTMax << "] for c0 = " << c0;
    throw NoBracketError(msg.str());
  }
  if (!std::isfinite(gap.front()) || gap.front() < 0.0) {
    std::ostringstream msg;
    msg << "w(" << kScanTMin << ") < c0 = " << c0 << "; factor '" << factor.name()
        << "' does not blow up at the origin on the scan range";
    throw HypothesisError(msg.str());
  }

  for (const auto& [lo0, hi0] : out.brackets) {
    double lo = lo0;
    double hi = hi0;
    double g_lo = curvature_radius_function(factor, lo) - c0;
    double t = lo;
    if (lo != hi) {
      for (int iter = 0; iter < 200; ++iter) {
        t = 0.5 * (lo + hi);
        const double g = curvature_radius_function(factor, t) - c0;
        if (std::abs(g) <= 1e-12 * c0 || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * t) break;
        if ((g < 0.0) == (g_lo < 0.0)) {
          lo = t;
          g_lo = g;
        } else {
          hi = t;
        }
      }
    }
    out.roots.push_back(std::sqrt(t));
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.smallest = out.roots.front();
  return out;
}

RotationProfile solve_profile(const ConformalFactor& factor, double c0, const ProfileStart& start, double u_min,
                              double u_max, double step) {
  if (!(step > 0.0)) throw StepError("profile step must be positive");
  if (!(u_min <= start.u0 && start.u0 <= u_max && u_min < u_max))
    throw std::invalid_argument("start point must lie in [u_min, u_max]");

  const ProfileValue first{start.phi, start.dphi, profile_curvature(factor, c0, start.u0, start.phi, start.dphi)};

  std::vector<double> back_u;
  std::vector<ProfileValue> back_v;
  integrate_branch(factor, c0, start.u0, {start.phi, start.dphi}, u_min, step, back_u, back_v);
  std::vector<double> us(back_u.rbegin(), back_u.rend());
  std::vector<ProfileValue> vs(back_v.rbegin(), back_v.rend());
  us.push_back(start.u0);
  vs.push_back(first);
  integrate_branch(factor, c0, start.u0, {start.phi, start.dphi}, u_max, step, us, vs);

  return RotationProfile::from_nodes("solved", std::move(us), std::move(vs));
}

}  // namespace radialgeo
