#include "radialgeo/profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "radialgeo/errors.hpp"

namespace radialgeo {

RotationProfile::RotationProfile(std::string name, Sampler sampler, double u_min, double u_max)
    : name_(std::move(name)), sampler_(std::move(sampler)), u_min_(u_min), u_max_(u_max) {
  if (!(u_min < u_max)) throw std::invalid_argument("profile interval must satisfy u_min < u_max");
}

RotationProfile RotationProfile::sphere(double radius) {
  if (!(radius > 0.0)) throw DomainError("sphere radius must be positive");
  const double r2 = radius * radius;
  const double shrink = 1e-3 * 2.0 * radius;
  RotationProfile p("sphere",
                    [r2](double u) {
                      const double phi = std::sqrt(r2 - u * u);
                      return ProfileValue{phi, -u / phi, -r2 / (phi * phi * phi)};
                    },
                    -radius + shrink, radius - shrink);
  p.params_ = {{"radius", radius}};
  return p;
}

RotationProfile RotationProfile::cosine(double base, double amplitude, double u_min, double u_max) {
  if (!(base > std::abs(amplitude))) throw DomainError("cosine profile must stay positive");
  RotationProfile p("cosine",
                    [base, amplitude](double u) {
                      return ProfileValue{base + amplitude * std::cos(u), -amplitude * std::sin(u),
                                          -amplitude * std::cos(u)};
                    },
                    u_min, u_max);
  p.params_ = {{"base", base}, {"amplitude", amplitude}, {"u_min", u_min}, {"u_max", u_max}};
  return p;
}

RotationProfile RotationProfile::from_nodes(std::string name, std::vector<double> u, std::vector<ProfileValue> values) {
  if (u.size() < 2 || u.size() != values.size()) throw std::invalid_argument("need at least two matching profile nodes");
  for (std::size_t i = 1; i < u.size(); ++i)
    if (!(u[i] > u[i - 1])) throw std::invalid_argument("profile nodes must be strictly increasing");

  const auto nodes = std::make_shared<const std::vector<double>>(u);
  const auto vals = std::make_shared<const std::vector<ProfileValue>>(values);
  Sampler sampler = [nodes, vals](double x) {
    const auto& us = *nodes;
    const auto& vs = *vals;
    auto it = std::upper_bound(us.begin(), us.end(), x);
    std::size_t hi = static_cast<std::size_t>(it - us.begin());
    hi = std::clamp<std::size_t>(hi, 1, us.size() - 1);
    const std::size_t lo = hi - 1;
    const double h = us[hi] - us[lo];
    const double s = (x - us[lo]) / h;
    const ProfileValue& a = vs[lo];
    const ProfileValue& b = vs[hi];
    // Quintic matching value, slope and curvature at both ends.
    const double c0 = a.phi;
    const double c1 = h * a.dphi;
    const double c2 = 0.5 * h * h * a.d2phi;
    const double p = b.phi - (c0 + c1 + c2);
    const double d = h * b.dphi - (c1 + 2.0 * c2);
    const double acc = h * h * b.d2phi - 2.0 * c2;
    const double c3 = 10.0 * p - 4.0 * d + 0.5 * acc;
    const double c4 = -15.0 * p + 7.0 * d - acc;
    const double c5 = 6.0 * p - 3.0 * d + 0.5 * acc;
    const double value = c0 + s * (c1 + s * (c2 + s * (c3 + s * (c4 + s * c5))));
    const double slope = c1 + s * (2.0 * c2 + s * (3.0 * c3 + s * (4.0 * c4 + s * 5.0 * c5)));
    const double curv = 2.0 * c2 + s * (6.0 * c3 + s * (12.0 * c4 + s * 20.0 * c5));
    return ProfileValue{value, slope / h, curv / (h * h)};
  };
  RotationProfile out(std::move(name), std::move(sampler), u.front(), u.back());
  out.nodes_ = std::move(u);
  out.node_values_ = std::move(values);
  return out;
}

ProfileValue RotationProfile::operator()(double u) const {
  // Tolerate rounding at the interval ends of grids built from u_min/u_max.
  const double slack = 1e-12 * (u_max_ - u_min_);
  if (!(u >= u_min_ - slack && u <= u_max_ + slack)) {
    std::ostringstream msg;
    msg << "u = " << u << " outside profile interval [" << u_min_ << ", " << u_max_ << "]";
    throw DomainError(msg.str());
  }
  const ProfileValue v = sampler_(u);
  if (!(v.phi > 0.0) || !std::isfinite(v.dphi) || !std::isfinite(v.d2phi)) {
    std::ostringstream msg;
    msg << "profile '" << name_ << "' degenerates at u = " << u;
    throw DomainError(msg.str());
  }
  return v;
}

}  // namespace radialgeo
