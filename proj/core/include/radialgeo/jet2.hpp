#pragma once

#include <cmath>

namespace radialgeo {

// Truncated second-order Taylor data of a scalar function of two parameters
// (u, v): value, both first partials and the three distinct second partials.
// Arithmetic propagates the jet exactly through the chain rule, so a map
// written once in terms of Jet2 yields the full second-order jet of a surface.
struct Jet2 {
  double val = 0.0;
  double du = 0.0;
  double dv = 0.0;
  double duu = 0.0;
  double duv = 0.0;
  double dvv = 0.0;

  static constexpr Jet2 constant(double c) { return {c, 0, 0, 0, 0, 0}; }
  static constexpr Jet2 variable_u(double u) { return {u, 1, 0, 0, 0, 0}; }
  static constexpr Jet2 variable_v(double v) { return {v, 0, 1, 0, 0, 0}; }

  // Composition with a scalar function g given g(val), g'(val), g''(val).
  [[nodiscard]] constexpr Jet2 compose(double g, double dg, double d2g) const {
    return {g,
            dg * du,
            dg * dv,
            d2g * du * du + dg * duu,
            d2g * du * dv + dg * duv,
            d2g * dv * dv + dg * dvv};
  }

  constexpr Jet2& operator+=(const Jet2& o) {
    val += o.val;
    du += o.du;
    dv += o.dv;
    duu += o.duu;
    duv += o.duv;
    dvv += o.dvv;
    return *this;
  }
  constexpr Jet2& operator-=(const Jet2& o) {
    val -= o.val;
    du -= o.du;
    dv -= o.dv;
    duu -= o.duu;
    duv -= o.duv;
    dvv -= o.dvv;
    return *this;
  }
  constexpr Jet2& operator*=(double s) {
    val *= s;
    du *= s;
    dv *= s;
    duu *= s;
    duv *= s;
    dvv *= s;
    return *this;
  }
};

constexpr Jet2 operator-(const Jet2& a) { return {-a.val, -a.du, -a.dv, -a.duu, -a.duv, -a.dvv}; }
constexpr Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
constexpr Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
constexpr Jet2 operator+(Jet2 a, double c) {
  a.val += c;
  return a;
}
constexpr Jet2 operator+(double c, Jet2 a) { return a + c; }
constexpr Jet2 operator-(Jet2 a, double c) {
  a.val -= c;
  return a;
}
constexpr Jet2 operator-(double c, const Jet2& a) { return -a + c; }
constexpr Jet2 operator*(Jet2 a, double s) { return a *= s; }
constexpr Jet2 operator*(double s, Jet2 a) { return a *= s; }

constexpr Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.val * b.val,
          a.du * b.val + a.val * b.du,
          a.dv * b.val + a.val * b.dv,
          a.duu * b.val + 2.0 * a.du * b.du + a.val * b.duu,
          a.duv * b.val + a.du * b.dv + a.dv * b.du + a.val * b.duv,
          a.dvv * b.val + 2.0 * a.dv * b.dv + a.val * b.dvv};
}

constexpr Jet2 reciprocal(const Jet2& a) {
  const double r = 1.0 / a.val;
  return a.compose(r, -r * r, 2.0 * r * r * r);
}

constexpr Jet2 operator/(const Jet2& a, const Jet2& b) { return a * reciprocal(b); }
constexpr Jet2 operator/(const Jet2& a, double s) { return a * (1.0 / s); }
constexpr Jet2 operator/(double c, const Jet2& b) { return c * reciprocal(b); }

inline Jet2 sin(const Jet2& a) {
  const double s = std::sin(a.val);
  return a.compose(s, std::cos(a.val), -s);
}
inline Jet2 cos(const Jet2& a) {
  const double c = std::cos(a.val);
  return a.compose(c, -std::sin(a.val), -c);
}
inline Jet2 sinh(const Jet2& a) {
  const double s = std::sinh(a.val);
  return a.compose(s, std::cosh(a.val), s);
}
inline Jet2 cosh(const Jet2& a) {
  const double c = std::cosh(a.val);
  return a.compose(c, std::sinh(a.val), c);
}
inline Jet2 tanh(const Jet2& a) {
  const double th = std::tanh(a.val);
  const double sech2 = 1.0 - th * th;
  return a.compose(th, sech2, -2.0 * th * sech2);
}
inline Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.val);
  return a.compose(e, e, e);
}
inline Jet2 log(const Jet2& a) { return a.compose(std::log(a.val), 1.0 / a.val, -1.0 / (a.val * a.val)); }
inline Jet2 sqrt(const Jet2& a) {
  const double s = std::sqrt(a.val);
  return a.compose(s, 0.5 / s, -0.25 / (s * a.val));
}
inline Jet2 pow(const Jet2& a, double p) {
  const double x = a.val;
  return a.compose(std::pow(x, p), p * std::pow(x, p - 1.0), p * (p - 1.0) * std::pow(x, p - 2.0));
}

}  // namespace radialgeo
