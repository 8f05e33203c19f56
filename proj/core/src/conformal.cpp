#include "radialgeo/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "radialgeo/errors.hpp"

namespace radialgeo {

namespace {

double gauss_closed_form(const FactorValue& fv, const EuclideanCurvature& c, double k) {
  const auto [h, dh, d2h] = fv;
  return h * h * k + 4.0 * (h * d2h - dh * dh) * (c.t - c.nu * c.nu) + 4.0 * h * dh * (1.0 + c.H * c.nu);
}

}  // namespace

ConformalCurvature transform(const ConformalFactor& factor, const EuclideanCurvature& eucl) {
  const FactorValue fv = factor.eval(eucl.t);
  // <N, grad F> = 2 h'(t) <N, X>
  const double n_grad = 2.0 * fv.dh * eucl.nu;
  ConformalCurvature out;
  out.lambda1_t = fv.h * eucl.lambda1 - n_grad;
  out.lambda2_t = fv.h * eucl.lambda2 - n_grad;
  out.mean_t = -0.5 * (out.lambda1_t + out.lambda2_t);
  out.extrinsic_t = out.lambda1_t * out.lambda2_t;
  out.gauss_t = gauss_closed_form(fv, eucl, eucl.K);
  out.w1 = out.extrinsic_t + out.mean_t * out.mean_t - out.gauss_t;
  out.w2 = 2.0 * out.extrinsic_t - out.gauss_t;
  return out;
}

double gauss_conformal(const ConformalFactor& factor, const EuclideanCurvature& eucl, double intrinsic_k) {
  const double scale = std::max(std::abs(eucl.E), std::abs(eucl.G));
  if (std::abs(eucl.E - eucl.G) > 1e-8 * scale || std::abs(eucl.Fmix) > 1e-8 * scale) {
    std::ostringstream msg;
    msg << "point is not isothermal (E = " << eucl.E << ", G = " << eucl.G << ", F = " << eucl.Fmix << ")";
    throw NotIsothermalError(msg.str());
  }
  return gauss_closed_form(factor.eval(eucl.t), eucl, intrinsic_k);
}

double mean_conformal_formula(const ConformalFactor& factor, const EuclideanCurvature& eucl) {
  const FactorValue fv = factor.eval(eucl.t);
  return fv.h * eucl.H + 2.0 * fv.dh * eucl.nu;
}

WeingartenFunctionals weingarten_functionals(const ConformalFactor& factor, const EuclideanCurvature& eucl) {
  if (factor.kind() != FactorKind::RadialModel)
    throw DomainError("Weingarten functionals are defined for the radial model factor only");
  if (!factor.in_domain(eucl.t)) throw DomainError("Weingarten functionals need a point off the origin");
  WeingartenFunctionals w;
  w.w1 = eucl.H * (eucl.t * eucl.H + 2.0 * eucl.nu);
  w.w2 = eucl.t * eucl.K + 2.0 * eucl.nu * eucl.H;
  w.edsghw_residual = w.w2;
  return w;
}

InversionMeanCurvatureReport inversion_mean_curvature_check(const EuclideanCurvature& eucl,
                                                            const EuclideanCurvature& inverted_eucl) {
  const Vec3 predicted = predicted_inverted_normal(eucl);
  const EuclideanCurvature oriented =
      inverted_eucl.N.dot(predicted) >= 0.0 ? inverted_eucl : inverted_eucl.flipped();
  InversionMeanCurvatureReport r;
  r.h_inverted = oriented.H;
  r.residual_plus = std::abs(eucl.t * eucl.H + 2.0 * eucl.nu - oriented.H);
  r.residual_minus = std::abs(eucl.t * eucl.H - 2.0 * eucl.nu - oriented.H);
  r.plus_matches = r.residual_plus <= r.residual_minus;
  return r;
}

}  // namespace radialgeo
