#pragma once

#include "radialgeo/metric.hpp"
#include "radialgeo/surface.hpp"

namespace radialgeo {

/// Curvatures of a surface point measured in the conformal ambient metric.
///
/// lambda1_t, lambda2_t are F lambda_i - <N, grad F>; their negatives are the
/// principal curvatures, so mean_t = -(lambda1_t + lambda2_t)/2 = F H + <N, grad F>.
struct ConformalCurvature {
  double lambda1_t = 0.0;
  double lambda2_t = 0.0;
  double mean_t = 0.0;       // H~
  double extrinsic_t = 0.0;  // K~_E = lambda1_t * lambda2_t
  double gauss_t = 0.0;      // K~, intrinsic curvature of the induced metric
  double w1 = 0.0;           // K~_E + H~^2 - K~
  double w2 = 0.0;           // 2 K~_E - K~
};

/// Transforms Euclidean data at a point into conformal data. K~ uses the
/// closed form of gauss_conformal with the extrinsic K; every term there is a
/// parametrization invariant, so no isothermal precondition is imposed here.
ConformalCurvature transform(const ConformalFactor& factor, const EuclideanCurvature& eucl);

/// K~ = F^2 K + 4 (h h'' - h'^2)(t - nu^2) + 4 h h' (1 + H nu), with K taken
/// from `intrinsic_k`. Throws NotIsothermalError unless E = G and F = 0 at
/// the point (relative tolerance 1e-8).
double gauss_conformal(const ConformalFactor& factor, const EuclideanCurvature& eucl, double intrinsic_k);

/// The printed mean-curvature transform F H + <N, grad F>; equals mean_t.
double mean_conformal_formula(const ConformalFactor& factor, const EuclideanCurvature& eucl);

struct WeingartenFunctionals {
  double w1 = 0.0;               // H (t H + 2 nu)
  double w2 = 0.0;               // t K + 2 nu H
  double edsghw_residual = 0.0;  // <X,X> K + 2 <X,N> H
};

/// Class-1 and class-2 Weingarten functionals of the radial model evaluated
/// from Euclidean data. Throws DomainError unless `factor` is the radial model
/// and the point is off the origin.
WeingartenFunctionals weingarten_functionals(const ConformalFactor& factor, const EuclideanCurvature& eucl);

struct InversionMeanCurvatureReport {
  double h_inverted = 0.0;      // H_I, oriented by the predicted inverted normal
  double residual_plus = 0.0;   // |t H + 2 nu - H_I|
  double residual_minus = 0.0;  // |t H - 2 nu - H_I|
  bool plus_matches = false;    // residual_plus <= residual_minus
};

/// Compares the mean curvature of the inverted immersion with the two
/// candidate expressions built from the original point.
InversionMeanCurvatureReport inversion_mean_curvature_check(const EuclideanCurvature& eucl,
                                                            const EuclideanCurvature& inverted_eucl);

}  // namespace radialgeo
