#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>

#include "radialgeo/types.hpp"

namespace radialgeo {

/// h(t) and its first two derivatives with respect to t = <x,x>.
struct FactorValue {
  double h = 1.0;
  double dh = 0.0;
  double d2h = 0.0;
};

enum class FactorKind { Euclidean, RadialModel, ExpModel, Custom };

/// Where the factor may be evaluated. `Positive` excludes the origin
/// (t below kMinRadius^2 is rejected).
enum class FactorDomain { NonNegative, Positive };

/// Points closer than this to the origin are outside a Positive domain.
inline constexpr double kMinRadius = 1e-12;

/// Radial conformal factor of the metric delta_ij / h(t)^2, t = |x|^2.
///
/// Built-in kinds are Euclidean (h = 1), RadialModel (h = sqrt t, the S^2 x R
/// model) and ExpModel (h = exp(-t)). Custom factors supply a closed-form
/// triple (h, h', h''); no derivative is computed on their behalf.
class ConformalFactor {
 public:
  using Eval = std::function<FactorValue(double)>;

  static ConformalFactor euclidean();
  static ConformalFactor radial_model();
  static ConformalFactor exp_model();
  static ConformalFactor custom(std::string name, Eval eval, FactorDomain domain = FactorDomain::NonNegative);

  /// Parses "euclidean", "radial", "exp" or "custom:<family>:<args>" where
  /// the family is one of affine:a,b (a + b t), power:c,p (c t^p, t > 0)
  /// or exp:c,k (c e^{k t}). Throws std::invalid_argument on bad input.
  static ConformalFactor parse(const std::string& text);

  [[nodiscard]] FactorKind kind() const { return kind_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] FactorDomain domain() const { return domain_; }

  [[nodiscard]] bool in_domain(double t) const;

  /// Throws DomainError outside the domain or where h vanishes or is not finite.
  [[nodiscard]] FactorValue eval(double t) const;
  [[nodiscard]] FactorValue at(const Vec3& x) const { return eval(x.squaredNorm()); }

 private:
  ConformalFactor(FactorKind kind, std::string name, Eval eval, FactorDomain domain);

  FactorKind kind_;
  std::string name_;
  Eval eval_;
  FactorDomain domain_;
};

/// Gamma^k_{ij} stored as gamma[k][i][j].
struct ChristoffelTable {
  std::array<std::array<std::array<double, 3>, 3>, 3> gamma{};

  [[nodiscard]] double operator()(int k, int i, int j) const { return gamma[k][i][j]; }

  /// Contraction Gamma^k_{ij} a^i b^j.
  [[nodiscard]] Vec3 contract(const Vec3& a, const Vec3& b) const;
};

FactorValue factor_eval(const ConformalFactor& factor, double t);

/// <v,w>_g at x.
double metric_inner(const ConformalFactor& factor, const Vec3& x, const Vec3& v, const Vec3& w);

/// Metric norm |v|_g at x.
double metric_norm(const ConformalFactor& factor, const Vec3& x, const Vec3& v);

/// Gradient of F(x) = h(|x|^2), i.e. 2 h'(t) x.
Vec3 factor_gradient(const ConformalFactor& factor, const Vec3& x);

ChristoffelTable christoffel(const ConformalFactor& factor, const Vec3& x);

/// Sectional curvature of the coordinate plane (e_i, e_j), axes 0..2, i != j,
/// from the radial closed form in (h, h', h'').
double sectional_curvature(const ConformalFactor& factor, const Vec3& x, int i, int j);

/// The same curvature assembled from the general conformal expression
/// [(F_i/F)_i + (F_j/F)_j - (F_k/F)^2] F^2 with F_i = 2 x_i h'.
double sectional_curvature_general(const ConformalFactor& factor, const Vec3& x, int i, int j);

/// Length in the ambient metric of the polyline through `samples`
/// (composite Simpson, one panel per segment).
double curve_length(const ConformalFactor& factor, std::span<const Vec3> samples);

}  // namespace radialgeo
