#pragma once

#include <array>
#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radialgeo/jet2.hpp"
#include "radialgeo/metric.hpp"
#include "radialgeo/profile.hpp"
#include "radialgeo/types.hpp"

namespace radialgeo {

/// |X_u x X_v| at or below this is treated as a singular point.
inline constexpr double kRegularityThreshold = 1e-10;

struct ParamDomain {
  double u0 = 0.0;
  double u1 = 1.0;
  double v0 = 0.0;
  double v1 = 1.0;

  [[nodiscard]] bool contains(double u, double v) const;
};

/// Sample counts along u and v; points include both ends of each interval.
struct Grid {
  int nu = 10;
  int nv = 10;
};

/// Grid points in u-major order (u outer, v inner).
std::vector<std::pair<double, double>> grid_points(const ParamDomain& domain, const Grid& grid);

enum class SurfaceKind {
  SphereOrigin,
  SphereGeneral,
  PlaneThroughOrigin,
  Cone,
  Catenoid,
  Helicoid,
  Enneper,
  Rotation,
  Inverted,
  Custom,
};

std::string to_string(SurfaceKind kind);

/// Holomorphic pair (f, g) and derivatives for the Weierstrass-Enneper generator.
struct WeierstrassData {
  using Fn = std::function<std::complex<double>(std::complex<double>)>;
  Fn f, df, g, dg;
};

/// X(z) = Re int_0^z (f(1-g^2)/2, i f(1+g^2)/2, f g) dzeta along the segment
/// 0 -> z (composite Simpson, `panels` even). Derivatives come exactly from
/// the integrand, so only the value carries quadrature error.
std::array<Jet2, 3> weierstrass_jet(const WeierstrassData& data, double u, double v, int panels = 16);

/// An immutable parametrized surface: a map (u,v) -> R^3 written in Jet2
/// arithmetic, so evaluation yields the exact second-order jet.
class SurfaceSpec {
 public:
  using Map = std::function<std::array<Jet2, 3>(const Jet2& u, const Jet2& v)>;

  /// Rotation parametrization of the sphere |x| = R (phi = sqrt(R^2 - u^2)).
  static SurfaceSpec sphere_origin(double radius);
  static SurfaceSpec sphere_general(const Vec3& center, double radius);
  /// Plane through the origin with the given normal, spanned by an orthonormal pair.
  static SurfaceSpec plane_through_origin(const Vec3& normal, ParamDomain domain = {-1.0, 1.0, -1.0, 1.0});
  /// Cone with vertex at the origin and axis e3: X = u (sin a cos v, sin a sin v, cos a).
  static SurfaceSpec cone(double half_angle, ParamDomain domain = {0.2, 2.0, 0.0, 6.283185307179586});
  /// Isothermal catenoid c (cosh u cos v, cosh u sin v, u).
  static SurfaceSpec catenoid(double scale = 1.0, ParamDomain domain = {-1.0, 1.0, 0.0, 6.283185307179586});
  /// Isothermal helicoid c (sinh u cos v, sinh u sin v, v).
  static SurfaceSpec helicoid(double scale = 1.0, ParamDomain domain = {-1.0, 1.0, -3.141592653589793, 3.141592653589793});
  /// Enneper's surface from the Weierstrass data f = 1, g = z.
  static SurfaceSpec enneper(ParamDomain domain = {-1.0, 1.0, -1.0, 1.0});
  static SurfaceSpec rotation(RotationProfile profile, double v0 = 0.0, double v1 = 6.283185307179586);
  /// Image of `inner` under x -> x / <x,x>, on the same parameter domain.
  static SurfaceSpec inverted(const SurfaceSpec& inner);
  static SurfaceSpec custom(std::string name, Map map, ParamDomain domain);

  [[nodiscard]] SurfaceKind kind() const { return kind_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const ParamDomain& domain() const { return domain_; }
  [[nodiscard]] const std::map<std::string, double>& params() const { return params_; }
  [[nodiscard]] const SurfaceSpec* inner() const { return inner_.get(); }
  [[nodiscard]] const std::optional<RotationProfile>& profile() const { return profile_; }

  [[nodiscard]] SurfaceSpec with_domain(const ParamDomain& domain) const;

  /// Raw evaluation without domain or regularity checks.
  [[nodiscard]] std::array<Jet2, 3> evaluate(double u, double v) const;

 private:
  SurfaceSpec(SurfaceKind kind, std::string name, Map map, ParamDomain domain);

  SurfaceKind kind_;
  std::string name_;
  Map map_;
  ParamDomain domain_;
  std::map<std::string, double> params_;
  std::shared_ptr<const SurfaceSpec> inner_;
  std::optional<RotationProfile> profile_;
};

struct SurfaceJet {
  Vec3 X, Xu, Xv, Xuu, Xuv, Xvv;
};

/// Euclidean invariants of a surface point.
///
/// lambda1, lambda2 follow the rotation-surface convention lambda1 = phi''/a^3,
/// lambda2 = -1/(phi a): they are the eigenvalues of -I^{-1} II, so the
/// principal curvatures are -lambda_i and H = -(lambda1 + lambda2)/2 is their
/// mean. With this H, X_uu + X_vv = 2 E H N in isothermal parameters.
struct EuclideanCurvature {
  double E = 0, Fmix = 0, G = 0;
  double e = 0, f = 0, g = 0;
  Vec3 X = Vec3::Zero();
  Vec3 N = Vec3::UnitZ();
  double lambda1 = 0, lambda2 = 0;
  double H = 0, K = 0;
  double t = 0;   // <X,X>
  double nu = 0;  // <X,N>

  /// Same point with the opposite normal.
  [[nodiscard]] EuclideanCurvature flipped() const;
};

/// Throws DomainError outside the parameter domain, RegularityError at singular points.
SurfaceJet jet(const SurfaceSpec& spec, double u, double v);

SurfaceJet to_surface_jet(const std::array<Jet2, 3>& x);

EuclideanCurvature euclidean_curvatures(const SurfaceJet& j);

/// Weingarten matrix -I^{-1} II in the (u,v) basis; its eigenvalues are lambda1, lambda2.
Mat2 weingarten_matrix(const EuclideanCurvature& c);

struct IsothermalReport {
  double max_e_minus_g = 0.0;
  double max_fmix = 0.0;
  double max_e = 0.0;
  bool isothermal = false;
};

IsothermalReport isothermal_check(const SurfaceSpec& spec, const Grid& grid);

/// Gauss curvature of the metric (E du^2 + E dv^2)/h(t)^2 from second
/// differences of its log conformal density. With the Euclidean factor this
/// is the intrinsic curvature of the surface itself.
double intrinsic_gauss_at(const SurfaceSpec& spec, double u, double v, const ConformalFactor& factor,
                          double step = 1e-4);

/// Per-point intrinsic curvature over the grid (u-major). Throws
/// NotIsothermalError unless the surface passes isothermal_check.
std::vector<double> intrinsic_gauss(const SurfaceSpec& spec, const Grid& grid,
                                    const ConformalFactor& factor = ConformalFactor::euclidean());

SurfaceSpec invert_surface(const SurfaceSpec& spec);

/// Gauss map of the inverted surface predicted from the original point:
/// N_I = -2 <X,N>/<X,X> X + N.
Vec3 predicted_inverted_normal(const EuclideanCurvature& c);

}  // namespace radialgeo
