#include "radialgeo/surface.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "radialgeo/errors.hpp"

namespace radialgeo {

namespace {

using Jet3 = std::array<Jet2, 3>;

Jet2 dot(const Jet3& a, const Jet3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

std::complex<double> times_i(std::complex<double> z) { return std::complex<double>(0.0, 1.0) * z; }

}  // namespace

bool ParamDomain::contains(double u, double v) const {
  const double su = 1e-12 * std::abs(u1 - u0);
  const double sv = 1e-12 * std::abs(v1 - v0);
  return u >= u0 - su && u <= u1 + su && v >= v0 - sv && v <= v1 + sv;
}

std::vector<std::pair<double, double>> grid_points(const ParamDomain& domain, const Grid& grid) {
  if (grid.nu < 1 || grid.nv < 1) throw std::invalid_argument("grid counts must be positive");
  const auto coord = [](double a, double b, int n, int i) {
    return n == 1 ? 0.5 * (a + b) : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  };
  std::vector<std::pair<double, double>> out;
  out.reserve(static_cast<std::size_t>(grid.nu) * static_cast<std::size_t>(grid.nv));
  for (int i = 0; i < grid.nu; ++i)
    for (int j = 0; j < grid.nv; ++j)
      out.emplace_back(coord(domain.u0, domain.u1, grid.nu, i), coord(domain.v0, domain.v1, grid.nv, j));
  return out;
}

std::string to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::SphereOrigin: return "sphere_origin";
    case SurfaceKind::SphereGeneral: return "sphere_general";
    case SurfaceKind::PlaneThroughOrigin: return "plane";
    case SurfaceKind::Cone: return "cone";
    case SurfaceKind::Catenoid: return "catenoid";
    case SurfaceKind::Helicoid: return "helicoid";
    case SurfaceKind::Enneper: return "enneper";
    case SurfaceKind::Rotation: return "rotation";
    case SurfaceKind::Inverted: return "inverted";
    case SurfaceKind::Custom: return "custom";
  }
  return "unknown";
}

std::array<Jet2, 3> weierstrass_jet(const WeierstrassData& data, double u, double v, int panels) {
  using C = std::complex<double>;
  if (panels < 2 || panels % 2 != 0) throw std::invalid_argument("Simpson needs an even panel count");
  const auto integrand = [&](C z) {
    const C f = data.f(z);
    const C g = data.g(z);
    return std::array<C, 3>{0.5 * f * (1.0 - g * g), 0.5 * C(0.0, 1.0) * f * (1.0 + g * g), f * g};
  };
  const auto integrand_derivative = [&](C z) {
    const C f = data.f(z);
    const C g = data.g(z);
    const C df = data.df(z);
    const C dg = data.dg(z);
    return std::array<C, 3>{0.5 * df * (1.0 - g * g) - f * g * dg,
                            C(0.0, 1.0) * (0.5 * df * (1.0 + g * g) + f * g * dg), df * g + f * dg};
  };

  const C z(u, v);
  std::array<C, 3> sum{};
  for (int n = 0; n <= panels; ++n) {
    const double weight = (n == 0 || n == panels) ? 1.0 : (n % 2 == 1 ? 4.0 : 2.0);
    const auto phi = integrand(z * (static_cast<double>(n) / panels));
    for (int k = 0; k < 3; ++k) sum[k] += weight * phi[k];
  }
  const auto phi = integrand(z);
  const auto dphi = integrand_derivative(z);
  std::array<Jet2, 3> out;
  for (int k = 0; k < 3; ++k) {
    const C integral = sum[k] * z / (3.0 * panels);
    // d/du = d/dz, d/dv = i d/dz for holomorphic integrals.
    out[k] = Jet2{integral.real(),         phi[k].real(),
                  times_i(phi[k]).real(), dphi[k].real(),
                  times_i(dphi[k]).real(), -dphi[k].real()};
  }
  return out;
}

SurfaceSpec::SurfaceSpec(SurfaceKind kind, std::string name, Map map, ParamDomain domain)
    : kind_(kind), name_(std::move(name)), map_(std::move(map)), domain_(domain) {}

SurfaceSpec SurfaceSpec::sphere_origin(double radius) {
  SurfaceSpec s = rotation(RotationProfile::sphere(radius));
  s.kind_ = SurfaceKind::SphereOrigin;
  s.name_ = "sphere_origin";
  s.params_ = {{"radius", radius}};
  return s;
}

SurfaceSpec SurfaceSpec::sphere_general(const Vec3& center, double radius) {
  const RotationProfile profile = RotationProfile::sphere(radius);
  const ParamDomain domain{profile.u_min(), profile.u_max(), 0.0, 2.0 * std::numbers::pi};
  SurfaceSpec s(SurfaceKind::SphereGeneral, "sphere_general",
                [profile, center](const Jet2& u, const Jet2& v) {
                  const ProfileValue p = profile(u.val);
                  const Jet2 phi = u.compose(p.phi, p.dphi, p.d2phi);
                  return Jet3{center.x() + phi * cos(v), center.y() + phi * sin(v), center.z() + u};
                },
                domain);
  s.params_ = {{"radius", radius}, {"cx", center.x()}, {"cy", center.y()}, {"cz", center.z()}};
  return s;
}

SurfaceSpec SurfaceSpec::plane_through_origin(const Vec3& normal, ParamDomain domain) {
  if (normal.norm() == 0.0) throw std::invalid_argument("plane normal must be nonzero");
  const Vec3 n = normal.normalized();
  const Vec3 seed = std::abs(n.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 e1 = (seed - seed.dot(n) * n).normalized();
  const Vec3 e2 = n.cross(e1);
  SurfaceSpec s(SurfaceKind::PlaneThroughOrigin, "plane",
                [e1, e2](const Jet2& u, const Jet2& v) {
                  return Jet3{u * e1.x() + v * e2.x(), u * e1.y() + v * e2.y(), u * e1.z() + v * e2.z()};
                },
                domain);
  s.params_ = {{"nx", n.x()}, {"ny", n.y()}, {"nz", n.z()}};
  return s;
}

SurfaceSpec SurfaceSpec::cone(double half_angle, ParamDomain domain) {
  const double sa = std::sin(half_angle);
  const double ca = std::cos(half_angle);
  SurfaceSpec s(SurfaceKind::Cone, "cone",
                [sa, ca](const Jet2& u, const Jet2& v) { return Jet3{sa * u * cos(v), sa * u * sin(v), ca * u}; },
                domain);
  s.params_ = {{"half_angle", half_angle}};
  return s;
}

SurfaceSpec SurfaceSpec::catenoid(double scale, ParamDomain domain) {
  SurfaceSpec s(SurfaceKind::Catenoid, "catenoid",
                [scale](const Jet2& u, const Jet2& v) {
                  const Jet2 r = scale * cosh(u);
                  return Jet3{r * cos(v), r * sin(v), scale * u};
                },
                domain);
  s.params_ = {{"scale", scale}};
  return s;
}

SurfaceSpec SurfaceSpec::helicoid(double scale, ParamDomain domain) {
  SurfaceSpec s(SurfaceKind::Helicoid, "helicoid",
                [scale](const Jet2& u, const Jet2& v) {
                  const Jet2 r = scale * sinh(u);
                  return Jet3{r * cos(v), r * sin(v), scale * v};
                },
                domain);
  s.params_ = {{"scale", scale}};
  return s;
}

SurfaceSpec SurfaceSpec::enneper(ParamDomain domain) {
  using C = std::complex<double>;
  const WeierstrassData data{[](C) { return C(1.0); }, [](C) { return C(0.0); }, [](C z) { return z; },
                             [](C) { return C(1.0); }};
  return {SurfaceKind::Enneper, "enneper",
          [data](const Jet2& u, const Jet2& v) { return weierstrass_jet(data, u.val, v.val); }, domain};
}

SurfaceSpec SurfaceSpec::rotation(RotationProfile profile, double v0, double v1) {
  const ParamDomain domain{profile.u_min(), profile.u_max(), v0, v1};
  SurfaceSpec s(SurfaceKind::Rotation, "rotation",
                [profile](const Jet2& u, const Jet2& v) {
                  const ProfileValue p = profile(u.val);
                  const Jet2 phi = u.compose(p.phi, p.dphi, p.d2phi);
                  return Jet3{phi * cos(v), phi * sin(v), u};
                },
                domain);
  s.params_ = profile.params();
  s.profile_ = std::move(profile);
  return s;
}

SurfaceSpec SurfaceSpec::inverted(const SurfaceSpec& inner) {
  auto held = std::make_shared<const SurfaceSpec>(inner);
  SurfaceSpec s(SurfaceKind::Inverted, "inverted",
                [held](const Jet2& u, const Jet2& v) {
                  const Jet3 x = held->map_(u, v);
                  const Jet2 t = dot(x, x);
                  if (!(t.val > kRegularityThreshold)) {
                    std::ostringstream msg;
                    msg << "inverted surface passes through the origin at (" << u.val << ", " << v.val << ")";
                    throw DomainError(msg.str());
                  }
                  const Jet2 inv = reciprocal(t);
                  return Jet3{x[0] * inv, x[1] * inv, x[2] * inv};
                },
                inner.domain_);
  s.inner_ = std::move(held);
  return s;
}

SurfaceSpec SurfaceSpec::custom(std::string name, Map map, ParamDomain domain) {
  return {SurfaceKind::Custom, std::move(name), std::move(map), domain};
}

SurfaceSpec SurfaceSpec::with_domain(const ParamDomain& domain) const {
  SurfaceSpec copy = *this;
  copy.domain_ = domain;
  return copy;
}

std::array<Jet2, 3> SurfaceSpec::evaluate(double u, double v) const {
  return map_(Jet2::variable_u(u), Jet2::variable_v(v));
}

SurfaceJet to_surface_jet(const std::array<Jet2, 3>& x) {
  SurfaceJet j;
  for (int k = 0; k < 3; ++k) {
    j.X[k] = x[k].val;
    j.Xu[k] = x[k].du;
    j.Xv[k] = x[k].dv;
    j.Xuu[k] = x[k].duu;
    j.Xuv[k] = x[k].duv;
    j.Xvv[k] = x[k].dvv;
  }
  return j;
}

SurfaceJet jet(const SurfaceSpec& spec, double u, double v) {
  if (!spec.domain().contains(u, v)) {
    std::ostringstream msg;
    msg << "(" << u << ", " << v << ") outside the domain of surface '" << spec.name() << "'";
    throw DomainError(msg.str());
  }
  SurfaceJet j = to_surface_jet(spec.evaluate(u, v));
  const double area = j.Xu.cross(j.Xv).norm();
  if (!(area > kRegularityThreshold)) {
    std::ostringstream msg;
    msg << "surface '" << spec.name() << "' is singular at (" << u << ", " << v << ")";
    throw RegularityError(msg.str());
  }
  return j;
}

EuclideanCurvature EuclideanCurvature::flipped() const {
  EuclideanCurvature c = *this;
  c.N = -N;
  c.e = -e;
  c.f = -f;
  c.g = -g;
  c.lambda1 = -lambda1;
  c.lambda2 = -lambda2;
  c.H = -H;
  c.nu = -nu;
  return c;
}

EuclideanCurvature euclidean_curvatures(const SurfaceJet& j) {
  const Vec3 cross = j.Xu.cross(j.Xv);
  const double area = cross.norm();
  if (!(area > kRegularityThreshold)) throw RegularityError("singular surface jet");

  EuclideanCurvature c;
  c.X = j.X;
  c.N = cross / area;
  c.E = j.Xu.dot(j.Xu);
  c.Fmix = j.Xu.dot(j.Xv);
  c.G = j.Xv.dot(j.Xv);
  c.e = j.Xuu.dot(c.N);
  c.f = j.Xuv.dot(c.N);
  c.g = j.Xvv.dot(c.N);
  c.t = j.X.dot(j.X);
  c.nu = j.X.dot(c.N);

  const double det = c.E * c.G - c.Fmix * c.Fmix;
  c.H = (c.e * c.G - 2.0 * c.f * c.Fmix + c.g * c.E) / (2.0 * det);
  c.K = (c.e * c.g - c.f * c.f) / det;

  // Principal curvatures kappa = H +- d of the shape operator I^{-1} II; the
  // first is the one nearest its uu entry so that lambda1 follows the u-curves.
  // d^2 is taken from the matrix entries rather than H^2 - K, which cancels at umbilics.
  const double s_uu = (c.G * c.e - c.Fmix * c.f) / det;
  const double s_vv = (c.E * c.g - c.Fmix * c.f) / det;
  const double s_uv = (c.G * c.f - c.Fmix * c.g) / det;
  const double s_vu = (c.E * c.f - c.Fmix * c.e) / det;
  const double half_gap = 0.5 * (s_uu - s_vv);
  const double d = std::sqrt(std::max(0.0, half_gap * half_gap + s_uv * s_vu));
  const double k_plus = c.H + d;
  const double k_minus = c.H - d;
  const bool plus_first = std::abs(k_plus - s_uu) <= std::abs(k_minus - s_uu);
  c.lambda1 = -(plus_first ? k_plus : k_minus);
  c.lambda2 = -(plus_first ? k_minus : k_plus);
  return c;
}

Mat2 weingarten_matrix(const EuclideanCurvature& c) {
  Mat2 first;
  first << c.E, c.Fmix, c.Fmix, c.G;
  Mat2 second;
  second << c.e, c.f, c.f, c.g;
  return -first.inverse() * second;
}

IsothermalReport isothermal_check(const SurfaceSpec& spec, const Grid& grid) {
  IsothermalReport report;
  for (const auto& [u, v] : grid_points(spec.domain(), grid)) {
    const SurfaceJet j = jet(spec, u, v);
    const double e = j.Xu.squaredNorm();
    const double g = j.Xv.squaredNorm();
    report.max_e_minus_g = std::max(report.max_e_minus_g, std::abs(e - g));
    report.max_fmix = std::max(report.max_fmix, std::abs(j.Xu.dot(j.Xv)));
    report.max_e = std::max(report.max_e, e);
  }
  const double tol = 1e-8 * report.max_e;
  report.isothermal = report.max_e_minus_g < tol && report.max_fmix < tol;
  return report;
}

double intrinsic_gauss_at(const SurfaceSpec& spec, double u, double v, const ConformalFactor& factor, double step) {
  const auto log_density = [&](double a, double b) {
    const SurfaceJet j = to_surface_jet(spec.evaluate(a, b));
    const double h = factor.at(j.X).h;
    return std::log(j.Xu.squaredNorm()) - 2.0 * std::log(std::abs(h));
  };
  const double center = log_density(u, v);
  const double laplacian = (log_density(u + step, v) + log_density(u - step, v) + log_density(u, v + step) +
                            log_density(u, v - step) - 4.0 * center) /
                           (step * step);
  return -0.5 * laplacian / std::exp(center);
}

std::vector<double> intrinsic_gauss(const SurfaceSpec& spec, const Grid& grid, const ConformalFactor& factor) {
  const IsothermalReport iso = isothermal_check(spec, grid);
  if (!iso.isothermal) {
    std::ostringstream msg;
    msg << "surface '" << spec.name() << "' is not isothermal (max |E-G| = " << iso.max_e_minus_g
        << ", max |F| = " << iso.max_fmix << ")";
    throw NotIsothermalError(msg.str());
  }
  std::vector<double> out;
  for (const auto& [u, v] : grid_points(spec.domain(), grid)) out.push_back(intrinsic_gauss_at(spec, u, v, factor));
  return out;
}

SurfaceSpec invert_surface(const SurfaceSpec& spec) { return SurfaceSpec::inverted(spec); }

Vec3 predicted_inverted_normal(const EuclideanCurvature& c) { return -2.0 * c.nu / c.t * c.X + c.N; }

}  // namespace radialgeo
