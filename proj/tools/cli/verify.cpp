#include "verify.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "radialgeo/oracles.hpp"
#include "radialgeo/radialgeo.hpp"
#include "surface_json.hpp"

#ifndef RADIALGEO_VERSION
#define RADIALGEO_VERSION "unknown"
#endif

namespace radialgeo::cli {

namespace {

using nlohmann::json;

EuclideanCurvature at(const SurfaceSpec& s, double u, double v) { return euclidean_curvatures(jet(s, u, v)); }

std::vector<ConformalFactor> factors() {
  return {ConformalFactor::euclidean(), ConformalFactor::radial_model(), ConformalFactor::exp_model(),
          ConformalFactor::parse("custom:affine:1,0.5"), ConformalFactor::parse("custom:power:2,0.25")};
}

SurfaceSpec mercator_sphere(double radius) {
  return SurfaceSpec::custom(
      "mercator_sphere",
      [radius](const Jet2& u, const Jet2& v) {
        const Jet2 sech = 1.0 / cosh(u);
        return std::array<Jet2, 3>{radius * sech * cos(v), radius * sech * sin(v), radius * tanh(u)};
      },
      {-1.5, 1.5, 0.0, 2.0 * std::numbers::pi});
}

std::vector<SurfaceSpec> catalog() {
  return {SurfaceSpec::sphere_origin(1.0),
          SurfaceSpec::sphere_general(Vec3(0.3, -0.2, 0.5), 0.7),
          SurfaceSpec::plane_through_origin(Vec3(1, 2, 2)),
          SurfaceSpec::cone(0.7),
          SurfaceSpec::catenoid(1.0),
          SurfaceSpec::helicoid(1.0),
          SurfaceSpec::enneper(),
          SurfaceSpec::rotation(RotationProfile::cosine(1.5, 0.5, -2.0, 2.0)),
          SurfaceSpec::inverted(SurfaceSpec::catenoid(1.0))};
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Vec3 point(double r_min, double r_max) {
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> radius(r_min, r_max);
    return radius(rng_) * Vec3(normal(rng_), normal(rng_), normal(rng_)).normalized();
  }
  Vec3 vector() {
    std::uniform_real_distribution<double> c(-1.0, 1.0);
    return {c(rng_), c(rng_), c(rng_)};
  }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

double max_w(const SurfaceSpec& s, bool class_one) {
  const auto radial = ConformalFactor::radial_model();
  double worst = 0.0;
  for (const auto& [u, v] : grid_points(s.domain(), {10, 10})) {
    const WeingartenFunctionals w = weingarten_functionals(radial, at(s, u, v));
    worst = std::max(worst, std::abs(class_one ? w.w1 : w.w2));
  }
  return worst;
}

using Battery = std::vector<std::function<VerificationEntry(Sampler&)>>;

Battery builtin_battery() {
  Battery b;
  b.push_back([](Sampler& rng) {
    double worst = 0.0;
    for (const auto& f : factors())
      for (int n = 0; n < 40; ++n) {
        const Vec3 x = rng.point(0.3, 2.0);
        const ChristoffelTable a = christoffel(f, x);
        const ChristoffelTable o = oracles::fd_christoffel(f, x);
        for (int k = 0; k < 3; ++k)
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(a(k, i, j) - o(k, i, j)));
      }
    return VerificationEntry{"metric.christoffel_fd", "Christoffel symbols of the conformal metric vs finite differences of g",
                             worst, 1e-6, false, "5 factors x 40 points"};
  });
  b.push_back([](Sampler& rng) {
    const auto radial = ConformalFactor::radial_model();
    double oracle = 0.0;
    double sum = 0.0;
    for (int n = 0; n < 200; ++n) {
      const Vec3 x = rng.point(0.3, 3.0);
      double total = 0.0;
      for (const auto& [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        const double k = sectional_curvature(radial, x, i, j);
        if (n < 50) oracle = std::max(oracle, std::abs(k - oracles::fd_sectional_curvature(radial, x, i, j)));
        sum = std::max(sum, std::max(-k, k - 1.0));
        total += k;
      }
      sum = std::max(sum, std::abs(total - 1.0));
    }
    return VerificationEntry{"metric.sectional_radial",
                             "sectional curvature x_k^2/t of the radial model vs a finite-difference Riemann tensor",
                             oracle, 1e-4, false,
                             "planes in [0,1] and summing to 1: worst deviation " + std::to_string(sum)};
  });
  b.push_back([](Sampler& rng) {
    double worst = 0.0;
    for (const auto& f : factors())
      for (int n = 0; n < 40; ++n) {
        const Vec3 x = rng.point(0.3, 2.0);
        for (const auto& [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
          const double k = sectional_curvature(f, x, i, j);
          worst = std::max(worst, std::abs(k - sectional_curvature_general(f, x, i, j)) / std::max(1.0, std::abs(k)));
        }
      }
    return VerificationEntry{"metric.sectional_forms", "radial closed form of the sectional curvature vs the general expression",
                             worst, 1e-10, false, "relative"};
  });
  b.push_back([](Sampler& rng) {
    const auto fs = factors();
    double worst = 0.0;
    for (int n = 0; n < 50; ++n) {
      const ConformalFactor& f = fs[static_cast<std::size_t>(n) % fs.size()];
      const double r = rng.uniform(0.1, 10.0);
      const SurfaceSpec s = SurfaceSpec::sphere_origin(r);
      const double u = rng.uniform(s.domain().u0, s.domain().u1);
      const double got = transform(f, at(s, u, rng.uniform(0.0, 6.0))).extrinsic_t;
      const FactorValue fv = f.eval(r * r);
      const double scale = std::pow((std::abs(fv.h) + 2.0 * std::abs(fv.dh) * r * r) / r, 2);
      worst = std::max(worst, std::abs(got - sphere_extrinsic(f, r)) / scale);
    }
    return VerificationEntry{"conformal.sphere_extrinsic",
                             "extrinsic curvature of origin spheres, (F - 2F't)^2/R^2, through the full pipeline", worst,
                             1e-8, false, "relative to ((F + 2|F'|R^2)/R)^2"};
  });
  b.push_back([](Sampler&) {
    double worst = 0.0;
    for (double r : {0.5, 1.0, 5.0}) {
      const SphereReport rep = sphere_report(r);
      worst = std::max({worst, rep.extrinsic_max_abs, rep.mean_max_abs, rep.totally_geodesic_residual,
                        std::abs(rep.gauss_min - 1.0), std::abs(rep.gauss_max - 1.0)});
    }
    return VerificationEntry{"radialmodel.sphere_battery",
                             "origin spheres of the radial model are totally geodesic, minimal, flat-extrinsic, with K = 1",
                             worst, 1e-9, false, "R in {0.5, 1, 5}, 10x10 grids"};
  });
  b.push_back([](Sampler&) {
    double worst = 0.0;
    for (double r : {0.5, 1.0, 2.0}) {
      const SphereReport rep = sphere_report(r, ConformalFactor::exp_model());
      worst = std::max(worst, std::abs(rep.extrinsic_mean - std::pow(1 + 2 * r * r, 2) * std::exp(-2 * r * r) / (r * r)));
    }
    return VerificationEntry{"radialmodel.sphere_exp_comparison",
                             "origin spheres under exp(-t): extrinsic curvature (1+2R^2)^2 e^(-2R^2)/R^2", worst, 1e-10,
                             false, ""};
  });
  b.push_back([](Sampler&) {
    double worst = 0.0;
    for (const auto& f : factors())
      for (const auto& s : catalog())
        for (const auto& [u, v] : grid_points(s.domain(), {6, 6})) {
          const EuclideanCurvature e = at(s, u, v);
          if (!f.in_domain(e.t)) continue;
          const double h = transform(f, e).mean_t;
          worst = std::max(worst, std::abs(h - mean_conformal_formula(f, e)) / std::max(1.0, std::abs(h)));
        }
    return VerificationEntry{"conformal.mean_curvature",
                             "mean curvature from the transformed principal curvatures vs F H + <N, grad F>", worst, 1e-12,
                             false, "H is the mean of the principal curvatures -lambda_i"};
  });
  b.push_back([](Sampler&) {
    const auto radial = ConformalFactor::radial_model();
    double worst = 0.0;
    for (const auto& s : catalog())
      for (const auto& [u, v] : grid_points(s.domain(), {10, 10})) {
        const EuclideanCurvature e = at(s, u, v);
        const ConformalCurvature c = transform(radial, e);
        worst = std::max(worst, std::abs(c.extrinsic_t + c.mean_t * c.mean_t - c.gauss_t - e.H * (e.t * e.H + 2 * e.nu)));
      }
    return VerificationEntry{"conformal.weingarten_identity", "K~_E + H~^2 - K~ = H (<X,X> H + 2 <X,N>) in the radial model",
                             worst, 1e-10, false, "catalog x 10x10"};
  });
  b.push_back([](Sampler&) {
    double worst = 0.0;
    for (const auto& s : {SurfaceSpec::catenoid(), SurfaceSpec::helicoid(), SurfaceSpec::enneper(),
                          SurfaceSpec::plane_through_origin(Vec3(0.3, -1, 0.5)),
                          SurfaceSpec::inverted(SurfaceSpec::catenoid())})
      worst = std::max(worst, max_w(s, true));
    return VerificationEntry{"weingarten.class1_examples",
                             "class-1 Weingarten surfaces: catenoid, helicoid, Enneper, planes, inverted catenoid", worst,
                             1e-9, false, ""};
  });
  b.push_back([](Sampler&) {
    const double w1 = weingarten_functionals(ConformalFactor::radial_model(), at(SurfaceSpec::sphere_origin(1.0), 0.3, 1.0)).w1;
    return VerificationEntry{"weingarten.class1_unit_sphere", "class-1 functional on the unit origin sphere", std::abs(w1 + 1.0),
                             1e-9, false,
                             "checked against -1: H and <X,N> change sign together, and K~_E + H~^2 - K~ = 0 + 0 - 1"};
  });
  b.push_back([](Sampler&) {
    const SurfaceSpec cone = SurfaceSpec::cone(0.7);
    double smallest = INFINITY;
    for (const auto& [u, v] : grid_points(cone.domain(), {10, 10}))
      smallest = std::min(smallest, std::abs(weingarten_functionals(ConformalFactor::radial_model(), at(cone, u, v)).w1));
    return VerificationEntry{"weingarten.class1_cone_control", "cones are not class-1 Weingarten surfaces", smallest, 0.1,
                             true, "min |W1| over the grid"};
  });
  b.push_back([](Sampler&) {
    const double worst = std::max(max_w(SurfaceSpec::plane_through_origin(Vec3(0.3, -1, 0.5)), false),
                                  max_w(SurfaceSpec::cone(0.7), false));
    return VerificationEntry{"weingarten.class2_examples", "class-2 Weingarten surfaces: planes and cones through the origin",
                             worst, 1e-9, false, ""};
  });
  b.push_back([](Sampler&) {
    const auto radial = ConformalFactor::radial_model();
    const double waist = weingarten_functionals(radial, at(SurfaceSpec::catenoid(), 0.0, 0.0)).w2;
    const double sphere = weingarten_functionals(radial, at(SurfaceSpec::sphere_origin(1.0), 0.3, 1.0)).w2;
    return VerificationEntry{"weingarten.class2_values", "class-2 functional at the catenoid waist and on the unit sphere",
                             std::max(std::abs(waist + 1.0), std::abs(sphere + 1.0)), 1e-9, false,
                             "both checked against -1"};
  });
  b.push_back([](Sampler&) {
    double worst = 0.0;
    for (const auto& s : catalog()) {
      const SurfaceSpec inv = invert_surface(s);
      for (const auto& [u, v] : grid_points(s.domain(), {6, 6}))
        worst = std::max(worst, inversion_mean_curvature_check(at(s, u, v), at(inv, u, v)).residual_plus);
    }
    return VerificationEntry{"conformal.inversion_mean_curvature",
                             "mean curvature of the inverted surface equals <X,X> H + 2 <X,N>", worst, 1e-9, false,
                             "inverted normal oriented as -2<X,N>/<X,X> X + N"};
  });
  b.push_back([](Sampler& rng) {
    double worst = 0.0;
    for (const auto& f : factors())
      for (int n = 0; n < 40; ++n) {
        const GeodesicState s{rng.point(0.3, 2.0), rng.vector()};
        worst = std::max(worst, (geodesic_rhs(f, s) - christoffel_acceleration(f, s)).norm());
      }
    return VerificationEntry{"geodesic.rhs_forms", "radial form of the geodesic equations vs the Christoffel contraction",
                             worst, 1e-10, false, ""};
  });
  b.push_back([](Sampler& rng) {
    double worst = 0.0;
    for (const auto& f : factors())
      for (int n = 0; n < 5; ++n) {
        const Vec3 p = rng.point(0.5, 2.0);
        worst = std::max(worst, geodesic_residual(f, line_samples(f, p, p, -0.4, 0.4, 41)));
      }
    return VerificationEntry{"geodesic.radial_lines", "lines through the origin are geodesics for every radial factor",
                             worst, 1e-8, false, ""};
  });
  b.push_back([](Sampler&) {
    const auto radial = ConformalFactor::radial_model();
    double worst = 0.0;
    for (double r : {0.2, 1.0, 4.0}) worst = std::max(worst, geodesic_residual(radial, origin_circle_samples(radial, r, 64)));
    return VerificationEntry{"geodesic.origin_circles", "great circles of origin spheres are geodesics of the radial model",
                             worst, 1e-8, false, ""};
  });
  b.push_back([](Sampler&) {
    const auto expo = ConformalFactor::exp_model();
    const double got = geodesic_residual(expo, origin_circle_samples(expo, 1.0, 64));
    return VerificationEntry{"geodesic.origin_circle_exp",
                             "origin circles under exp(-t) are not geodesics: residual F^2 (1+2R^2)/R at R = 1",
                             std::abs(got - 3.0 * std::exp(-2.0)), 1e-6, false, "residual " + std::to_string(got)};
  });
  b.push_back([](Sampler&) {
    const auto radial = ConformalFactor::radial_model();
    const Trajectory line = integrate(radial, {Vec3(1, 0, 0), Vec3(1, 0, 0)}, 1.0, 1e-3);
    const Trajectory circle = integrate(radial, {Vec3(1, 0, 0), Vec3(0, 1, 0)}, 1.0, 1e-3);
    double drift = 0.0;
    for (const auto& st : circle.states) drift = std::max(drift, std::abs(st.x.norm() - 1.0));
    const double end = line.truncated ? INFINITY : (line.states.back().x - Vec3(std::numbers::e, 0, 0)).norm();
    return VerificationEntry{"geodesic.integrated_shots",
                             "RK4 radial shot lands at e^s and circle shot keeps its radius in the radial model",
                             std::max(end, drift), 1e-6, false, "step 1e-3, length 1"};
  });
  b.push_back([](Sampler& rng) {
    double worst = 0.0;
    for (int n = 0; n < 1000; ++n) {
      const Vec3 x = rng.point(0.1, 10.0);
      worst = std::max(worst, psi_isometry_residual(x, rng.vector(), rng.vector()));
      worst = std::max(worst, (psi_inv(psi(x)) - x).norm() / x.norm());
    }
    return VerificationEntry{"radialmodel.psi_isometry", "x -> (x/|x|, log|x|) is an isometry onto S^2 x R", worst, 1e-10,
                             false, "1000 samples, includes the round trip"};
  });
  b.push_back([](Sampler& rng) {
    const auto radial = ConformalFactor::radial_model();
    double worst = 0.0;
    for (int n = 0; n < 1000; ++n)
      worst = std::max(worst, inversion_isometry_residual(radial, rng.point(0.1, 10.0), rng.vector(), rng.vector()));
    return VerificationEntry{"radialmodel.inversion_isometry", "x -> x/<x,x> is an isometry of the radial model", worst,
                             1e-10, false, "1000 samples"};
  });
  b.push_back([](Sampler& rng) {
    const auto expo = ConformalFactor::exp_model();
    double smallest = INFINITY;
    for (int n = 0; n < 100; ++n) {
      double r = 1.0;
      while (std::abs(std::log(r)) < 0.1) r = std::exp(rng.uniform(std::log(0.25), std::log(4.0)));
      const Vec3 x = rng.point(r, r);
      const Vec3 v = x.cross(rng.vector()).normalized();
      smallest = std::min(smallest, inversion_isometry_residual(expo, x, v, v));
    }
    return VerificationEntry{"radialmodel.inversion_exp_control", "the inversion is not an isometry under exp(-t)", smallest,
                             1e-3, true, "points with |x| in [0.25, 4] away from the unit sphere"};
  });
  b.push_back([](Sampler&) {
    const auto radial = ConformalFactor::radial_model();
    double worst = 0.0;
    for (double r : {1e-2, 1e-4, 1e-6}) {
      std::vector<Vec3> path;
      for (int i = 0; i <= 400; ++i) path.emplace_back(std::pow(r, i / 400.0), 0.0, 0.0);
      worst = std::max(worst, std::abs(curve_length(radial, path) / std::log(1.0 / r) - 1.0));
    }
    return VerificationEntry{"radialmodel.completeness", "length of a radial approach to radius r grows like ln(1/r)", worst,
                             1e-2, false, "r in {1e-2, 1e-4, 1e-6}"};
  });
  b.push_back([](Sampler&) {
    double gauss = 0.0;
    double conformal = 0.0;
    for (const auto& s : {SurfaceSpec::catenoid(), SurfaceSpec::helicoid(), SurfaceSpec::enneper(), mercator_sphere(1.3)}) {
      const Grid grid{6, 6};
      const std::vector<double> k = intrinsic_gauss(s, grid);
      const auto pts = grid_points(s.domain(), grid);
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const EuclideanCurvature e = at(s, pts[i].first, pts[i].second);
        gauss = std::max(gauss, std::abs(k[i] - e.K));
        for (const auto& f : factors()) {
          if (!f.in_domain(e.t)) continue;
          conformal = std::max(conformal, std::abs(gauss_conformal(f, e, e.K) -
                                                   intrinsic_gauss_at(s, pts[i].first, pts[i].second, f)));
        }
      }
    }
    return VerificationEntry{"surface.gauss_oracles",
                             "Gauss curvature: intrinsic vs extrinsic, and the conformal closed form vs the scaled metric",
                             std::max(gauss, conformal), 1e-4, false, "isothermal surfaces only"};
  });
  b.push_back([](Sampler& rng) {
    const auto expo = ConformalFactor::exp_model();
    double worst = std::abs(sphere_extrinsic(expo, 1.0) - 9.0 * std::exp(-2.0));
    for (int n = 0; n < 20; ++n) {
      const double r = rng.uniform(0.2, 3.0);
      worst = std::max(worst, std::abs(radius_for_curvature(expo, sphere_extrinsic(expo, r)).smallest - r));
    }
    return VerificationEntry{"rotation.radius_round_trip", "sphere radius recovered from its extrinsic curvature under exp(-t)",
                             worst, 1e-9, false, "20 radii in [0.2, 3]"};
  });
  b.push_back([](Sampler&) {
    const RotationProfile sphere = RotationProfile::sphere(1.0);
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i) worst = std::max(worst, std::abs(e3_residual(sphere, -0.9 + 0.09 * i, 9.0 * std::exp(-2.0))));
    return VerificationEntry{"rotation.exp_profile_equation", "profile equation under exp(-t) vanishes on the unit sphere",
                             worst, 1e-10, false, "form obtained from the general profile equation times e^(2t)"};
  });
  b.push_back([](Sampler&) {
    const RotationProfile sphere = RotationProfile::sphere(1.0);
    double smallest = INFINITY;
    for (int i = 1; i < 20; ++i) {
      const double u = -0.9 + 0.09 * i;
      smallest = std::min(smallest, std::abs(e3_residual_printed(sphere(u), u, 9.0 * std::exp(-2.0))));
    }
    return VerificationEntry{"rotation.exp_profile_equation_alternative",
                             "alternative arrangement of the exp(-t) profile equation", smallest, 1e-6, true,
                             "does not vanish on the unit sphere; kept as a discrepancy marker"};
  });
  b.push_back([](Sampler&) {
    const RotationProfile p =
        solve_profile(ConformalFactor::exp_model(), 9.0 * std::exp(-2.0), {0.0, 1.0, 0.0}, -0.9, 0.9, 1e-3);
    double worst = 0.0;
    for (int i = 0; i <= 180; ++i) {
      const double u = -0.9 + 0.01 * i;
      worst = std::max(worst, std::abs(p(u).phi - std::sqrt(1.0 - u * u)));
    }
    return VerificationEntry{"rotation.profile_ode_sphere",
                             "integrating the profile equation with c0 = 9e^(-2) under exp(-t) recovers the unit sphere",
                             worst, 1e-6, false, "RK4 step 1e-3 on |u| <= 0.9"};
  });
  b.push_back([](Sampler&) {
    const auto radial = ConformalFactor::radial_model();
    const Vec3 start(0.3, -0.4, 1.2);
    const Trajectory tr = integrate(radial, {start, start}, 2.0, 1e-3);
    const Vec3 p0 = psi(start).p;
    double worst = 0.0;
    for (const auto& st : tr.states) worst = std::max(worst, (psi(st.x).p - p0).norm());
    return VerificationEntry{"radialmodel.vertical_lines", "radial geodesics map to vertical lines of S^2 x R", worst, 1e-8,
                             false, "sphere component drift"};
  });
  return b;
}

VerificationEntry extra_check(const json& spec) {
  const auto need = [&](const char* key) -> const json& {
    if (!spec.contains(key)) throw ConfigError(std::string("extra check needs '") + key + "'");
    return spec[key];
  };
  if (!spec.is_object()) throw ConfigError("extra checks must be objects");
  VerificationEntry e;
  e.id = need("id").is_string() ? spec["id"].get<std::string>() : throw ConfigError("extra check 'id' must be a string");
  const json& kind_json = need("kind");
  if (!kind_json.is_string()) throw ConfigError("extra check 'kind' must be a string");
  const std::string kind = kind_json.get<std::string>();
  e.tolerance = spec.value("tolerance", 1e-8);
  e.expected_nonzero = spec.value("expected_nonzero", false);
  e.notes = spec.value("notes", std::string("from config"));
  const ConformalFactor factor = [&] {
    try {
      return ConformalFactor::parse(spec.value("factor", std::string("radial")));
    } catch (const std::invalid_argument& err) {
      throw ConfigError(err.what());
    }
  }();
  const auto vec = [&](const char* key, Vec3 fallback) {
    if (!spec.contains(key)) return fallback;
    return parse_vec3(spec[key].dump());
  };
  if (kind == "circle_geodesic") {
    const double r = spec.value("radius", 1.0);
    e.paper_ref = "origin circle geodesic residual under " + factor.name();
    e.max_residual = geodesic_residual(factor, origin_circle_samples(factor, r, 64));
  } else if (kind == "radial_line") {
    const Vec3 p = vec("point", Vec3(1, 0, 0));
    e.paper_ref = "radial line geodesic residual under " + factor.name();
    e.max_residual = geodesic_residual(factor, line_samples(factor, p, p, -0.4, 0.4, 41));
  } else if (kind == "inversion_isometry") {
    const Vec3 x = vec("x", Vec3(2, 0, 0));
    const Vec3 v = vec("v", Vec3(0, 1, 0));
    e.paper_ref = "inversion isometry residual under " + factor.name();
    e.max_residual = inversion_isometry_residual(factor, x, v, v);
  } else if (kind == "sphere_battery") {
    const SphereReport rep = sphere_report(spec.value("radius", 1.0), factor);
    e.paper_ref = "origin sphere totally geodesic residual under " + factor.name();
    e.max_residual = std::max({rep.extrinsic_max_abs, rep.mean_max_abs, rep.totally_geodesic_residual,
                               std::abs(rep.gauss_min - 1.0), std::abs(rep.gauss_max - 1.0)});
  } else if (kind == "weingarten") {
    const SurfaceSpec s = surface_from_json(need("surface"));
    const std::string which = spec.value("functional", std::string("w1"));
    if (which != "w1" && which != "w2") throw ConfigError("'functional' must be w1 or w2");
    e.paper_ref = which + " Weingarten functional on " + s.name();
    e.max_residual = max_w(s, which == "w1");
  } else {
    throw ConfigError("unknown extra check kind '" + kind + "'");
  }
  return e;
}

std::string iso_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

}  // namespace

bool VerificationEntry::pass() const {
  if (!std::isfinite(max_residual)) return false;
  return expected_nonzero ? max_residual > tolerance : max_residual <= tolerance;
}

bool VerificationReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass(); });
}

json VerificationReport::to_json() const {
  json meta{{"version", version}, {"seed", seed}};
  if (!started.empty()) meta["timestamps"] = {{"started", started}, {"finished", finished}};
  json list = json::array();
  std::size_t failed = 0;
  for (const auto& e : entries) {
    failed += !e.pass();
    list.push_back({{"id", e.id},
                    {"paper_ref", e.paper_ref},
                    {"max_residual", std::isfinite(e.max_residual) ? json(e.max_residual) : json(nullptr)},
                    {"tolerance", e.tolerance},
                    {"pass", e.pass()},
                    {"expected_nonzero", e.expected_nonzero},
                    {"notes", e.notes}});
  }
  return {{"metadata", meta}, {"entries", list}, {"summary", {{"total", entries.size()}, {"failed", failed}}}};
}

VerificationReport run_verification(const RunConfig& cfg) {
  // Validate extra checks up front so config errors never follow a partial run.
  for (const auto& spec : cfg.extra_checks) {
    if (!spec.is_object() || !spec.contains("id") || !spec.contains("kind"))
      throw ConfigError("each extra check needs 'id' and 'kind'");
  }
  VerificationReport report;
  report.version = RADIALGEO_VERSION;
  report.seed = cfg.seed;
  if (cfg.timestamps) report.started = iso_now();
  Sampler rng(cfg.seed);
  for (const auto& check : builtin_battery()) {
    try {
      report.entries.push_back(check(rng));
    } catch (const GeometryError& err) {
      report.entries.push_back({"error", "check raised", INFINITY, 0.0, false, error_tag(err) + ": " + err.what()});
    }
  }
  for (const auto& spec : cfg.extra_checks) {
    try {
      report.entries.push_back(extra_check(spec));
    } catch (const GeometryError& err) {
      report.entries.push_back({spec.value("id", std::string("extra")), "check raised", INFINITY,
                                spec.value("tolerance", 1e-8), spec.value("expected_nonzero", false),
                                error_tag(err) + ": " + err.what()});
    }
  }
  if (cfg.timestamps) report.finished = iso_now();
  return report;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const VerificationReport report = run_verification(cfg);
  out << report.to_json().dump(2) << '\n';
  for (const auto& e : report.entries)
    if (!e.pass()) err << "FAIL " << e.id << ": residual " << e.max_residual << ", tolerance " << e.tolerance << '\n';
  return report.all_pass() ? 0 : 1;
}

}  // namespace radialgeo::cli
