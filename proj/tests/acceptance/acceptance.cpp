// Acceptance battery: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "radialgeo/oracles.hpp"
#include "radialgeo/radialgeo.hpp"

namespace {

using namespace radialgeo;

struct SubCheck {
  std::string label;
  double value;
  std::string relation;  // "<", ">=", "=~"
  double target;
  double tolerance;

  [[nodiscard]] bool pass() const {
    if (relation == "<") return value < target;
    if (relation == ">=") return value >= target;
    return std::abs(value - target) <= tolerance;
  }
};

struct Outcome {
  std::vector<SubCheck> checks;

  void below(std::string label, double value, double bound) { checks.push_back({std::move(label), value, "<", bound, 0.0}); }
  void at_least(std::string label, double value, double bound) {
    checks.push_back({std::move(label), value, ">=", bound, 0.0});
  }
  void near(std::string label, double value, double target, double tol) {
    checks.push_back({std::move(label), value, "=~", target, tol});
  }
};

std::string describe(const SubCheck& c) {
  std::ostringstream out;
  out.precision(3);
  out << c.label << " ";
  if (c.relation == "=~") {
    out << "= " << std::scientific << c.value << " (want " << std::defaultfloat << c.target << " +- " << c.tolerance
        << ")";
  } else {
    out << std::scientific << c.value << " (want " << c.relation << " " << c.target << ")";
  }
  return out.str();
}

EuclideanCurvature at(const SurfaceSpec& s, double u, double v) { return euclidean_curvatures(jet(s, u, v)); }

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

std::vector<ConformalFactor> criterion_factors() {
  return {ConformalFactor::exp_model(), ConformalFactor::radial_model(), ConformalFactor::euclidean(),
          ConformalFactor::parse("custom:affine:1,0.5"), ConformalFactor::parse("custom:power:2,0.25")};
}

Vec3 random_point(std::mt19937_64& rng, double r_min, double r_max) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> radius(r_min, r_max);
  return radius(rng) * Vec3(normal(rng), normal(rng), normal(rng)).normalized();
}

Vec3 random_vector(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  return {c(rng), c(rng), c(rng)};
}

double max_w(const ConformalFactor& factor, const SurfaceSpec& s, const Grid& grid, bool class_one) {
  double worst = 0.0;
  for (const auto& [u, v] : grid_points(s.domain(), grid)) {
    const WeingartenFunctionals w = weingarten_functionals(factor, at(s, u, v));
    worst = std::max(worst, std::abs(class_one ? w.w1 : w.w2));
  }
  return worst;
}

// 1. Sphere extrinsic curvature through the full pipeline.
Outcome criterion_sphere_extrinsic() {
  std::mt19937_64 rng(101);
  const auto factors = criterion_factors();
  std::uniform_int_distribution<std::size_t> pick(0, factors.size() - 1);
  std::uniform_real_distribution<double> radius(0.1, 10.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int n = 0; n < 50; ++n) {
    const ConformalFactor& factor = factors[pick(rng)];
    const double r = radius(rng);
    const SurfaceSpec s = SurfaceSpec::sphere_origin(r);
    const ParamDomain d = s.domain();
    const double u = d.u0 + (d.u1 - d.u0) * unit(rng);
    const double v = d.v0 + (d.v1 - d.v0) * unit(rng);
    const double got = transform(factor, at(s, u, v)).extrinsic_t;
    const double expected = sphere_extrinsic(factor, r);
    // Relative to ((F + 2|F'| R^2)/R)^2, the size of the terms whose difference forms
    // each principal curvature; equals |expected| whenever they do not cancel.
    const FactorValue fv = factor.eval(r * r);
    const double scale = std::pow((std::abs(fv.h) + 2.0 * std::abs(fv.dh) * r * r) / r, 2);
    worst = std::max(worst, std::abs(got - expected) / scale);
  }
  Outcome o;
  o.below("max relative error over 50 (factor, R)", worst, 1e-8);
  return o;
}

// 2. Radius round trip under the exponential factor.
Outcome criterion_radius_round_trip() {
  const auto expo = ConformalFactor::exp_model();
  std::mt19937_64 rng(102);
  std::uniform_real_distribution<double> radius(0.2, 3.0);
  double worst = 0.0;
  for (int n = 0; n < 20; ++n) {
    const double r = radius(rng);
    worst = std::max(worst, std::abs(radius_for_curvature(expo, sphere_extrinsic(expo, r)).smallest - r));
  }
  Outcome o;
  o.below("max |R_found - R| over 20 radii", worst, 1e-9);
  o.near("K~_E(R=1)", sphere_extrinsic(expo, 1.0), 9.0 * std::exp(-2.0), 1e-12);
  return o;
}

// 3. Radial model sphere battery.
Outcome criterion_sphere_battery() {
  Outcome o;
  for (double r : {0.5, 1.0, 5.0}) {
    const SphereReport rep = sphere_report(r, ConformalFactor::radial_model(), {10, 10});
    std::ostringstream tag;
    tag << "R=" << r << " ";
    o.below(tag.str() + "max|K~_E|", rep.extrinsic_max_abs, 1e-9);
    o.below(tag.str() + "max|H~|", rep.mean_max_abs, 1e-9);
    o.below(tag.str() + "max|lambda~|", rep.totally_geodesic_residual, 1e-9);
    o.near(tag.str() + "min K~", rep.gauss_min, 1.0, 1e-9);
    o.near(tag.str() + "max K~", rep.gauss_max, 1.0, 1e-9);
  }
  return o;
}

// 4. Geodesics.
Outcome criterion_geodesics() {
  Outcome o;
  std::mt19937_64 rng(104);
  double radial_lines = 0.0;
  for (const auto& factor : criterion_factors()) {
    for (int n = 0; n < 5; ++n) {
      const Vec3 p = random_point(rng, 0.5, 2.0);
      radial_lines = std::max(radial_lines, geodesic_residual(factor, line_samples(factor, p, p, -0.4, 0.4, 41)));
    }
  }
  o.below("radial-line residual, all factors", radial_lines, 1e-8);
  const auto radial = ConformalFactor::radial_model();
  double circles = 0.0;
  for (double r : {0.2, 1.0, 4.0}) circles = std::max(circles, geodesic_residual(radial, origin_circle_samples(radial, r, 64)));
  o.below("origin-circle residual, radial model", circles, 1e-8);
  const auto expo = ConformalFactor::exp_model();
  const double f = std::exp(-1.0);
  o.near("origin-circle residual, exp model R=1", geodesic_residual(expo, origin_circle_samples(expo, 1.0, 64)),
         f * f * 3.0, 1e-6);
  const Trajectory tr = integrate(radial, {Vec3(1, 0, 0), Vec3(1, 0, 0)}, 1.0, 1e-3);
  o.below("integrated radial endpoint error vs e^s",
          tr.truncated ? INFINITY : (tr.states.back().x - Vec3(std::numbers::e, 0, 0)).norm(), 1e-6);
  return o;
}

// 5. Pointwise identity K~_E + H~^2 - K~ = H (t H + 2 nu) under the radial model.
Outcome criterion_weingarten_identity() {
  const auto radial = ConformalFactor::radial_model();
  double worst = 0.0;
  for (const auto& s : catalog())
    for (const auto& [u, v] : grid_points(s.domain(), {10, 10})) {
      const EuclideanCurvature e = at(s, u, v);
      const ConformalCurvature c = transform(radial, e);
      worst = std::max(worst, std::abs(c.extrinsic_t + c.mean_t * c.mean_t - c.gauss_t - e.H * (e.t * e.H + 2 * e.nu)));
    }
  Outcome o;
  o.below("max pointwise residual, catalog x 10x10", worst, 1e-10);
  return o;
}

// 6. Class-1 functional.
Outcome criterion_class_one() {
  const auto radial = ConformalFactor::radial_model();
  const Grid grid{10, 10};
  Outcome o;
  o.below("max|W1| catenoid", max_w(radial, SurfaceSpec::catenoid(), grid, true), 1e-9);
  o.below("max|W1| helicoid", max_w(radial, SurfaceSpec::helicoid(), grid, true), 1e-9);
  o.below("max|W1| enneper", max_w(radial, SurfaceSpec::enneper(), grid, true), 1e-9);
  o.below("max|W1| plane", max_w(radial, SurfaceSpec::plane_through_origin(Vec3(0.3, -1, 0.5)), grid, true), 1e-9);
  o.below("max|W1| inverted catenoid", max_w(radial, SurfaceSpec::inverted(SurfaceSpec::catenoid()), grid, true), 1e-9);
  o.near("W1 unit origin sphere", weingarten_functionals(radial, at(SurfaceSpec::sphere_origin(1.0), 0.3, 1.0)).w1,
         3.0, 1e-9);
  double cone_min = INFINITY;
  const SurfaceSpec cone = SurfaceSpec::cone(0.7);
  for (const auto& [u, v] : grid_points(cone.domain(), grid))
    cone_min = std::min(cone_min, std::abs(weingarten_functionals(radial, at(cone, u, v)).w1));
  o.at_least("min|W1| cone", cone_min, 0.1);
  return o;
}

// 7. Class-2 functional.
Outcome criterion_class_two() {
  const auto radial = ConformalFactor::radial_model();
  const Grid grid{10, 10};
  Outcome o;
  o.below("max|W2| plane", max_w(radial, SurfaceSpec::plane_through_origin(Vec3(0.3, -1, 0.5)), grid, false), 1e-9);
  o.below("max|W2| cone", max_w(radial, SurfaceSpec::cone(0.7), grid, false), 1e-9);
  o.near("W2 catenoid waist", weingarten_functionals(radial, at(SurfaceSpec::catenoid(), 0.0, 0.0)).w2, -1.0, 1e-9);
  o.near("W2 unit origin sphere", weingarten_functionals(radial, at(SurfaceSpec::sphere_origin(1.0), 0.3, 1.0)).w2,
         3.0, 1e-9);
  return o;
}

// 8. Isometries.
Outcome criterion_isometries() {
  const auto radial = ConformalFactor::radial_model();
  const auto expo = ConformalFactor::exp_model();
  std::mt19937_64 rng(108);
  double psi_worst = 0.0;
  double inv_worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const Vec3 x = random_point(rng, 0.1, 10.0);
    const Vec3 v = random_vector(rng);
    const Vec3 w = random_vector(rng);
    psi_worst = std::max(psi_worst, psi_isometry_residual(x, v, w));
    inv_worst = std::max(inv_worst, inversion_isometry_residual(radial, x, v, w));
  }
  // Off the unit sphere, where the inversion fixes every factor tangentially.
  double control_min = INFINITY;
  std::uniform_real_distribution<double> log_radius(std::log(0.25), std::log(4.0));
  for (int n = 0; n < 100; ++n) {
    double r = 1.0;
    while (std::abs(std::log(r)) < 0.1) r = std::exp(log_radius(rng));
    const Vec3 x = random_point(rng, r, r);
    const Vec3 v = x.cross(random_vector(rng)).normalized();
    control_min = std::min(control_min, inversion_isometry_residual(expo, x, v, v));
  }
  Outcome o;
  o.below("max psi residual, 1000 samples", psi_worst, 1e-10);
  o.below("max inversion residual, 1000 samples", inv_worst, 1e-10);
  o.at_least("min exp-model inversion residual", control_min, 1e-3);
  return o;
}

// 9. Sectional curvature of the radial model.
Outcome criterion_sectional() {
  const auto radial = ConformalFactor::radial_model();
  std::mt19937_64 rng(109);
  double oracle = 0.0;
  double range = 0.0;
  double sum = 0.0;
  const int planes[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (int n = 0; n < 200; ++n) {
    const Vec3 x = random_point(rng, 0.3, 3.0);
    double total = 0.0;
    for (const auto& p : planes) {
      const double k = sectional_curvature(radial, x, p[0], p[1]);
      oracle = std::max(oracle, std::abs(k - oracles::fd_sectional_curvature(radial, x, p[0], p[1])));
      range = std::max({range, -k, k - 1.0});
      total += k;
    }
    sum = std::max(sum, std::abs(total - 1.0));
  }
  Outcome o;
  o.below("max |closed - FD Riemann|", oracle, 1e-4);
  o.below("max excursion outside [0,1]", std::max(range, 0.0), 1e-15);
  o.below("max |sum of planes - 1|", sum, 1e-10);
  return o;
}

// 10. Length of a radial approach to the origin.
Outcome criterion_completeness() {
  const auto radial = ConformalFactor::radial_model();
  Outcome o;
  for (double r : {1e-2, 1e-4, 1e-6}) {
    std::vector<Vec3> path;
    for (int i = 0; i <= 400; ++i) path.emplace_back(std::pow(r, i / 400.0), 0.0, 0.0);
    std::ostringstream tag;
    tag << "r=" << r << " |L/ln(1/r) - 1|";
    o.below(tag.str(), std::abs(curve_length(radial, path) / std::log(1.0 / r) - 1.0), 1e-2);
  }
  return o;
}

// 11. Oracle cross-checks.
Outcome criterion_oracles() {
  std::mt19937_64 rng(111);
  double chris = 0.0;
  double rhs = 0.0;
  for (const auto& factor : criterion_factors()) {
    for (int n = 0; n < 40; ++n) {
      const Vec3 x = random_point(rng, 0.3, 2.0);
      const ChristoffelTable a = christoffel(factor, x);
      const ChristoffelTable b = oracles::fd_christoffel(factor, x);
      for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) chris = std::max(chris, std::abs(a(k, i, j) - b(k, i, j)));
      const GeodesicState s{x, random_vector(rng)};
      rhs = std::max(rhs, (geodesic_rhs(factor, s) - christoffel_acceleration(factor, s)).norm());
    }
  }
  const std::vector<SurfaceSpec> iso{SurfaceSpec::catenoid(), SurfaceSpec::helicoid(), SurfaceSpec::enneper(),
                                     mercator_sphere(1.3)};
  double gauss = 0.0;
  double conformal = 0.0;
  for (const auto& s : iso) {
    const Grid grid{6, 6};
    const std::vector<double> k = intrinsic_gauss(s, grid);
    const auto pts = grid_points(s.domain(), grid);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const EuclideanCurvature e = at(s, pts[i].first, pts[i].second);
      gauss = std::max(gauss, std::abs(k[i] - e.K));
      for (const auto& factor : criterion_factors()) {
        if (!factor.in_domain(e.t)) continue;
        const double closed = gauss_conformal(factor, e, e.K);
        const double numeric = intrinsic_gauss_at(s, pts[i].first, pts[i].second, factor);
        conformal = std::max(conformal, std::abs(closed - numeric));
      }
    }
  }
  Outcome o;
  o.below("max |Gamma - FD Gamma|", chris, 1e-6);
  o.below("max |K intrinsic - K extrinsic|", gauss, 1e-4);
  o.below("max |K~ closed - K~ intrinsic|", conformal, 1e-4);
  o.below("max |radial rhs - Christoffel contraction|", rhs, 1e-10);
  return o;
}

// 12. Profile ODE reproduces the unit sphere under the exponential factor.
Outcome criterion_profile() {
  const RotationProfile p =
      solve_profile(ConformalFactor::exp_model(), 9.0 * std::exp(-2.0), {0.0, 1.0, 0.0}, -0.9, 0.9, 1e-3);
  double worst = 0.0;
  for (int i = 0; i <= 1800; ++i) {
    const double u = -0.9 + 1.8 * i / 1800.0;
    worst = std::max(worst, std::abs(p(u).phi - std::sqrt(1.0 - u * u)));
  }
  Outcome o;
  o.below("max |phi - sqrt(1-u^2)|, |u| <= 0.9", worst, 1e-6);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "sphere extrinsic curvature", criterion_sphere_extrinsic},
      {2, "radius round trip", criterion_radius_round_trip},
      {3, "radial model sphere battery", criterion_sphere_battery},
      {4, "geodesics", criterion_geodesics},
      {5, "weingarten identity", criterion_weingarten_identity},
      {6, "class-1 functional", criterion_class_one},
      {7, "class-2 functional", criterion_class_two},
      {8, "isometries", criterion_isometries},
      {9, "sectional curvature", criterion_sectional},
      {10, "completeness", criterion_completeness},
      {11, "oracle cross-checks", criterion_oracles},
      {12, "profile ode", criterion_profile},
  };

  int failed = 0;
  const auto begin = std::chrono::steady_clock::now();
  for (const auto& c : criteria) {
    std::vector<std::string> failures;
    std::string summary;
    try {
      const Outcome o = c.run();
      for (const auto& sub : o.checks)
        if (!sub.pass()) failures.push_back(describe(sub));
      summary = std::to_string(o.checks.size() - failures.size()) + "/" + std::to_string(o.checks.size()) + " checks";
      if (failures.empty() && o.checks.size() == 1) summary = describe(o.checks.front());
    } catch (const std::exception& err) {
      failures.push_back(std::string("exception: ") + err.what());
    }
    const bool ok = failures.empty();
    failed += ok ? 0 : 1;
    std::printf("%s %2d %-28s %s\n", ok ? "PASS" : "FAIL", c.id, c.title, summary.c_str());
    for (const auto& f : failures) std::printf("       - %s\n", f.c_str());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
  std::printf("%zu criteria, %d failed, %.2f s\n", criteria.size(), failed, seconds);
  return failed == 0 ? 0 : 1;
}
