#include "commands.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "csv.hpp"
#include "parallel.hpp"
#include "radialgeo/radialgeo.hpp"
#include "surface_json.hpp"

namespace radialgeo::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

ConformalFactor factor_of(const RunConfig& cfg) {
  try {
    return ConformalFactor::parse(cfg.factor);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

SurfaceSpec surface_of(const RunConfig& cfg) {
  if (cfg.surface.is_null()) throw ConfigError("this command needs --surface");
  return surface_from_json(cfg.surface);
}

std::string status_of(const std::exception& e) { return error_tag(e) + ": " + e.what(); }

struct CurvatureRow {
  double u = 0, v = 0;
  std::optional<EuclideanCurvature> eucl;
  std::optional<ConformalCurvature> conf;
  std::string status = "ok";
};

CurvatureRow curvature_row(const SurfaceSpec& spec, const ConformalFactor& factor, double u, double v) {
  CurvatureRow row;
  row.u = u;
  row.v = v;
  try {
    row.eucl = euclidean_curvatures(jet(spec, u, v));
    row.conf = transform(factor, *row.eucl);
  } catch (const GeometryError& e) {
    row.status = status_of(e);
  }
  return row;
}

std::vector<std::string> conformal_fields(const std::optional<ConformalCurvature>& c) {
  if (!c) return std::vector<std::string>(7, fmt(kNaN));
  return {fmt(c->lambda1_t), fmt(c->lambda2_t), fmt(c->mean_t), fmt(c->extrinsic_t),
          fmt(c->gauss_t),   fmt(c->w1),        fmt(c->w2)};
}

// d/ds at node i from the three-point Lagrange stencil on nonuniform nodes.
Vec3 derivative(const std::vector<double>& s, const std::vector<GeodesicState>& y, std::size_t i) {
  const std::size_t n = s.size();
  if (n == 2) return (y[1].xdot - y[0].xdot) / (s[1] - s[0]);
  const std::size_t m = std::clamp<std::size_t>(i, 1, n - 2);
  const double a = s[m - 1], b = s[m], c = s[m + 1], x = s[i];
  const double la = (2 * x - b - c) / ((a - b) * (a - c));
  const double lb = (2 * x - a - c) / ((b - a) * (b - c));
  const double lc = (2 * x - a - b) / ((c - a) * (c - b));
  return la * y[m - 1].xdot + lb * y[m].xdot + lc * y[m + 1].xdot;
}

std::vector<double> c0_values(const RunConfig& cfg) {
  if (cfg.sweep) {
    const Sweep& sw = *cfg.sweep;
    std::vector<double> out;
    for (int i = 0; i < sw.n; ++i)
      out.push_back(sw.n == 1 ? sw.lo : std::exp(std::log(sw.lo) + (std::log(sw.hi) - std::log(sw.lo)) * i / (sw.n - 1)));
    return out;
  }
  if (cfg.c0) return {*cfg.c0};
  throw ConfigError("rotation needs --c0 or --sweep");
}

struct ScanSummary {
  double w_min = kNaN;
  bool monotone = false;
};

ScanSummary scan_w(const ConformalFactor& factor) {
  ScanSummary out;
  out.w_min = std::numeric_limits<double>::infinity();
  bool up = true;
  bool down = true;
  double prev = kNaN;
  for (int i = 0; i < kScanNodes; ++i) {
    const double t = std::exp(std::log(kScanTMin) + (std::log(kScanTMax) - std::log(kScanTMin)) * i / (kScanNodes - 1));
    double w = kNaN;
    try {
      w = curvature_radius_function(factor, t);
    } catch (const DomainError&) {
    }
    if (!std::isfinite(w)) continue;
    out.w_min = std::min(out.w_min, w);
    if (std::isfinite(prev)) {
      up = up && w >= prev;
      down = down && w <= prev;
    }
    prev = w;
  }
  out.monotone = up || down;
  if (!std::isfinite(out.w_min)) out.w_min = kNaN;
  return out;
}

}  // namespace

std::string error_tag(const std::exception& e) {
  if (dynamic_cast<const DomainError*>(&e)) return "domain_error";
  if (dynamic_cast<const RegularityError*>(&e)) return "regularity_error";
  if (dynamic_cast<const NotIsothermalError*>(&e)) return "not_isothermal";
  if (dynamic_cast<const StepError*>(&e)) return "step_error";
  if (dynamic_cast<const ParametrizationError*>(&e)) return "parametrization_error";
  if (dynamic_cast<const NoBracketError*>(&e)) return "no_bracket";
  if (dynamic_cast<const HypothesisError*>(&e)) return "hypothesis_error";
  if (dynamic_cast<const SingularCoefficientError*>(&e)) return "singular_coefficient";
  if (dynamic_cast<const ConfigError*>(&e)) return "config_error";
  return "error";
}

int cmd_curvature(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ConformalFactor factor = factor_of(cfg);
  const SurfaceSpec spec = surface_of(cfg);
  const auto points = grid_points(spec.domain(), cfg.grid);
  const auto rows = parallel_map<CurvatureRow>(
      points.size(), [&](std::size_t i) { return curvature_row(spec, factor, points[i].first, points[i].second); });

  write_row(out, {"u", "v", "E", "G", "e", "f", "g", "H", "K", "t", "nu", "lambda1t", "lambda2t", "Ht", "KEt", "Kt",
                  "W1", "W2", "status"});
  std::size_t flagged = 0;
  for (const auto& r : rows) {
    std::vector<std::string> f{fmt(r.u), fmt(r.v)};
    if (r.eucl) {
      const EuclideanCurvature& e = *r.eucl;
      for (double x : {e.E, e.G, e.e, e.f, e.g, e.H, e.K, e.t, e.nu}) f.push_back(fmt(x));
    } else {
      f.insert(f.end(), 9, fmt(kNaN));
    }
    const auto c = conformal_fields(r.conf);
    f.insert(f.end(), c.begin(), c.end());
    f.push_back(r.status);
    flagged += r.status != "ok";
    write_row(out, f);
  }
  if (flagged) err << flagged << " of " << rows.size() << " grid points flagged\n";
  return 0;
}

int cmd_geodesic(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ConformalFactor factor = factor_of(cfg);
  const GeodesicState start{cfg.start.value_or(Vec3(1, 0, 0)), cfg.direction.value_or(Vec3(0, 1, 0))};
  const Trajectory tr = [&] {
    try {
      return integrate(factor, start, cfg.length, cfg.step);
    } catch (const GeometryError& e) {
      throw ConfigError(status_of(e));
    }
  }();
  write_row(out, {"s", "x1", "x2", "x3", "gspeed", "residual"});
  for (std::size_t i = 0; i < tr.states.size(); ++i) {
    const GeodesicState& st = tr.states[i];
    const double residual =
        tr.states.size() < 2 ? 0.0 : (derivative(tr.s, tr.states, i) - geodesic_rhs(factor, st)).norm();
    write_row(out, {fmt(tr.s[i]), fmt(st.x.x()), fmt(st.x.y()), fmt(st.x.z()), fmt(g_speed(factor, st)), fmt(residual)});
  }
  if (tr.truncated) err << "trajectory truncated at s = " << fmt(tr.s.back()) << ": " << tr.note << '\n';
  return 0;
}

int cmd_rotation(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ConformalFactor factor = factor_of(cfg);
  if (cfg.profile) {
    if (!cfg.c0) throw ConfigError("profile mode needs --c0");
    const Vec3 s = cfg.start.value_or(Vec3(0, 1, 0));
    const RotationProfile p = solve_profile(factor, *cfg.c0, {s.x(), s.y(), s.z()}, cfg.u_lo, cfg.u_hi, cfg.step);
    write_row(out, {"u", "phi", "dphi", "d2phi", "residual"});
    for (std::size_t i = 0; i < p.nodes().size(); ++i) {
      const double u = p.nodes()[i];
      const ProfileValue& v = p.node_values()[i];
      write_row(out, {fmt(u), fmt(v.phi), fmt(v.dphi), fmt(v.d2phi), fmt(extrinsic_residual(factor, v, u, *cfg.c0))});
    }
    return 0;
  }

  const std::vector<double> c0s = c0_values(cfg);
  const ScanSummary scan = scan_w(factor);
  struct Row {
    std::vector<std::string> fields;
    bool ok = true;
  };
  const auto rows = parallel_map<Row>(c0s.size(), [&](std::size_t i) {
    const double c0 = c0s[i];
    Row row;
    try {
      const RadiusRoots r = radius_for_curvature(factor, c0);
      std::string joined;
      for (std::size_t k = 0; k < r.roots.size(); ++k) joined += (k ? ";" : "") + fmt(r.roots[k]);
      row.fields = {fmt(c0),
                    joined,
                    fmt(r.w_min),
                    std::to_string(r.brackets.size()),
                    fmt(r.smallest),
                    fmt(curvature_radius_function(factor, r.smallest * r.smallest)),
                    scan.monotone ? "true" : "false",
                    "ok"};
    } catch (const GeometryError& e) {
      row.ok = false;
      row.fields = {fmt(c0), "", fmt(scan.w_min), "0", fmt(kNaN), fmt(kNaN), scan.monotone ? "true" : "false",
                    status_of(e)};
    }
    return row;
  });
  write_row(out, {"c0", "R_roots", "w_min", "brackets_found", "R_smallest", "w_at_R", "monotone", "status"});
  std::size_t flagged = 0;
  for (const auto& r : rows) {
    write_row(out, r.fields);
    flagged += !r.ok;
  }
  if (flagged) err << flagged << " of " << rows.size() << " curvature values have no admissible radius\n";
  return 0;
}

std::string sidecar_path(const std::string& obj_path) {
  const std::string ext = ".obj";
  if (obj_path.size() > ext.size() && obj_path.compare(obj_path.size() - ext.size(), ext.size(), ext) == 0)
    return obj_path.substr(0, obj_path.size() - ext.size()) + ".csv";
  return obj_path + ".csv";
}

int cmd_mesh(const RunConfig& cfg, std::ostream& obj, std::ostream& sidecar, std::ostream& err) {
  const ConformalFactor factor = factor_of(cfg);
  const SurfaceSpec source = surface_of(cfg);
  const SurfaceSpec spec = cfg.map == MeshMap::Inversion ? invert_surface(source) : source;
  const auto points = grid_points(spec.domain(), cfg.grid);

  struct Vertex {
    std::optional<Vec3> x;
    std::optional<ProductPoint> pp;
    CurvatureRow curv;
  };
  const auto vertices = parallel_map<Vertex>(points.size(), [&](std::size_t i) {
    const auto [u, v] = points[i];
    Vertex vx;
    vx.curv = curvature_row(spec, factor, u, v);
    try {
      const Vec3 x = to_surface_jet(spec.evaluate(u, v)).X;
      if (x.allFinite()) {
        if (cfg.map == MeshMap::Psi) {
          vx.pp = psi(x);
          vx.x = psi_inv(*vx.pp);
        } else {
          vx.x = x;
        }
      }
    } catch (const GeometryError& e) {
      vx.curv.status = status_of(e);
    }
    if (!vx.x && vx.curv.status == "ok") vx.curv.status = "domain_error: non-finite vertex";
    return vx;
  });

  obj << "# radialgeo mesh: " << spec.name() << ", map " << to_string(cfg.map) << ", grid " << cfg.grid.nu << "x"
      << cfg.grid.nv << '\n';
  for (const auto& vx : vertices) {
    const Vec3 x = vx.x.value_or(Vec3::Zero());
    obj << "v " << fmt(x.x()) << ' ' << fmt(x.y()) << ' ' << fmt(x.z()) << '\n';
  }
  const int nv = cfg.grid.nv;
  const auto idx = [nv](int i, int j) { return static_cast<std::size_t>(i * nv + j); };
  std::size_t skipped = 0;
  for (int i = 0; i + 1 < cfg.grid.nu; ++i)
    for (int j = 0; j + 1 < nv; ++j) {
      const std::size_t a = idx(i, j), b = idx(i + 1, j), c = idx(i + 1, j + 1), d = idx(i, j + 1);
      if (!vertices[a].x || !vertices[b].x || !vertices[c].x || !vertices[d].x) {
        ++skipped;
        continue;
      }
      obj << "f " << a + 1 << ' ' << b + 1 << ' ' << c + 1 << '\n';
      obj << "f " << a + 1 << ' ' << c + 1 << ' ' << d + 1 << '\n';
    }

  std::vector<std::string> header{"index", "u", "v", "x", "y", "z", "Ht", "KEt", "Kt", "W1", "W2", "status"};
  if (cfg.map == MeshMap::Psi) header.insert(header.end(), {"p1", "p2", "p3", "h"});
  write_row(sidecar, header);
  std::size_t flagged = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex& vx = vertices[i];
    const Vec3 x = vx.x.value_or(Vec3::Constant(kNaN));
    std::vector<std::string> f{std::to_string(i + 1), fmt(points[i].first), fmt(points[i].second),
                               fmt(x.x()),            fmt(x.y()),            fmt(x.z())};
    const auto c = conformal_fields(vx.curv.conf);
    f.insert(f.end(), {c[2], c[3], c[4], c[5], c[6], vx.curv.status});
    if (cfg.map == MeshMap::Psi) {
      const ProductPoint pp = vx.pp.value_or(ProductPoint{Vec3::Constant(kNaN), kNaN});
      f.insert(f.end(), {fmt(pp.p.x()), fmt(pp.p.y()), fmt(pp.p.z()), fmt(pp.h)});
    }
    flagged += vx.curv.status != "ok";
    write_row(sidecar, f);
  }
  if (flagged) err << flagged << " of " << vertices.size() << " vertices flagged\n";
  if (skipped) err << skipped << " quads skipped at missing vertices\n";
  return 0;
}

}  // namespace radialgeo::cli
