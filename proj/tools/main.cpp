#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/options.hpp"
#include "cli/verify.hpp"
#include "radialgeo/errors.hpp"

namespace {

using namespace radialgeo::cli;

struct Flags {
  std::optional<std::string> config, factor, surface, grid, out, map, sweep, start, direction, u_range;
  std::optional<double> c0, step, length;
  std::optional<std::uint64_t> seed;
  bool timestamps = false;
  bool profile = false;
};

void add_common(CLI::App* cmd, Flags& f, const char* out_help = "output path (default: stdout)") {
  cmd->add_option("--config", f.config, "JSON config document; flags override its keys");
  cmd->add_option("--factor", f.factor, "euclidean | radial | exp | custom:<affine|power|exp>:a,b");
  cmd->add_option("--out", f.out, out_help);
}

RunConfig resolve(const Flags& f) {
  RunConfig cfg = f.config ? load_config(*f.config) : RunConfig{};
  if (f.factor) cfg.factor = *f.factor;
  if (f.surface) cfg.surface = read_json_argument(*f.surface);
  if (f.grid) cfg.grid = parse_grid(*f.grid);
  if (f.out) cfg.out = *f.out;
  if (f.map) cfg.map = parse_map(*f.map);
  if (f.c0) cfg.c0 = *f.c0;
  if (f.sweep) cfg.sweep = parse_sweep(*f.sweep);
  if (f.step) cfg.step = *f.step;
  if (f.length) cfg.length = *f.length;
  if (f.start) cfg.start = parse_vec3(*f.start);
  if (f.direction) cfg.direction = parse_vec3(*f.direction);
  if (f.u_range) std::tie(cfg.u_lo, cfg.u_hi) = parse_range(*f.u_range);
  if (f.seed) cfg.seed = *f.seed;
  if (f.timestamps) cfg.timestamps = true;
  if (f.profile) cfg.profile = true;
  return cfg;
}

std::unique_ptr<std::ofstream> open_output(const std::string& path) {
  auto file = std::make_unique<std::ofstream>(path);
  if (!*file) throw ConfigError("cannot write '" + path + "'");
  return file;
}

int dispatch(const std::string& name, const RunConfig& cfg) {
  if (name == "mesh") {
    if (cfg.out.empty()) throw ConfigError("mesh needs --out for the OBJ file");
    auto obj = open_output(cfg.out);
    auto side = open_output(sidecar_path(cfg.out));
    return cmd_mesh(cfg, *obj, *side, std::cerr);
  }
  std::unique_ptr<std::ofstream> file;
  if (!cfg.out.empty()) file = open_output(cfg.out);
  std::ostream& out = file ? static_cast<std::ostream&>(*file) : std::cout;
  if (name == "verify") return cmd_verify(cfg, out, std::cerr);
  if (name == "curvature") return cmd_curvature(cfg, out, std::cerr);
  if (name == "geodesic") return cmd_geodesic(cfg, out, std::cerr);
  return cmd_rotation(cfg, out, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curvature, geodesic and rotation-surface tools for radial conformally flat metrics"};
  app.require_subcommand(1);
  Flags f;

  auto* verify = app.add_subcommand("verify", "run the invariant battery and print a JSON report");
  add_common(verify, f);
  verify->add_option("--seed", f.seed, "seed for sampled checks");
  verify->add_flag("--timestamps", f.timestamps, "record start and finish times in the report");

  auto* curvature = app.add_subcommand("curvature", "per-point curvatures of a surface as CSV");
  add_common(curvature, f);
  curvature->add_option("--surface", f.surface, "surface JSON, inline or a path");
  curvature->add_option("--grid", f.grid, "grid size NxM");

  auto* geodesic = app.add_subcommand("geodesic", "integrate an arc-length geodesic to CSV");
  add_common(geodesic, f);
  geodesic->add_option("--start", f.start, "start point x,y,z");
  geodesic->add_option("--direction", f.direction, "initial direction x,y,z");
  geodesic->add_option("--length", f.length, "arc length");
  geodesic->add_option("--step", f.step, "RK4 step");

  auto* rotation = app.add_subcommand("rotation", "sphere radii for a prescribed extrinsic curvature, or a profile");
  add_common(rotation, f);
  rotation->add_option("--c0", f.c0, "prescribed extrinsic curvature");
  rotation->add_option("--sweep", f.sweep, "log-spaced c0 sweep lo:hi:n");
  rotation->add_flag("--profile", f.profile, "integrate the profile equation instead of solving for radii");
  rotation->add_option("--start", f.start, "profile initial data u0,phi,dphi");
  rotation->add_option("--u-range", f.u_range, "profile interval lo:hi");
  rotation->add_option("--step", f.step, "RK4 step");

  auto* mesh = app.add_subcommand("mesh", "OBJ mesh plus per-vertex curvature CSV");
  add_common(mesh, f, "OBJ path (required); the CSV sidecar goes next to it");
  mesh->add_option("--surface", f.surface, "surface JSON, inline or a path");
  mesh->add_option("--grid", f.grid, "grid size NxM");
  mesh->add_option("--map", f.map, "none | psi | inversion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    return dispatch(name, resolve(f));
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const radialgeo::GeometryError& e) {
    std::cerr << error_tag(e) << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
