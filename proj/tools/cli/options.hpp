#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "radialgeo/surface.hpp"
#include "radialgeo/types.hpp"

namespace radialgeo::cli {

/// Bad flags or configuration; maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Sweep {
  double lo = 0.0;
  double hi = 0.0;
  int n = 0;
};

enum class MeshMap { None, Psi, Inversion };

struct RunConfig {
  std::string factor = "radial";
  nlohmann::json surface;  // null when not given
  Grid grid{10, 10};
  std::string out;         // empty: stdout
  MeshMap map = MeshMap::None;
  std::optional<double> c0;
  std::optional<Sweep> sweep;
  double step = 1e-3;
  double length = 1.0;
  std::optional<Vec3> start;
  std::optional<Vec3> direction;
  double u_lo = -0.9;
  double u_hi = 0.9;
  bool profile = false;
  std::uint64_t seed = 0;
  bool timestamps = false;
  nlohmann::json extra_checks = nlohmann::json::array();
};

Grid parse_grid(const std::string& text);
Sweep parse_sweep(const std::string& text);
MeshMap parse_map(const std::string& text);
std::string to_string(MeshMap map);
/// "a,b,c" or a JSON array of three numbers.
Vec3 parse_vec3(const std::string& text);
std::pair<double, double> parse_range(const std::string& text);

/// Reads a config document; unknown keys and wrong types are ConfigErrors.
RunConfig load_config(const std::string& path);
void apply_config(RunConfig& cfg, const nlohmann::json& doc);

/// Inline JSON if the text starts with '{', otherwise a path to a JSON file.
nlohmann::json read_json_argument(const std::string& text);

}  // namespace radialgeo::cli
