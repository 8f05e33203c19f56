#include "options.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace radialgeo::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double to_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ConfigError("invalid number '" + text + "' in " + what);
  }
  if (used != text.size()) throw ConfigError("invalid number '" + text + "' in " + what);
  return value;
}

int to_int(const std::string& text, const std::string& what) {
  const double v = to_double(text, what);
  if (v != static_cast<int>(v)) throw ConfigError("expected an integer in " + what + ", got '" + text + "'");
  return static_cast<int>(v);
}

Vec3 vec3_from_json(const nlohmann::json& j, const std::string& key) {
  if (!j.is_array() || j.size() != 3) throw ConfigError("'" + key + "' must be an array of three numbers");
  Vec3 v;
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_number()) throw ConfigError("'" + key + "' must be an array of three numbers");
    v[i] = j[i].get<double>();
  }
  return v;
}

double number(const nlohmann::json& j, const std::string& key) {
  if (!j.is_number()) throw ConfigError("'" + key + "' must be a number");
  return j.get<double>();
}

std::string text(const nlohmann::json& j, const std::string& key) {
  if (!j.is_string()) throw ConfigError("'" + key + "' must be a string");
  return j.get<std::string>();
}

}  // namespace

Grid parse_grid(const std::string& s) {
  const auto parts = split(s, 'x');
  if (parts.size() != 2) throw ConfigError("grid must look like NxM, got '" + s + "'");
  Grid g{to_int(parts[0], "grid"), to_int(parts[1], "grid")};
  if (g.nu < 1 || g.nv < 1) throw ConfigError("grid counts must be positive");
  return g;
}

Sweep parse_sweep(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 3) throw ConfigError("sweep must look like lo:hi:n, got '" + s + "'");
  Sweep sw{to_double(parts[0], "sweep"), to_double(parts[1], "sweep"), to_int(parts[2], "sweep")};
  if (!(sw.lo > 0.0) || !(sw.hi >= sw.lo) || sw.n < 1) throw ConfigError("sweep needs 0 < lo <= hi and n >= 1");
  return sw;
}

MeshMap parse_map(const std::string& s) {
  if (s == "none") return MeshMap::None;
  if (s == "psi") return MeshMap::Psi;
  if (s == "inversion") return MeshMap::Inversion;
  throw ConfigError("map must be none, psi or inversion, got '" + s + "'");
}

std::string to_string(MeshMap map) {
  switch (map) {
    case MeshMap::None: return "none";
    case MeshMap::Psi: return "psi";
    case MeshMap::Inversion: return "inversion";
  }
  return "none";
}

Vec3 parse_vec3(const std::string& s) {
  if (!s.empty() && s.front() == '[') {
    try {
      return vec3_from_json(nlohmann::json::parse(s), "vector");
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("invalid vector: ") + e.what());
    }
  }
  const auto parts = split(s, ',');
  if (parts.size() != 3) throw ConfigError("expected three comma-separated numbers, got '" + s + "'");
  return {to_double(parts[0], "vector"), to_double(parts[1], "vector"), to_double(parts[2], "vector")};
}

std::pair<double, double> parse_range(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 2) throw ConfigError("range must look like lo:hi, got '" + s + "'");
  const double lo = to_double(parts[0], "range");
  const double hi = to_double(parts[1], "range");
  if (!(lo < hi)) throw ConfigError("range needs lo < hi");
  return {lo, hi};
}

nlohmann::json read_json_argument(const std::string& arg) {
  try {
    if (!arg.empty() && arg.front() == '{') return nlohmann::json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw ConfigError("cannot open '" + arg + "'");
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
}

void apply_config(RunConfig& cfg, const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key == "factor") {
      cfg.factor = text(value, key);
    } else if (key == "surface") {
      if (!value.is_object()) throw ConfigError("'surface' must be an object");
      cfg.surface = value;
    } else if (key == "grid") {
      if (value.is_string()) {
        cfg.grid = parse_grid(value.get<std::string>());
      } else if (value.is_array() && value.size() == 2 && value[0].is_number_integer() && value[1].is_number_integer()) {
        cfg.grid = {value[0].get<int>(), value[1].get<int>()};
        if (cfg.grid.nu < 1 || cfg.grid.nv < 1) throw ConfigError("grid counts must be positive");
      } else {
        throw ConfigError("'grid' must be \"NxM\" or [N, M]");
      }
    } else if (key == "out") {
      cfg.out = text(value, key);
    } else if (key == "map") {
      cfg.map = parse_map(text(value, key));
    } else if (key == "c0") {
      cfg.c0 = number(value, key);
    } else if (key == "sweep") {
      cfg.sweep = parse_sweep(text(value, key));
    } else if (key == "step") {
      cfg.step = number(value, key);
    } else if (key == "length") {
      cfg.length = number(value, key);
    } else if (key == "start") {
      cfg.start = vec3_from_json(value, key);
    } else if (key == "direction") {
      cfg.direction = vec3_from_json(value, key);
    } else if (key == "u_range") {
      const auto [lo, hi] = parse_range(text(value, key));
      cfg.u_lo = lo;
      cfg.u_hi = hi;
    } else if (key == "profile") {
      if (!value.is_boolean()) throw ConfigError("'profile' must be a boolean");
      cfg.profile = value.get<bool>();
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) throw ConfigError("'seed' must be a non-negative integer");
      cfg.seed = value.get<std::uint64_t>();
    } else if (key == "timestamps") {
      if (!value.is_boolean()) throw ConfigError("'timestamps' must be a boolean");
      cfg.timestamps = value.get<bool>();
    } else if (key == "extra_checks") {
      if (!value.is_array()) throw ConfigError("'extra_checks' must be an array");
      cfg.extra_checks = value;
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
}

RunConfig load_config(const std::string& path) {
  RunConfig cfg;
  apply_config(cfg, read_json_argument(path));
  return cfg;
}

}  // namespace radialgeo::cli
