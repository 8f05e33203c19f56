#include "surface_json.hpp"

#include <set>

#include "options.hpp"
#include "radialgeo/errors.hpp"

namespace radialgeo::cli {

namespace {

using nlohmann::json;

class Params {
 public:
  Params(const json& j, std::string surface) : surface_(std::move(surface)) {
    if (j.is_null()) return;
    if (!j.is_object()) throw ConfigError("'params' of " + surface_ + " must be an object");
    j_ = j;
  }

  double num(const std::string& key, double fallback) {
    used_.insert(key);
    if (!j_.contains(key)) return fallback;
    if (!j_[key].is_number()) throw ConfigError(surface_ + " parameter '" + key + "' must be a number");
    return j_[key].get<double>();
  }

  std::string str(const std::string& key, const std::string& fallback) {
    used_.insert(key);
    if (!j_.contains(key)) return fallback;
    if (!j_[key].is_string()) throw ConfigError(surface_ + " parameter '" + key + "' must be a string");
    return j_[key].get<std::string>();
  }

  const json& raw(const std::string& key) {
    used_.insert(key);
    if (!j_.contains(key)) throw ConfigError(surface_ + " needs parameter '" + key + "'");
    return j_[key];
  }

  void finish() const {
    for (const auto& [key, value] : j_.items())
      if (!used_.count(key)) throw ConfigError("unknown parameter '" + key + "' for surface " + surface_);
  }

 private:
  json j_ = json::object();
  std::string surface_;
  std::set<std::string> used_;
};

ParamDomain domain_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw ConfigError("'domain' must be [u0, u1, v0, v1]");
  for (const auto& x : j)
    if (!x.is_number()) throw ConfigError("'domain' must be [u0, u1, v0, v1]");
  ParamDomain d{j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
  if (!(d.u0 < d.u1) || !(d.v0 < d.v1)) throw ConfigError("'domain' needs u0 < u1 and v0 < v1");
  return d;
}

SurfaceSpec build(const std::string& name, Params& p) {
  if (name == "sphere_origin") return SurfaceSpec::sphere_origin(p.num("radius", 1.0));
  if (name == "sphere_general")
    return SurfaceSpec::sphere_general(Vec3(p.num("cx", 0.0), p.num("cy", 0.0), p.num("cz", 0.0)), p.num("radius", 1.0));
  if (name == "plane") return SurfaceSpec::plane_through_origin(Vec3(p.num("nx", 0.0), p.num("ny", 0.0), p.num("nz", 1.0)));
  if (name == "cone") return SurfaceSpec::cone(p.num("half_angle", 0.7853981633974483));
  if (name == "catenoid") return SurfaceSpec::catenoid(p.num("scale", 1.0));
  if (name == "helicoid") return SurfaceSpec::helicoid(p.num("scale", 1.0));
  if (name == "enneper") return SurfaceSpec::enneper();
  if (name == "rotation") {
    const std::string profile = p.str("profile", "sphere");
    if (profile == "sphere") return SurfaceSpec::rotation(RotationProfile::sphere(p.num("radius", 1.0)));
    if (profile == "cosine")
      return SurfaceSpec::rotation(RotationProfile::cosine(p.num("base", 1.5), p.num("amplitude", 0.5),
                                                           p.num("u_min", -2.0), p.num("u_max", 2.0)));
    throw ConfigError("rotation profile must be 'sphere' or 'cosine', got '" + profile + "'");
  }
  if (name == "inverted") return SurfaceSpec::inverted(surface_from_json(p.raw("inner")));
  throw ConfigError("unknown surface '" + name + "'");
}

}  // namespace

SurfaceSpec surface_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("surface must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (key != "name" && key != "params" && key != "domain") throw ConfigError("unknown surface key '" + key + "'");
  if (!j.contains("name") || !j["name"].is_string()) throw ConfigError("surface needs a string 'name'");
  const std::string name = j["name"].get<std::string>();
  Params params(j.value("params", json()), name);
  SurfaceSpec spec = [&] {
    try {
      return build(name, params);
    } catch (const GeometryError& e) {
      throw ConfigError("invalid " + name + " parameters: " + e.what());
    }
  }();
  params.finish();
  if (j.contains("domain")) spec = spec.with_domain(domain_from_json(j["domain"]));
  return spec;
}

json surface_to_json(const SurfaceSpec& spec) {
  json params = json::object();
  std::string name = to_string(spec.kind());
  switch (spec.kind()) {
    case SurfaceKind::Custom:
      throw ConfigError("custom surface '" + spec.name() + "' has no JSON form");
    case SurfaceKind::Inverted:
      params["inner"] = surface_to_json(*spec.inner());
      break;
    case SurfaceKind::Rotation: {
      const std::string& profile = spec.profile()->name();
      if (profile != "sphere" && profile != "cosine")
        throw ConfigError("rotation profile '" + profile + "' has no JSON form");
      params = spec.params();
      params["profile"] = profile;
      break;
    }
    default:
      params = spec.params();
      break;
  }
  const ParamDomain& d = spec.domain();
  return {{"name", name}, {"params", params}, {"domain", {d.u0, d.u1, d.v0, d.v1}}};
}

}  // namespace radialgeo::cli
