#pragma once

#include <nlohmann/json.hpp>

#include "radialgeo/surface.hpp"

namespace radialgeo::cli {

/// {"name": ..., "params": {...}, "domain": [u0, u1, v0, v1]} with names
/// sphere_origin, sphere_general, plane, cone, catenoid, helicoid, enneper,
/// rotation (params.profile = "sphere" | "cosine") and inverted (params.inner).
/// Throws ConfigError on unknown names or parameters.
SurfaceSpec surface_from_json(const nlohmann::json& j);

/// Inverse of surface_from_json. Custom surfaces and integrated profiles have
/// no JSON form and raise ConfigError.
nlohmann::json surface_to_json(const SurfaceSpec& spec);

}  // namespace radialgeo::cli
