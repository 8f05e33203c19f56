#pragma once

#include <exception>
#include <ostream>
#include <string>

#include "options.hpp"

namespace radialgeo::cli {

/// Short tag for an exception, used in CSV status columns ("domain_error", ...).
std::string error_tag(const std::exception& e);

int cmd_curvature(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_geodesic(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_rotation(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// Writes the OBJ to `obj` and per-vertex curvatures to `sidecar`.
int cmd_mesh(const RunConfig& cfg, std::ostream& obj, std::ostream& sidecar, std::ostream& err);

/// Sidecar path for a mesh written to `obj_path`: foo.obj -> foo.csv.
std::string sidecar_path(const std::string& obj_path);

}  // namespace radialgeo::cli
