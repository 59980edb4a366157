#pragma once

#include "capgeo/geometry.hpp"
#include "capgeo/morphology.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace capgeo::io {

using json = nlohmann::ordered_json;

/// Round to 12 significant digits; all emitted numbers pass through this so
/// repeated runs serialize byte-identically.
double round12(double x);

json domain_json(const Domain& d);
json region_json(const Region& reg);

Domain parse_domain(const json& j);
Region parse_region(const json& j);

/// Reads a whole file, or standard input when path is "-".
std::string read_input(const std::string& path);

}  // namespace capgeo::io
