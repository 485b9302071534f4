#pragma once

#include <json.hpp>

#include "hqm/mappings.hpp"

namespace hqm {

// Map descriptor wire format:
//   {"variant": "...", "params": {...}, "h_coeffs": [[re,im],...], "g_coeffs": [...]}
// Coefficient arrays appear only for the "series" variant; wrapper variants nest
// their base descriptor under params.base.
nlohmann::json map_to_json(const HarmonicMap& map);
HarmonicMap map_from_json(const nlohmann::json& j);

}  // namespace hqm
