#pragma once

#include <iosfwd>

#include <nlohmann/json_fwd.hpp>

#include "aqfock/radial.hpp"

// Serialization of radial measures:
//   JSON  {"alpha":..,"q":..,"atoms":[{"r":..,"w":..},...],
//          "truncation":{"tol":..,"terms":..,"residual":..}}
//   CSV   header "r,w", one atom per row, positions ascending.

namespace aqfock {

nlohmann::json measure_to_json(const QParams& params, const DiscreteRadialMeasure& mu);

/// Inverse of measure_to_json; atom order in the file is irrelevant
/// (canonicalization reapplies). Fills *params_out when non-null.
DiscreteRadialMeasure measure_from_json(const nlohmann::json& j, QParams* params_out = nullptr);

void write_csv(std::ostream& os, const DiscreteRadialMeasure& mu);

}  // namespace aqfock
