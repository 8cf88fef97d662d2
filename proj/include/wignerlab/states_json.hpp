// states_json.hpp — JSON (de)serialization of state specifications.
//
// Schema (one top-level key per spec):
//   {"named": {"name": "werner", "x": 0.3}}
//   {"named": {"name": "bell", "kind": "psi_minus"}}
//   {"named": {"name": "coherent", "re": 1.0, "im": -0.5}}
//   {"matrix": {"re": [[...]], "im": [[...]]}}        (im optional)
//   {"pure": {"re": [...], "im": [...]}}              (im optional)
//   {"mixture": [{"weight": w, "state": {...}}, ...]}
//   {"product": [{...}, {...}]}

#pragma once

#include <string>

#include <json.hpp>

#include "wignerlab/states.hpp"

namespace wignerlab {

// Both throw std::invalid_argument naming the offending field.
StateSpec parse_state_spec(const nlohmann::json& j, const std::string& path = "state");
StateSpec parse_state_spec_text(const std::string& text);

nlohmann::json state_spec_to_json(const StateSpec& spec);

// Serializes an explicit matrix spec that reproduces the state exactly.
nlohmann::json density_to_spec_json(const DensityMatrix& rho);

}  // namespace wignerlab
