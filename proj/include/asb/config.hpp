#pragma once

#include "asb/nav.hpp"
#include "asb/sensors.hpp"
#include "asb/vehicle.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace asb {

// Everything a run needs beyond the mission and the grid. Every key has a
// documented default, so an empty file (or none at all) is a valid
// configuration; unknown keys are rejected rather than silently ignored.
struct RunConfig {
    SensorSuite suite;
    PowerModel power;
    VehicleParams vehicle;
    HullSpec hull;
    SteeringGains gains;
    std::uint64_t seed = 0;
    bool noise_enabled = true;
    std::optional<GeoPoint> start_pos; // default: first waypoint of the mission
    double start_heading_deg = 0.0;
};

// Flat `key = value` text, '#' comments. Throws ConfigError on unknown keys,
// unparseable values or values breaking a model invariant.
RunConfig parse_run_config(const std::string& text);

} // namespace asb
