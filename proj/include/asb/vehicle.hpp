#pragma once

#include "asb/geo.hpp"

#include <string>
#include <utility>
#include <vector>

namespace asb {

// Simulated pose plus the bookkeeping the mission loop needs.
struct BoatState {
    GeoPoint pos;
    HeadingDeg heading;
    double speed_mps = 0.0;
    double odometer_m = 0.0;
    double battery_ah = 2.0;
    double time_s = 0.0;
};

// Rudder deflection and throttle, clamped to their mechanical ranges.
struct ActuatorCommand {
    double rudder_deg = 0.0; // [-30, +30]
    double throttle = 0.0;   // [0, 1]
};

inline constexpr double kRudderLimitDeg = 30.0;

// 12 V bus, L298N H-bridge (2 A ceiling), Johnson DC motor (1.1 A at full
// throttle). Idle draw and battery capacity are configurable defaults.
struct PowerModel {
    double bus_voltage_v = 12.0;
    double motor_full_current_a = 1.1;
    double idle_current_a = 0.2;
    double hbridge_limit_a = 2.0;
    double battery_capacity_ah = 2.0;
};

// Four 12-inch PVC pipes, 4 inches in diameter.
struct HullSpec {
    int pipe_count = 4;
    double pipe_length_cm = 30.48;
    double pipe_diameter_cm = 10.16;
};

struct MassBudget {
    std::vector<std::pair<std::string, double>> components; // name, grams
};

// First-order kinematic model: heading rate proportional to rudder angle,
// speed proportional to throttle.
struct VehicleParams {
    double max_speed_mps = 1.0;
    double heading_rate_per_rudder_deg = 0.5; // deg/s of turn per deg of rudder
};

ActuatorCommand clamp_command(ActuatorCommand cmd);

// Advance one step of dt seconds (dt in (0, 1]). Heading integrates the
// rudder rate, position advances speed*dt along the new heading, odometer
// and clock accumulate.
BoatState step_kinematics(const BoatState& state, ActuatorCommand cmd,
                          double dt_s, const VehicleParams& params);

// I = idle + throttle * motor_full. Throws OverCurrentError past the
// H-bridge limit.
double current_draw_a(ActuatorCommand cmd, const PowerModel& pm);

// Subtract current_draw * dt from the battery, floored at zero. A state with
// battery_ah == 0 is depleted and aborts the mission.
BoatState drain_battery(const BoatState& state, ActuatorCommand cmd,
                        double dt_s, const PowerModel& pm);

inline bool battery_depleted(const BoatState& state) { return state.battery_ah <= 0.0; }

double mass_total_g(const MassBudget& budget);

// Submerged fraction of the hull at equilibrium in fresh water (1 g/cm3).
// Throws WouldSinkError when the mass exceeds the full displacement.
double buoyancy_fraction(const HullSpec& hull, double total_mass_g);

double hull_displacement_cm3(const HullSpec& hull);

// Component list file: one `name,grams` per line, '#' comments allowed.
MassBudget load_component_list(const std::string& text);

} // namespace asb
