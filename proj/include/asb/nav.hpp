#pragma once

#include "asb/sensors.hpp"
#include "asb/vehicle.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace asb {

struct Waypoint {
    int index = 1; // 1-based setpoint ordinal, as logged
    GeoPoint point;
};

// Ordered survey setpoints plus the controller parameters that govern how
// they are approached. The 4 m arrival radius matches the GPS quantum: a
// tighter radius can never be satisfied reliably under that quantization.
struct Mission {
    int test_id = 1;
    std::vector<Waypoint> waypoints;
    double arrival_radius_m = 4.0;
    double heading_tolerance_deg = 5.0;
    int samples_per_point = 5;
    long max_steps = 200'000;
};

enum class NavPhaseKind { Align, Transit, Measure, Done };

struct NavPhase {
    NavPhaseKind kind = NavPhaseKind::Align;
    std::size_t waypoint_ix = 0; // active waypoint, meaningless once Done
};

enum class NavAction { None, TakeMeasurement, MissionComplete };

struct NavOutput {
    ActuatorCommand command;
    NavAction action = NavAction::None;
    std::size_t waypoint_ix = 0; // waypoint a TakeMeasurement refers to
};

struct SteeringGains {
    double heading_gain = 0.8; // deg of rudder per deg of heading error
};

struct MissionValidation {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;

    bool ok() const { return violations.empty(); }
};

// Flags out-of-range coordinates, degenerate (< 0.5 m) legs, an empty
// waypoint list and non-positive parameters. Returns findings instead of
// throwing so a frontend can list them all.
MissionValidation validate_mission(const Mission& m, double gps_cell_m = 4.0);

// Proportional steering law, clamped to the rudder range.
double rudder_command_deg(double heading_error_deg, const SteeringGains& gains);

// True when the fix lies within radius_m of the waypoint.
// Throws NoFixError on an invalid fix.
bool arrival_check(const GpsFix& fix, const Waypoint& wp, double radius_m);

// One controller step: consumes the latest fix and compass heading, returns
// the next phase and the actuator command plus any measurement/completion
// action. Pure function of its arguments, which is what makes replay work.
//
// Align   throttle 0, turn toward the bearing of the active waypoint;
//         hands over to Transit once the heading error is inside tolerance.
// Transit throttle 1, rudder keeps tracking the bearing recomputed from
//         each fresh fix; hands over to Measure when the fix arrives.
// Measure single step: emits TakeMeasurement, advances to the next
//         waypoint's Align or to Done after the last one.
// Done    zero command, emits MissionComplete; the loop stops on it.
std::pair<NavPhase, NavOutput> nav_step(NavPhase phase, const GpsFix& fix,
                                        HeadingDeg compass, const Mission& m,
                                        const SteeringGains& gains = {});

// Mission file: '#' comments, optional '@test', '@radius' and '@tolerance'
// directives, then one 'lat,lon' pair per line in decimal degrees.
Mission load_mission(const std::string& text);

} // namespace asb
