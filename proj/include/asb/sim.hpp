#pragma once

#include "asb/bathymetry.hpp"
#include "asb/logfmt.hpp"
#include "asb/nav.hpp"
#include "asb/sensors.hpp"
#include "asb/vehicle.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace asb {

// Fixed control period. Determinism over fidelity: no adaptive stepping.
inline constexpr double kSimDtS = 0.1;

enum class Termination { Completed, NavTimeout, BatteryDepleted, SensorFault };

const char* termination_name(Termination t);

struct SimConfig {
    Mission mission;
    Bathymetry bathymetry;
    SensorSuite suite;
    PowerModel power;
    VehicleParams vehicle;
    SteeringGains gains;
    std::uint64_t master_seed = 0;
    bool noise_enabled = true;
    GeoPoint start_pos;
    HeadingDeg start_heading;
};

struct SimRun {
    std::vector<LogRecord> records;
    std::vector<BoatState> trajectory; // state after every step, time-stamped
    std::vector<GeoPoint> measurement_positions; // true pose at each sounding
    Termination termination = Termination::Completed;
    std::string diagnostic; // set for NavTimeout / SensorFault
};

// Called once per record, immediately when it is taken; a file-backed sink
// can flush per record so an aborted run never leaves a torn log.
using RecordSink = std::function<void(const LogRecord&)>;

// The sense -> decide -> act loop: read a (quantized, optionally noisy) GPS
// fix and compass heading, run the controller, integrate the kinematics and
// battery. On TakeMeasurement the sounder samples the true position
// samples_per_point times and the median is logged against the GPS fix
// coordinates and the dead-reckoned odometer.
//
// Throws DomainError on an invalid mission or a start outside the grid;
// runtime trouble (timeout, battery, sensor range) lands in termination.
SimRun run_mission(const SimConfig& cfg, const RecordSink& sink = {});

} // namespace asb
