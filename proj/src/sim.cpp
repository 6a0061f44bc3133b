#include "asb/sim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

namespace asb {

const char* termination_name(Termination t)
{
    switch (t) {
    case Termination::Completed: return "Completed";
    case Termination::NavTimeout: return "NavTimeout";
    case Termination::BatteryDepleted: return "BatteryDepleted";
    case Termination::SensorFault: return "SensorFault";
    }
    return "Unknown";
}

namespace {

double median(std::vector<double> values)
{
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1)
        return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

int round_half_up_cm(double depth_cm)
{
    return static_cast<int>(std::floor(depth_cm + 0.5));
}

const char* phase_name(NavPhaseKind k)
{
    switch (k) {
    case NavPhaseKind::Align: return "Align";
    case NavPhaseKind::Transit: return "Transit";
    case NavPhaseKind::Measure: return "Measure";
    case NavPhaseKind::Done: return "Done";
    }
    return "?";
}

} // namespace

SimRun run_mission(const SimConfig& cfg, const RecordSink& sink)
{
    const MissionValidation validation =
        validate_mission(cfg.mission, cfg.suite.gps_cell_m);
    if (!validation.ok())
        throw DomainError("run_mission: invalid mission: " + validation.violations.front());
    if (!inside_extent(cfg.bathymetry, cfg.start_pos))
        throw DomainError("run_mission: start position outside bathymetry extent");

    RandomStream depth_rng = RandomStream::derive(cfg.master_seed, "depth");
    RandomStream compass_rng = RandomStream::derive(cfg.master_seed, "compass");
    RandomStream gps_rng = RandomStream::derive(cfg.master_seed, "gps");

    SimRun run;
    BoatState state;
    state.pos = cfg.start_pos;
    state.heading = wrap_heading(cfg.start_heading.deg);
    state.battery_ah = cfg.power.battery_capacity_ah;
    run.trajectory.push_back(state);

    NavPhase phase;
    for (long step = 0; step < cfg.mission.max_steps; ++step) {
        const GpsFix fix = sample_gps(state.pos, cfg.start_pos, cfg.suite,
                                      gps_rng, cfg.noise_enabled);
        const HeadingDeg compass = sample_compass(state.heading, cfg.suite,
                                                  compass_rng, cfg.noise_enabled);
        NavOutput out;
        std::tie(phase, out) = nav_step(phase, fix, compass, cfg.mission, cfg.gains);

        if (out.action == NavAction::TakeMeasurement) {
            const Waypoint& wp = cfg.mission.waypoints[out.waypoint_ix];
            double true_depth = 0.0;
            std::vector<double> samples;
            try {
                // The sounder reads under the hull; the logged coordinates
                // come from the receiver. The two disagree on purpose.
                true_depth = depth_at_cm(cfg.bathymetry, state.pos);
                samples.reserve(cfg.mission.samples_per_point);
                for (int i = 0; i < cfg.mission.samples_per_point; ++i)
                    samples.push_back(sample_depth_cm(true_depth, cfg.suite,
                                                      depth_rng, cfg.noise_enabled));
            } catch (const Error& e) {
                run.termination = Termination::SensorFault;
                std::ostringstream msg;
                msg << "measurement failed at setpoint " << wp.index << ": " << e.what();
                run.diagnostic = msg.str();
                return run;
            }

            LogRecord record;
            record.test_id = cfg.mission.test_id;
            record.setpoint = wp.index;
            record.lat_deg = fix.point.lat_deg;
            record.lon_deg = fix.point.lon_deg;
            record.depth_cm = round_half_up_cm(median(std::move(samples)));
            record.dist_m = std::round(state.odometer_m * 100.0) / 100.0;
            run.records.push_back(record);
            run.measurement_positions.push_back(state.pos);
            if (sink)
                sink(record);
        } else if (out.action == NavAction::MissionComplete) {
            run.termination = Termination::Completed;
            return run;
        }

        state = step_kinematics(state, out.command, kSimDtS, cfg.vehicle);
        state = drain_battery(state, out.command, kSimDtS, cfg.power);
        run.trajectory.push_back(state);

        if (battery_depleted(state)) {
            run.termination = Termination::BatteryDepleted;
            return run;
        }
    }

    run.termination = Termination::NavTimeout;
    std::ostringstream msg;
    msg << "no progress after " << cfg.mission.max_steps << " steps, stuck in "
        << phase_name(phase.kind) << " at waypoint "
        << (phase.kind == NavPhaseKind::Done
                ? cfg.mission.waypoints.back().index
                : cfg.mission.waypoints[phase.waypoint_ix].index);
    run.diagnostic = msg.str();
    return run;
}

} // namespace asb
