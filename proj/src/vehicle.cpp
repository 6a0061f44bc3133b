#include "asb/vehicle.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace asb {

ActuatorCommand clamp_command(ActuatorCommand cmd)
{
    cmd.rudder_deg = std::clamp(cmd.rudder_deg, -kRudderLimitDeg, kRudderLimitDeg);
    cmd.throttle = std::clamp(cmd.throttle, 0.0, 1.0);
    return cmd;
}

BoatState step_kinematics(const BoatState& state, ActuatorCommand cmd,
                          double dt_s, const VehicleParams& params)
{
    if (!(dt_s > 0.0) || dt_s > 1.0)
        throw DomainError("step_kinematics: dt must be in (0, 1]");
    cmd = clamp_command(cmd);

    BoatState next = state;
    next.heading = wrap_heading(state.heading.deg +
                                params.heading_rate_per_rudder_deg * cmd.rudder_deg * dt_s);
    next.speed_mps = cmd.throttle * params.max_speed_mps;

    const double dist = next.speed_mps * dt_s;
    if (dist > 0.0) {
        const double rad = next.heading.deg * std::numbers::pi / 180.0;
        next.pos = from_local_enu(state.pos,
                                  EnuOffset{dist * std::sin(rad), dist * std::cos(rad)});
        next.odometer_m = state.odometer_m + dist;
    }
    next.time_s = state.time_s + dt_s;
    return next;
}

double current_draw_a(ActuatorCommand cmd, const PowerModel& pm)
{
    cmd = clamp_command(cmd);
    const double draw = pm.idle_current_a + cmd.throttle * pm.motor_full_current_a;
    if (draw > pm.hbridge_limit_a) {
        std::ostringstream msg;
        msg << "current draw " << draw << " A exceeds H-bridge limit "
            << pm.hbridge_limit_a << " A";
        throw OverCurrentError(msg.str());
    }
    return draw;
}

BoatState drain_battery(const BoatState& state, ActuatorCommand cmd,
                        double dt_s, const PowerModel& pm)
{
    if (!(dt_s > 0.0))
        throw DomainError("drain_battery: dt must be positive");
    const double draw = current_draw_a(cmd, pm); // OverCurrent raised before mutation
    BoatState next = state;
    next.battery_ah = std::max(0.0, state.battery_ah - draw * dt_s / 3600.0);
    return next;
}

double mass_total_g(const MassBudget& budget)
{
    double total = 0.0;
    for (const auto& [name, grams] : budget.components)
        total += grams;
    return total;
}

double hull_displacement_cm3(const HullSpec& hull)
{
    const double radius = hull.pipe_diameter_cm / 2.0;
    return hull.pipe_count * std::numbers::pi * radius * radius * hull.pipe_length_cm;
}

double buoyancy_fraction(const HullSpec& hull, double total_mass_g)
{
    if (!(total_mass_g > 0.0))
        throw DomainError("buoyancy_fraction: mass must be positive");
    // Fresh water: 1 g displaced per cm3 submerged.
    const double fraction = total_mass_g / hull_displacement_cm3(hull);
    if (fraction >= 1.0) {
        std::ostringstream msg;
        msg << "mass " << total_mass_g << " g exceeds displacement "
            << hull_displacement_cm3(hull) << " g";
        throw WouldSinkError(msg.str());
    }
    return fraction;
}

MassBudget load_component_list(const std::string& text)
{
    MassBudget budget;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#')
            continue;

        const auto comma = line.rfind(',');
        if (comma == std::string::npos)
            throw FileFormatError("components line " + std::to_string(line_no) +
                                  ": expected 'name,grams'");
        const std::string name = line.substr(first, comma - first);
        const std::string_view grams_text =
            std::string_view(line).substr(comma + 1);
        double grams = 0.0;
        auto [ptr, ec] = std::from_chars(grams_text.data(),
                                         grams_text.data() + grams_text.size(), grams);
        if (ec != std::errc{} || ptr != grams_text.data() + grams_text.size())
            throw FileFormatError("components line " + std::to_string(line_no) +
                                  ": non-numeric mass");
        if (!(grams > 0.0))
            throw FileFormatError("components line " + std::to_string(line_no) +
                                  ": mass must be positive");
        budget.components.emplace_back(name, grams);
    }
    return budget;
}

} // namespace asb
