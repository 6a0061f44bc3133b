#include "asb/nav.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace asb {

MissionValidation validate_mission(const Mission& m, double gps_cell_m)
{
    MissionValidation v;
    auto complain = [&v](const std::string& msg) { v.violations.push_back(msg); };

    if (m.waypoints.empty())
        complain("no waypoints");
    if (m.test_id <= 0)
        complain("test id must be positive");
    if (!(m.arrival_radius_m > 0.0))
        complain("arrival radius must be positive");
    if (!(m.heading_tolerance_deg > 0.0))
        complain("heading tolerance must be positive");
    if (m.samples_per_point <= 0)
        complain("samples per point must be positive");
    if (m.max_steps <= 0)
        complain("max steps must be positive");

    for (std::size_t i = 0; i < m.waypoints.size(); ++i) {
        const Waypoint& wp = m.waypoints[i];
        if (!valid_geopoint(wp.point)) {
            std::ostringstream msg;
            msg << "waypoint " << (i + 1) << ": coordinates out of range";
            complain(msg.str());
        }
    }
    for (std::size_t i = 0; i + 1 < m.waypoints.size(); ++i) {
        const Waypoint& a = m.waypoints[i];
        const Waypoint& b = m.waypoints[i + 1];
        if (!valid_geopoint(a.point) || !valid_geopoint(b.point))
            continue;
        const double leg = haversine_distance_m(a.point, b.point);
        if (leg < 0.5) {
            std::ostringstream msg;
            msg << "degenerate leg between waypoints " << (i + 1) << " and "
                << (i + 2) << " (" << leg << " m apart)";
            complain(msg.str());
        } else if (m.arrival_radius_m > 0.0 && leg < 2.0 * m.arrival_radius_m) {
            std::ostringstream msg;
            msg << "leg between waypoints " << (i + 1) << " and " << (i + 2)
                << " is shorter than twice the arrival radius; convergence not guaranteed";
            v.warnings.push_back(msg.str());
        }
    }
    if (m.arrival_radius_m > 0.0 && m.arrival_radius_m < gps_cell_m) {
        std::ostringstream msg;
        msg << "arrival radius " << m.arrival_radius_m
            << " m is below the GPS quantum " << gps_cell_m
            << " m and may never be satisfied";
        v.warnings.push_back(msg.str());
    }
    return v;
}

double rudder_command_deg(double heading_error_deg, const SteeringGains& gains)
{
    return std::clamp(gains.heading_gain * heading_error_deg,
                      -kRudderLimitDeg, kRudderLimitDeg);
}

bool arrival_check(const GpsFix& fix, const Waypoint& wp, double radius_m)
{
    if (!fix.valid)
        throw NoFixError("arrival_check: no GPS fix");
    return haversine_distance_m(fix.point, wp.point) <= radius_m;
}

namespace {

// Bearing from the fix to the waypoint; once inside the arrival radius the
// bearing is geometrically meaningless, so hold the current heading instead.
HeadingDeg target_bearing(const GpsFix& fix, const Waypoint& wp,
                          double radius_m, HeadingDeg compass)
{
    if (haversine_distance_m(fix.point, wp.point) <= radius_m)
        return compass;
    return initial_bearing(fix.point, wp.point);
}

} // namespace

std::pair<NavPhase, NavOutput> nav_step(NavPhase phase, const GpsFix& fix,
                                        HeadingDeg compass, const Mission& m,
                                        const SteeringGains& gains)
{
    if (phase.kind != NavPhaseKind::Done) {
        if (m.waypoints.empty())
            throw DomainError("nav_step: mission has no waypoints");
        if (phase.waypoint_ix >= m.waypoints.size())
            throw DomainError("nav_step: phase waypoint out of range");
        if (!fix.valid)
            throw NoFixError("nav_step: no GPS fix");
    }

    NavOutput out;
    out.waypoint_ix = phase.waypoint_ix;

    switch (phase.kind) {
    case NavPhaseKind::Align: {
        const Waypoint& wp = m.waypoints[phase.waypoint_ix];
        const HeadingDeg bearing = target_bearing(fix, wp, m.arrival_radius_m, compass);
        const double err = heading_error_deg(compass, bearing);
        out.command.rudder_deg = rudder_command_deg(err, gains);
        if (std::abs(err) <= m.heading_tolerance_deg) {
            phase.kind = NavPhaseKind::Transit;
            out.command.throttle = 1.0;
        }
        return {phase, out};
    }
    case NavPhaseKind::Transit: {
        const Waypoint& wp = m.waypoints[phase.waypoint_ix];
        if (arrival_check(fix, wp, m.arrival_radius_m)) {
            phase.kind = NavPhaseKind::Measure;
            return {phase, out}; // stop for the sounding
        }
        const double err =
            heading_error_deg(compass, initial_bearing(fix.point, wp.point));
        out.command.throttle = 1.0;
        out.command.rudder_deg = rudder_command_deg(err, gains);
        return {phase, out};
    }
    case NavPhaseKind::Measure: {
        out.action = NavAction::TakeMeasurement;
        if (phase.waypoint_ix + 1 < m.waypoints.size()) {
            phase.kind = NavPhaseKind::Align;
            ++phase.waypoint_ix;
        } else {
            phase.kind = NavPhaseKind::Done;
        }
        return {phase, out};
    }
    case NavPhaseKind::Done:
        out.action = NavAction::MissionComplete;
        return {phase, out};
    }
    throw DomainError("nav_step: unreachable phase");
}

namespace {

double parse_directive_value(std::string_view value, int line_no, const char* name)
{
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw FileFormatError("mission line " + std::to_string(line_no) +
                              ": bad value for @" + std::string(name));
    return out;
}

} // namespace

Mission load_mission(const std::string& text)
{
    Mission m;
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
        std::string_view body = std::string_view(line).substr(first);

        if (body.front() == '@') {
            const auto space = body.find(' ');
            if (space == std::string_view::npos)
                throw FileFormatError("mission line " + std::to_string(line_no) +
                                      ": directive missing value");
            const std::string_view key = body.substr(1, space - 1);
            const std::string_view value = body.substr(space + 1);
            if (key == "test")
                m.test_id = static_cast<int>(parse_directive_value(value, line_no, "test"));
            else if (key == "radius")
                m.arrival_radius_m = parse_directive_value(value, line_no, "radius");
            else if (key == "tolerance")
                m.heading_tolerance_deg = parse_directive_value(value, line_no, "tolerance");
            else
                throw FileFormatError("mission line " + std::to_string(line_no) +
                                      ": unknown directive @" + std::string(key));
            continue;
        }

        const auto comma = body.find(',');
        if (comma == std::string_view::npos)
            throw FileFormatError("mission line " + std::to_string(line_no) +
                                  ": expected 'lat,lon'");
        GeoPoint p;
        const std::string_view lat_text = body.substr(0, comma);
        const std::string_view lon_text = body.substr(comma + 1);
        auto [p1, e1] = std::from_chars(lat_text.data(), lat_text.data() + lat_text.size(), p.lat_deg);
        auto [p2, e2] = std::from_chars(lon_text.data(), lon_text.data() + lon_text.size(), p.lon_deg);
        if (e1 != std::errc{} || p1 != lat_text.data() + lat_text.size() ||
            e2 != std::errc{} || p2 != lon_text.data() + lon_text.size())
            throw FileFormatError("mission line " + std::to_string(line_no) +
                                  ": non-numeric coordinate");
        m.waypoints.push_back(Waypoint{static_cast<int>(m.waypoints.size()) + 1, p});
    }
    return m;
}

} // namespace asb
