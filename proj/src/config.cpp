#include "asb/config.hpp"

#include "asb/errors.hpp"

#include <charconv>
#include <functional>
#include <map>
#include <sstream>

namespace asb {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

double parse_value(std::string_view text, const std::string& key)
{
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ConfigError("config: bad numeric value for '" + key + "'");
    return value;
}

bool parse_flag(std::string_view text, const std::string& key)
{
    if (text == "on" || text == "true" || text == "1")
        return true;
    if (text == "off" || text == "false" || text == "0")
        return false;
    throw ConfigError("config: bad flag value for '" + key + "' (want on/off)");
}

} // namespace

RunConfig parse_run_config(const std::string& text)
{
    RunConfig cfg;
    std::optional<double> start_lat, start_lon;

    const std::map<std::string, std::function<void(std::string_view, const std::string&)>>
        setters = {
            {"seed", [&](std::string_view v, const std::string& k) {
                 std::uint64_t seed = 0;
                 auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), seed);
                 if (ec != std::errc{} || ptr != v.data() + v.size())
                     throw ConfigError("config: bad numeric value for '" + k + "'");
                 cfg.seed = seed;
             }},
            {"noise", [&](std::string_view v, const std::string& k) { cfg.noise_enabled = parse_flag(v, k); }},
            {"max_speed_mps", [&](std::string_view v, const std::string& k) { cfg.vehicle.max_speed_mps = parse_value(v, k); }},
            {"heading_rate_per_rudder_deg", [&](std::string_view v, const std::string& k) { cfg.vehicle.heading_rate_per_rudder_deg = parse_value(v, k); }},
            {"steering_gain", [&](std::string_view v, const std::string& k) { cfg.gains.heading_gain = parse_value(v, k); }},
            {"depth_accuracy_cm", [&](std::string_view v, const std::string& k) { cfg.suite.depth_accuracy_cm = parse_value(v, k); }},
            {"depth_min_cm", [&](std::string_view v, const std::string& k) { cfg.suite.depth_min_cm = parse_value(v, k); }},
            {"depth_max_cm", [&](std::string_view v, const std::string& k) { cfg.suite.depth_max_cm = parse_value(v, k); }},
            {"compass_sigma_deg", [&](std::string_view v, const std::string& k) { cfg.suite.compass_sigma_deg = parse_value(v, k); }},
            {"gps_sigma_m", [&](std::string_view v, const std::string& k) { cfg.suite.gps_sigma_m = parse_value(v, k); }},
            {"gps_cell_m", [&](std::string_view v, const std::string& k) { cfg.suite.gps_cell_m = parse_value(v, k); }},
            {"pipe_count", [&](std::string_view v, const std::string& k) { cfg.hull.pipe_count = static_cast<int>(parse_value(v, k)); }},
            {"pipe_length_cm", [&](std::string_view v, const std::string& k) { cfg.hull.pipe_length_cm = parse_value(v, k); }},
            {"pipe_diameter_cm", [&](std::string_view v, const std::string& k) { cfg.hull.pipe_diameter_cm = parse_value(v, k); }},
            {"bus_voltage_v", [&](std::string_view v, const std::string& k) { cfg.power.bus_voltage_v = parse_value(v, k); }},
            {"motor_full_current_a", [&](std::string_view v, const std::string& k) { cfg.power.motor_full_current_a = parse_value(v, k); }},
            {"idle_current_a", [&](std::string_view v, const std::string& k) { cfg.power.idle_current_a = parse_value(v, k); }},
            {"hbridge_limit_a", [&](std::string_view v, const std::string& k) { cfg.power.hbridge_limit_a = parse_value(v, k); }},
            {"battery_capacity_ah", [&](std::string_view v, const std::string& k) { cfg.power.battery_capacity_ah = parse_value(v, k); }},
            {"start_lat", [&](std::string_view v, const std::string& k) { start_lat = parse_value(v, k); }},
            {"start_lon", [&](std::string_view v, const std::string& k) { start_lon = parse_value(v, k); }},
            {"start_heading_deg", [&](std::string_view v, const std::string& k) { cfg.start_heading_deg = parse_value(v, k); }},
        };

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = trim(line);
        if (body.empty() || body.front() == '#')
            continue;
        const auto eq = body.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected 'key = value'");
        const std::string key{trim(body.substr(0, eq))};
        const std::string_view value = trim(body.substr(eq + 1));
        const auto it = setters.find(key);
        if (it == setters.end())
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": unknown key '" + key + "'");
        it->second(value, key);
    }

    if (start_lat.has_value() != start_lon.has_value())
        throw ConfigError("config: start_lat and start_lon must be given together");
    if (start_lat) {
        cfg.start_pos = GeoPoint{*start_lat, *start_lon};
        if (!valid_geopoint(*cfg.start_pos))
            throw ConfigError("config: start position out of range");
    }

    // Model invariants the downstream code relies on.
    if (!(cfg.suite.depth_accuracy_cm > 0.0) || !(cfg.suite.compass_sigma_deg > 0.0) ||
        !(cfg.suite.gps_sigma_m > 0.0) || !(cfg.suite.gps_cell_m > 0.0))
        throw ConfigError("config: sensor parameters must be strictly positive");
    if (cfg.suite.depth_min_cm < 0.0 || !(cfg.suite.depth_max_cm > cfg.suite.depth_min_cm))
        throw ConfigError("config: depth range must satisfy 0 <= min < max");
    // Over-limit motor draw is loadable on purpose: check-design and
    // current_draw_a exist to flag it.
    if (!(cfg.power.bus_voltage_v > 0.0) || !(cfg.power.motor_full_current_a > 0.0) ||
        !(cfg.power.idle_current_a > 0.0) || !(cfg.power.hbridge_limit_a > 0.0) ||
        !(cfg.power.battery_capacity_ah > 0.0))
        throw ConfigError("config: power parameters must be strictly positive");
    if (!(cfg.vehicle.max_speed_mps > 0.0) || !(cfg.vehicle.heading_rate_per_rudder_deg > 0.0))
        throw ConfigError("config: vehicle parameters must be strictly positive");
    if (cfg.hull.pipe_count <= 0 || !(cfg.hull.pipe_length_cm > 0.0) ||
        !(cfg.hull.pipe_diameter_cm > 0.0))
        throw ConfigError("config: hull parameters must be strictly positive");
    return cfg;
}

} // namespace asb
