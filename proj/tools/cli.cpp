#include "cli.hpp"

#include "asb/analytics.hpp"
#include "asb/bathymetry.hpp"
#include "asb/config.hpp"
#include "asb/errors.hpp"
#include "asb/logfmt.hpp"
#include "asb/nav.hpp"
#include "asb/nmea.hpp"
#include "asb/plot.hpp"
#include "asb/sim.hpp"
#include "asb/vehicle.hpp"

#include <CLI11.hpp>

#include <array>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace asb::cli {

namespace {

std::string fmt_fixed(double v, int precision)
{
    std::array<char, 64> buf;
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                   std::chars_format::fixed, precision);
    return std::string(buf.data(), ptr);
}

// Distinguishes unreadable files (exit 2) from unparseable content (exit 1).
struct IoFailure {
    std::string path;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoFailure{path};
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw IoFailure{path};
    return buf.str();
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoFailure{path};
    out << content;
    out.flush();
    if (!out)
        throw IoFailure{path};
}

struct SimArgs {
    std::string mission_path;
    std::string bathy_path;
    std::string out_path;
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string noise; // "", "on" or "off"
};

int cmd_sim(const SimArgs& args, std::ostream& out, std::ostream& err)
{
    const Mission mission = load_mission(read_file(args.mission_path));
    const Bathymetry bathy = load_bathymetry(read_file(args.bathy_path));

    RunConfig run_cfg;
    if (!args.config_path.empty())
        run_cfg = parse_run_config(read_file(args.config_path));
    if (args.seed)
        run_cfg.seed = *args.seed;
    if (!args.noise.empty())
        run_cfg.noise_enabled = (args.noise == "on");

    const MissionValidation validation = validate_mission(mission, run_cfg.suite.gps_cell_m);
    for (const std::string& w : validation.warnings)
        err << "warning: " << w << '\n';
    if (!validation.ok()) {
        for (const std::string& v : validation.violations)
            err << "error: " << v << '\n';
        return kExitValidation;
    }

    SimConfig cfg;
    cfg.mission = mission;
    cfg.bathymetry = bathy;
    cfg.suite = run_cfg.suite;
    cfg.power = run_cfg.power;
    cfg.vehicle = run_cfg.vehicle;
    cfg.gains = run_cfg.gains;
    cfg.master_seed = run_cfg.seed;
    cfg.noise_enabled = run_cfg.noise_enabled;
    cfg.start_pos = run_cfg.start_pos.value_or(mission.waypoints.front().point);
    cfg.start_heading = wrap_heading(run_cfg.start_heading_deg);

    std::ofstream log(args.out_path, std::ios::binary);
    if (!log)
        throw IoFailure{args.out_path};
    log << kLogHeader << '\n';
    log.flush();

    SimRun run;
    try {
        run = run_mission(cfg, [&log](const LogRecord& r) {
            log << format_record(r) << '\n';
            log.flush(); // a cut power line still leaves whole records
        });
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    if (!log)
        throw IoFailure{args.out_path};

    out << "termination=" << termination_name(run.termination)
        << " records=" << run.records.size() << '\n';
    if (run.termination != Termination::Completed) {
        err << "error: " << run.diagnostic << '\n';
        return kExitRuntime;
    }
    return kExitOk;
}

struct AnalyzeArgs {
    std::string log_path;
    std::optional<double> length_m;
    std::optional<double> width_m;
};

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err)
{
    if (args.length_m.has_value() != args.width_m.has_value()) {
        err << "error: --length and --width must be given together\n";
        return kExitValidation;
    }
    if (args.length_m && (!(*args.length_m > 0.0) || !(*args.width_m > 0.0))) {
        err << "error: --length and --width must be positive\n";
        return kExitValidation;
    }

    const std::vector<LogRecord> records = parse_log(read_file(args.log_path));
    if (records.empty()) {
        err << "error: log contains no records\n";
        return kExitValidation;
    }

    out << "test,n_points,avg_depth_cm,min_depth_cm,max_depth_cm,path_length_m";
    if (args.length_m)
        out << ",capacity_m3";
    out << '\n';
    for (const auto& test : split_by_test(records)) {
        const SurveySummary s = summarize(test);
        out << s.test_id << ',' << s.n_points << ',' << fmt_fixed(s.avg_depth_cm, 2)
            << ',' << s.min_depth_cm << ',' << s.max_depth_cm << ','
            << fmt_fixed(s.path_length_m, 2);
        if (args.length_m) {
            // depths are logged in cm; the capacity model wants meters
            const double capacity = capacity_estimate_m3(*args.length_m, *args.width_m,
                                                         s.avg_depth_cm / 100.0);
            out << ',' << fmt_fixed(capacity, 2);
        }
        out << '\n';
    }
    return kExitOk;
}

struct PlotArgs {
    std::string log_path;
    std::string out_path;
    std::string format;
};

int cmd_plot(const PlotArgs& args, std::ostream& out, std::ostream& err)
{
    const std::vector<LogRecord> records = parse_log(read_file(args.log_path));
    if (records.empty()) {
        err << "error: nothing to plot\n";
        return kExitValidation;
    }
    const std::string content =
        args.format == "svg" ? profile_svg(records) : profile_csv(records);
    write_file(args.out_path, content);
    out << "wrote " << args.out_path << " (" << args.format << ", "
        << split_by_test(records).size() << " test series)\n";
    return kExitOk;
}

struct CheckDesignArgs {
    std::string components_path;
    std::string config_path;
};

int cmd_check_design(const CheckDesignArgs& args, std::ostream& out, std::ostream& err)
{
    const MassBudget budget = load_component_list(read_file(args.components_path));
    if (budget.components.empty()) {
        err << "error: component list is empty\n";
        return kExitValidation;
    }
    RunConfig run_cfg;
    if (!args.config_path.empty())
        run_cfg = parse_run_config(read_file(args.config_path));

    const HullSpec hull = run_cfg.hull; // default: four 12x4 inch PVC pipes
    const double mass_g = mass_total_g(budget);
    out << "total_mass_g=" << fmt_fixed(mass_g, 1) << '\n';

    int exit_code = kExitOk;
    try {
        out << "buoyancy_fraction=" << fmt_fixed(buoyancy_fraction(hull, mass_g), 4) << '\n';
    } catch (const WouldSinkError& e) {
        out << "buoyancy_fraction=sinks\n";
        err << "error: " << e.what() << '\n';
        exit_code = kExitRuntime;
    }
    try {
        const double draw = current_draw_a(ActuatorCommand{0.0, 1.0}, run_cfg.power);
        out << "full_throttle_current_a=" << fmt_fixed(draw, 2) << '\n';
    } catch (const OverCurrentError& e) {
        out << "full_throttle_current_a=over_limit\n";
        err << "error: " << e.what() << '\n';
        exit_code = kExitRuntime;
    }
    out << "hbridge_limit_a=" << fmt_fixed(run_cfg.power.hbridge_limit_a, 2) << '\n';
    return exit_code;
}

int cmd_nmea(const std::string& path, std::ostream& out, std::ostream& err)
{
    const std::string text = read_file(path);
    int fixes = 0, skipped = 0, invalid = 0;

    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            const NmeaResult result = parse_nmea_sentence(line);
            if (!result.positional())
                ++skipped;
            else if (!result.fix->valid)
                ++invalid;
            else {
                out << fmt_fixed(result.fix->point.lat_deg, 6) << ','
                    << fmt_fixed(result.fix->point.lon_deg, 6) << '\n';
                ++fixes;
            }
        } catch (const Error&) {
            ++invalid;
        }
    }
    err << "fixes=" << fixes << " skipped=" << skipped << " invalid=" << invalid << '\n';
    if (fixes == 0) {
        err << "error: no valid fixes\n";
        return kExitValidation;
    }
    return kExitOk;
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err)
{
    const Mission mission = load_mission(read_file(path));
    const MissionValidation validation = validate_mission(mission);
    for (const std::string& w : validation.warnings)
        err << "warning: " << w << '\n';
    for (const std::string& v : validation.violations)
        out << "violation: " << v << '\n';
    if (!validation.ok())
        return kExitValidation;
    out << "ok: " << mission.waypoints.size() << " waypoints\n";
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"survey boat toolkit: simulate, ingest and analyze depth surveys"};
    app.require_subcommand(1);

    SimArgs sim_args;
    std::uint64_t seed_value = 0;
    auto* sim = app.add_subcommand("sim", "run a mission simulation and write an ASB-LOG file");
    sim->add_option("--mission", sim_args.mission_path, "mission waypoint file")->required();
    sim->add_option("--bathy", sim_args.bathy_path, "bathymetry grid file")->required();
    sim->add_option("--out", sim_args.out_path, "output log path")->required();
    auto* seed_opt = sim->add_option("--seed", seed_value, "master random seed");
    sim->add_option("--noise", sim_args.noise, "sensor noise on|off")
        ->check(CLI::IsMember({"on", "off"}));
    sim->add_option("--config", sim_args.config_path, "run configuration file");

    AnalyzeArgs analyze_args;
    double length_value = 0.0, width_value = 0.0;
    auto* analyze = app.add_subcommand("analyze", "per-test survey summaries from a log");
    analyze->add_option("log", analyze_args.log_path, "ASB-LOG file")->required();
    auto* length_opt = analyze->add_option("--length", length_value, "reservoir length in m");
    auto* width_opt = analyze->add_option("--width", width_value, "reservoir width in m");

    PlotArgs plot_args;
    auto* plot = app.add_subcommand("plot", "emit the depth-along-setpoints profile");
    plot->add_option("log", plot_args.log_path, "ASB-LOG file")->required();
    plot->add_option("--out", plot_args.out_path, "output path")->required();
    plot->add_option("--format", plot_args.format, "csv or svg")
        ->required()
        ->check(CLI::IsMember({"csv", "svg"}));

    CheckDesignArgs check_args;
    auto* check = app.add_subcommand("check-design", "mass, buoyancy and current budget checks");
    check->add_option("--components", check_args.components_path, "component list file")->required();
    check->add_option("--config", check_args.config_path, "run configuration file");

    std::string nmea_path;
    auto* nmea = app.add_subcommand("nmea", "extract lat,lon fixes from an NMEA capture");
    nmea->add_option("file", nmea_path, "NMEA text file")->required();

    std::string validate_path;
    auto* validate = app.add_subcommand("validate", "check a mission file");
    validate->add_option("mission", validate_path, "mission waypoint file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }

    if (seed_opt->count() > 0)
        sim_args.seed = seed_value;
    if (length_opt->count() > 0)
        analyze_args.length_m = length_value;
    if (width_opt->count() > 0)
        analyze_args.width_m = width_value;

    try {
        if (sim->parsed())
            return cmd_sim(sim_args, out, err);
        if (analyze->parsed())
            return cmd_analyze(analyze_args, out, err);
        if (plot->parsed())
            return cmd_plot(plot_args, out, err);
        if (check->parsed())
            return cmd_check_design(check_args, out, err);
        if (nmea->parsed())
            return cmd_nmea(nmea_path, out, err);
        if (validate->parsed())
            return cmd_validate(validate_path, out, err);
    } catch (const IoFailure& io) {
        err << "error: cannot open '" << io.path << "'\n";
        return kExitIo;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const FileFormatError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitValidation;
}

} // namespace asb::cli
