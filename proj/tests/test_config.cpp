#include "asb/config.hpp"

#include <doctest.h>

using namespace asb;

TEST_CASE("empty configuration is all defaults")
{
    const RunConfig cfg = parse_run_config("");
    CHECK(cfg.seed == 0);
    CHECK(cfg.noise_enabled);
    CHECK(cfg.suite.depth_accuracy_cm == doctest::Approx(0.3));
    CHECK(cfg.suite.depth_max_cm == doctest::Approx(450.0));
    CHECK(cfg.suite.compass_sigma_deg == doctest::Approx(1.5));
    CHECK(cfg.suite.gps_sigma_m == doctest::Approx(3.0));
    CHECK(cfg.suite.gps_cell_m == doctest::Approx(4.0));
    CHECK(cfg.power.motor_full_current_a == doctest::Approx(1.1));
    CHECK(cfg.power.hbridge_limit_a == doctest::Approx(2.0));
    CHECK(cfg.vehicle.max_speed_mps == doctest::Approx(1.0));
    CHECK(cfg.gains.heading_gain == doctest::Approx(0.8));
    CHECK_FALSE(cfg.start_pos.has_value());
    CHECK(cfg.start_heading_deg == 0.0);
}

TEST_CASE("keys override defaults")
{
    const RunConfig cfg = parse_run_config(
        "# run setup\n"
        "seed = 42\n"
        "noise = off\n"
        "max_speed_mps = 1.5\n"
        "steering_gain = 0.6\n"
        "gps_cell_m = 2.0\n"
        "start_lat = 33.971700\n"
        "start_lon = 71.441600\n"
        "start_heading_deg = 90\n");
    CHECK(cfg.seed == 42);
    CHECK_FALSE(cfg.noise_enabled);
    CHECK(cfg.vehicle.max_speed_mps == doctest::Approx(1.5));
    CHECK(cfg.gains.heading_gain == doctest::Approx(0.6));
    CHECK(cfg.suite.gps_cell_m == doctest::Approx(2.0));
    REQUIRE(cfg.start_pos.has_value());
    CHECK(cfg.start_pos->lat_deg == doctest::Approx(33.9717));
    CHECK(cfg.start_heading_deg == doctest::Approx(90.0));
}

TEST_CASE("unknown keys are rejected")
{
    CHECK_THROWS_WITH_AS(parse_run_config("velocity = 3\n"),
                         doctest::Contains("unknown key"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_run_config("seed 42\n"),
                         doctest::Contains("key = value"), ConfigError);
}

TEST_CASE("bad values are rejected")
{
    CHECK_THROWS_AS(parse_run_config("seed = banana\n"), ConfigError);
    CHECK_THROWS_AS(parse_run_config("noise = maybe\n"), ConfigError);
    CHECK_THROWS_AS(parse_run_config("gps_sigma_m = -1\n"), ConfigError);
    CHECK_THROWS_AS(parse_run_config("depth_max_cm = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_run_config("max_speed_mps = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_run_config("battery_capacity_ah = -2\n"), ConfigError);
    CHECK_THROWS_AS(parse_run_config("start_lat = 33.97\n"), ConfigError); // lon missing
    CHECK_THROWS_AS(parse_run_config("start_lat = 95\nstart_lon = 0\n"), ConfigError);
}

TEST_CASE("over-limit motor draw loads; the design check owns the complaint")
{
    const RunConfig cfg = parse_run_config("motor_full_current_a = 2.5\n");
    CHECK(cfg.power.motor_full_current_a == doctest::Approx(2.5));
}

TEST_CASE("hull parameters are configurable")
{
    const RunConfig cfg = parse_run_config(
        "pipe_count = 6\n"
        "pipe_length_cm = 40\n"
        "pipe_diameter_cm = 12\n");
    CHECK(cfg.hull.pipe_count == 6);
    CHECK(cfg.hull.pipe_length_cm == doctest::Approx(40.0));
    CHECK(cfg.hull.pipe_diameter_cm == doctest::Approx(12.0));

    // defaults are the stock build: four 12-inch pipes
    const RunConfig def = parse_run_config("");
    CHECK(def.hull.pipe_count == 4);
    CHECK(def.hull.pipe_length_cm == doctest::Approx(30.48));
    CHECK(def.hull.pipe_diameter_cm == doctest::Approx(10.16));

    CHECK_THROWS_AS(parse_run_config("pipe_count = 0\n"), ConfigError);
}
