#include "asb/analytics.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace asb;

TEST_CASE("summaries of the recorded field tests")
{
    const std::vector<LogRecord> all = parse_log(oracle::read_fixture("field_tests.asblog"));
    const auto tests = split_by_test(all);
    REQUIRE(tests.size() == 3);

    const SurveySummary t1 = summarize(tests[0]);
    CHECK(t1.test_id == 1);
    CHECK(t1.n_points == 3);
    // (17 + 17 + 18) / 3 by hand
    CHECK(t1.avg_depth_cm == doctest::Approx(17.3333).epsilon(1e-4));
    CHECK(t1.min_depth_cm == 17);
    CHECK(t1.max_depth_cm == 18);
    CHECK(t1.path_length_m == doctest::Approx(13.64));

    const SurveySummary t3 = summarize(tests[2]);
    CHECK(t3.n_points == 6);
    // (346+345+359+374+382+380) / 6 by hand
    CHECK(t3.avg_depth_cm == doctest::Approx(364.3333).epsilon(1e-4));
    CHECK(t3.path_length_m == doctest::Approx(36.94));
    CHECK(t3.min_depth_cm == 345);
    CHECK(t3.max_depth_cm == 382);
}

TEST_CASE("summarize edge cases")
{
    CHECK_THROWS_AS(summarize({}), DomainError);
    CHECK_THROWS_AS(summarize({{1, 1, 0, 0, 5, 1.0}, {2, 1, 0, 0, 5, 2.0}}), DomainError);

    const SurveySummary single = summarize({{4, 1, 0, 0, 42, 3.5}});
    CHECK(single.avg_depth_cm == 42.0);
    CHECK(single.min_depth_cm == 42);
    CHECK(single.max_depth_cm == 42);
    CHECK(single.path_length_m == doctest::Approx(3.5));
}

TEST_CASE("mean stays inside [min, max] and ignores record order")
{
    std::mt19937_64 gen(31);
    std::uniform_int_distribution<int> depth(0, 450), n(1, 30);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<LogRecord> records;
        const int count = n(gen);
        for (int i = 1; i <= count; ++i)
            records.push_back({1, i, 0.0, 0.0, depth(gen), static_cast<double>(i)});
        const SurveySummary s = summarize(records);
        CHECK(s.avg_depth_cm >= s.min_depth_cm);
        CHECK(s.avg_depth_cm <= s.max_depth_cm);

        std::shuffle(records.begin(), records.end(), gen);
        CHECK(summarize(records).avg_depth_cm == doctest::Approx(s.avg_depth_cm));
    }
}

TEST_CASE("capacity uses the rectangular model")
{
    CHECK(capacity_estimate_m3(10.0, 5.0, 2.0) == doctest::Approx(100.0));
    CHECK(capacity_estimate_m3(1.0, 1.0, 1.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(capacity_estimate_m3(0.0, 5.0, 2.0), DomainError);
    CHECK_THROWS_AS(capacity_estimate_m3(10.0, 5.0, -2.0), DomainError);

    // linear in each argument independently
    std::mt19937_64 gen(37);
    std::uniform_real_distribution<double> dim(0.1, 100.0);
    for (int i = 0; i < 50; ++i) {
        const double l = dim(gen), w = dim(gen), d = dim(gen);
        const double base = capacity_estimate_m3(l, w, d);
        CHECK(capacity_estimate_m3(2 * l, w, d) == doctest::Approx(2 * base));
        CHECK(capacity_estimate_m3(l, 2 * w, d) == doctest::Approx(2 * base));
        CHECK(capacity_estimate_m3(l, w, 2 * d) == doctest::Approx(2 * base));
    }
}

TEST_CASE("silting ratio sign convention")
{
    SurveySummary ref, newer;
    ref.avg_depth_cm = 400.0;
    newer.avg_depth_cm = 360.0;
    CHECK(silting_ratio(ref, newer) == doctest::Approx(0.10));
    CHECK(silting_ratio(ref, ref) == 0.0);

    // deepening is negative and not the mirror magnitude
    SurveySummary shallow, deep;
    shallow.avg_depth_cm = 360.0;
    deep.avg_depth_cm = 400.0;
    CHECK(silting_ratio(shallow, deep) == doctest::Approx(-0.1111).epsilon(1e-3));

    SurveySummary zero;
    CHECK_THROWS_AS(silting_ratio(zero, newer), DomainError);
}

TEST_CASE("depth profile mirrors the records in setpoint order")
{
    const std::vector<LogRecord> all = parse_log(oracle::read_fixture("field_tests.asblog"));
    const auto tests = split_by_test(all);
    const auto series = depth_profile(tests[2]);
    REQUIRE(series.size() == 6);
    CHECK(series.front() == std::pair<int, int>{1, 346});
    CHECK(series[3] == std::pair<int, int>{4, 374});
    CHECK(series.back() == std::pair<int, int>{6, 380});

    CHECK(depth_profile({{1, 1, 0, 0, 7, 1.0}}).size() == 1);
    CHECK_THROWS_AS(depth_profile({}), DomainError);
}
