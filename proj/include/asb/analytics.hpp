#pragma once

#include "asb/logfmt.hpp"

#include <map>
#include <utility>
#include <vector>

namespace asb {

struct SurveySummary {
    int test_id = 0;
    int n_points = 0;
    double avg_depth_cm = 0.0;
    int min_depth_cm = 0;
    int max_depth_cm = 0;
    double path_length_m = 0.0; // final cumulative distance
};

// Mean/min/max depth and path length over the records of one test.
// Throws DomainError on empty input or mixed test ids.
SurveySummary summarize(const std::vector<LogRecord>& records);

// Records grouped by test id, in first-appearance order.
std::vector<std::vector<LogRecord>> split_by_test(const std::vector<LogRecord>& records);

// Rectangular reservoir model: length x width x mean depth.
double capacity_estimate_m3(double length_m, double width_m, double avg_depth_m);

// Relative mean-depth loss of a newer survey against a reference one.
// Positive means the bottom came up (silting), negative means deepening.
double silting_ratio(const SurveySummary& reference, const SurveySummary& newer);

// (setpoint, depth) series for one test, in setpoint order.
std::vector<std::pair<int, int>> depth_profile(const std::vector<LogRecord>& records);

} // namespace asb
