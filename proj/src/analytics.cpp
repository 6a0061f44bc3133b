#include "asb/analytics.hpp"

#include "asb/errors.hpp"

#include <algorithm>

namespace asb {

SurveySummary summarize(const std::vector<LogRecord>& records)
{
    if (records.empty())
        throw DomainError("summarize: no records");

    SurveySummary s;
    s.test_id = records.front().test_id;
    s.n_points = static_cast<int>(records.size());
    s.min_depth_cm = records.front().depth_cm;
    s.max_depth_cm = records.front().depth_cm;

    double sum = 0.0;
    for (const LogRecord& r : records) {
        if (r.test_id != s.test_id)
            throw DomainError("summarize: mixed test ids");
        sum += r.depth_cm;
        s.min_depth_cm = std::min(s.min_depth_cm, r.depth_cm);
        s.max_depth_cm = std::max(s.max_depth_cm, r.depth_cm);
    }
    s.avg_depth_cm = sum / s.n_points;
    s.path_length_m = records.back().dist_m;
    return s;
}

std::vector<std::vector<LogRecord>> split_by_test(const std::vector<LogRecord>& records)
{
    std::vector<std::vector<LogRecord>> groups;
    std::vector<int> seen;
    for (const LogRecord& r : records) {
        auto it = std::find(seen.begin(), seen.end(), r.test_id);
        if (it == seen.end()) {
            seen.push_back(r.test_id);
            groups.emplace_back();
            it = seen.end() - 1;
        }
        groups[static_cast<std::size_t>(it - seen.begin())].push_back(r);
    }
    return groups;
}

double capacity_estimate_m3(double length_m, double width_m, double avg_depth_m)
{
    if (!(length_m > 0.0) || !(width_m > 0.0) || !(avg_depth_m > 0.0))
        throw DomainError("capacity_estimate: all dimensions must be positive");
    return length_m * width_m * avg_depth_m;
}

double silting_ratio(const SurveySummary& reference, const SurveySummary& newer)
{
    if (!(reference.avg_depth_cm > 0.0))
        throw DomainError("silting_ratio: reference depth must be positive");
    return (reference.avg_depth_cm - newer.avg_depth_cm) / reference.avg_depth_cm;
}

std::vector<std::pair<int, int>> depth_profile(const std::vector<LogRecord>& records)
{
    if (records.empty())
        throw DomainError("depth_profile: no records");
    std::vector<std::pair<int, int>> series;
    series.reserve(records.size());
    for (const LogRecord& r : records)
        series.emplace_back(r.setpoint, r.depth_cm);
    std::sort(series.begin(), series.end());
    return series;
}

} // namespace asb
