#pragma once

#include "asb/errors.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace asb {

inline constexpr std::string_view kLogHeader = "# ASB-LOG v1";

// One survey log row: `test,setpoint,lat,lon,depth,dist` with latitude and
// longitude at six decimals, depth in whole centimeters and cumulative
// distance at two decimals. The columns mirror the SD-card text file the
// boat writes in the field.
struct LogRecord {
    int test_id = 1;
    int setpoint = 1;
    double lat_deg = 0.0;
    double lon_deg = 0.0;
    int depth_cm = 0;
    double dist_m = 0.0;

    bool operator==(const LogRecord&) const = default;
};

// Single line, no whitespace, '.' decimal separator regardless of locale.
std::string format_record(const LogRecord& r);

// Exact inverse of format_record. line_no is used in error messages only.
LogRecord parse_record(std::string_view line, int line_no = 0);

// Whole file: `# ASB-LOG v1` header, '#' comment lines ignored, records in
// order. Enforces strictly increasing setpoint and distance within each test.
std::vector<LogRecord> parse_log(std::string_view text);

// Header plus one formatted line per record, LF terminated.
std::string write_log(const std::vector<LogRecord>& records);

} // namespace asb
