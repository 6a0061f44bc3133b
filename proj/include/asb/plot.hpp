#pragma once

#include "asb/logfmt.hpp"

#include <string>
#include <vector>

namespace asb {

// `setpoint,depth_cm` rows, tests concatenated in first-appearance order.
std::string profile_csv(const std::vector<LogRecord>& records);

// Self-contained SVG line chart of depth against setpoint: one polyline per
// test, linear axes with labeled ticks.
std::string profile_svg(const std::vector<LogRecord>& records);

} // namespace asb
