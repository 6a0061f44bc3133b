#pragma once

#include "asb/sensors.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace asb {

// Outcome of parsing one NMEA 0183 line. Positional sentences (GGA, RMC)
// carry a fix; everything else is reported by type and skipped.
struct NmeaResult {
    std::string type;          // three-letter sentence type, e.g. "GGA", "GSV"
    std::optional<GpsFix> fix; // present only for GGA/RMC

    bool positional() const { return fix.has_value(); }
};

// XOR of all character codes between '$' and '*'.
std::uint8_t nmea_checksum(std::string_view payload);

// Parse one `$...*hh` framed line (checksum and CR/LF optional).
// Throws ChecksumError on checksum mismatch and NmeaParseError naming the
// field when one cannot be interpreted.
NmeaResult parse_nmea_sentence(std::string_view line);

} // namespace asb
