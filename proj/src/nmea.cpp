#include "asb/nmea.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <vector>

namespace asb {

std::uint8_t nmea_checksum(std::string_view payload)
{
    std::uint8_t sum = 0;
    for (unsigned char c : payload)
        sum ^= c;
    return sum;
}

namespace {

int hex_digit(char c)
{
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
}

std::vector<std::string_view> split_fields(std::string_view payload)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = payload.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(payload.substr(start));
            return fields;
        }
        fields.push_back(payload.substr(start, comma - start));
        start = comma + 1;
    }
}

double parse_number(std::string_view text, const char* field_name)
{
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw NmeaParseError(std::string("nmea: malformed field '") + field_name + "'");
    return value;
}

// ddmm.mmmm (lat) / dddmm.mmmm (lon) to signed decimal degrees.
double angle_from_ddmm(std::string_view text, std::string_view hemi,
                       bool is_longitude, const char* field_name)
{
    const double raw = parse_number(text, field_name);
    const double deg = std::floor(raw / 100.0);
    const double minutes = raw - deg * 100.0;
    if (minutes >= 60.0)
        throw NmeaParseError(std::string("nmea: minutes out of range in '") + field_name + "'");
    double value = deg + minutes / 60.0;

    const double limit = is_longitude ? 180.0 : 90.0;
    if (value < 0.0 || value > limit)
        throw NmeaParseError(std::string("nmea: degrees out of range in '") + field_name + "'");

    if (hemi.size() != 1)
        throw NmeaParseError(std::string("nmea: malformed field '") + field_name + " hemisphere'");
    const char h = hemi[0];
    if (is_longitude ? h == 'W' : h == 'S')
        value = -value;
    else if ((is_longitude && h != 'E') || (!is_longitude && h != 'N'))
        throw NmeaParseError(std::string("nmea: malformed field '") + field_name + " hemisphere'");
    return value;
}

GpsFix fix_from_fields(const std::vector<std::string_view>& f,
                       std::size_t lat_ix, bool flagged_valid)
{
    // Receivers emit empty position fields while searching; that is a valid
    // sentence carrying no fix.
    if (f.size() <= lat_ix + 3 || f[lat_ix].empty() || f[lat_ix + 2].empty())
        return GpsFix{};
    GpsFix fix;
    fix.point.lat_deg = angle_from_ddmm(f[lat_ix], f[lat_ix + 1], false, "latitude");
    fix.point.lon_deg = angle_from_ddmm(f[lat_ix + 2], f[lat_ix + 3], true, "longitude");
    fix.valid = flagged_valid;
    return fix;
}

} // namespace

NmeaResult parse_nmea_sentence(std::string_view line)
{
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n' ||
                             line.back() == ' ' || line.back() == '\t'))
        line.remove_suffix(1);
    if (line.empty() || line.front() != '$')
        throw NmeaParseError("nmea: line does not start with '$'");

    std::string_view payload = line.substr(1);
    const std::size_t star = payload.find('*');
    if (star != std::string_view::npos) {
        std::string_view digits = payload.substr(star + 1);
        if (digits.size() != 2 || hex_digit(digits[0]) < 0 || hex_digit(digits[1]) < 0)
            throw NmeaParseError("nmea: malformed field 'checksum'");
        const int stated = hex_digit(digits[0]) * 16 + hex_digit(digits[1]);
        payload = payload.substr(0, star);
        if (nmea_checksum(payload) != stated)
            throw ChecksumError("nmea: checksum mismatch");
    }

    const auto fields = split_fields(payload);
    const std::string_view talker = fields[0];
    if (talker.size() < 5)
        throw NmeaParseError("nmea: malformed field 'sentence type'");

    NmeaResult result;
    result.type = std::string(talker.substr(talker.size() - 3));

    if (result.type == "GGA") {
        // $xxGGA,time,lat,N,lon,E,quality,...
        const bool has_fix = fields.size() > 6 && !fields[6].empty() && fields[6] != "0";
        result.fix = fix_from_fields(fields, 2, has_fix);
    } else if (result.type == "RMC") {
        // $xxRMC,time,status,lat,N,lon,E,...
        const bool active = fields.size() > 2 && fields[2] == "A";
        result.fix = fix_from_fields(fields, 3, active);
    }
    return result;
}

} // namespace asb
