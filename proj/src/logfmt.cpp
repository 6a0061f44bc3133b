#include "asb/logfmt.hpp"

#include <array>
#include <charconv>
#include <map>

namespace asb {

namespace {

void append_fixed(std::string& out, double value, int precision)
{
    std::array<char, 64> buf;
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::fixed, precision);
    out.append(buf.data(), ptr);
}

std::string field_error(int line_no, const char* what)
{
    std::string msg = "log";
    if (line_no > 0)
        msg += " line " + std::to_string(line_no);
    msg += ": ";
    msg += what;
    return msg;
}

double parse_double_field(std::string_view text, int line_no, const char* name)
{
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw FileFormatError(field_error(line_no, name));
    return value;
}

long parse_int_field(std::string_view text, int line_no, const char* name)
{
    long value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw FileFormatError(field_error(line_no, name));
    return value;
}

} // namespace

std::string format_record(const LogRecord& r)
{
    std::string out;
    out += std::to_string(r.test_id);
    out += ',';
    out += std::to_string(r.setpoint);
    out += ',';
    append_fixed(out, r.lat_deg, 6);
    out += ',';
    append_fixed(out, r.lon_deg, 6);
    out += ',';
    out += std::to_string(r.depth_cm);
    out += ',';
    append_fixed(out, r.dist_m, 2);
    return out;
}

LogRecord parse_record(std::string_view line, int line_no)
{
    std::array<std::string_view, 6> fields;
    std::size_t count = 0;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (count >= fields.size())
            throw FileFormatError(field_error(line_no, "expected 6 fields"));
        if (comma == std::string_view::npos) {
            fields[count++] = line.substr(start);
            break;
        }
        fields[count++] = line.substr(start, comma - start);
        start = comma + 1;
    }
    if (count != fields.size())
        throw FileFormatError(field_error(line_no, "expected 6 fields"));

    LogRecord r;
    r.test_id = static_cast<int>(parse_int_field(fields[0], line_no, "non-numeric test id"));
    r.setpoint = static_cast<int>(parse_int_field(fields[1], line_no, "non-numeric setpoint"));
    r.lat_deg = parse_double_field(fields[2], line_no, "non-numeric latitude");
    r.lon_deg = parse_double_field(fields[3], line_no, "non-numeric longitude");
    r.depth_cm = static_cast<int>(parse_int_field(fields[4], line_no, "non-numeric depth"));
    r.dist_m = parse_double_field(fields[5], line_no, "non-numeric distance");

    if (r.test_id <= 0)
        throw FileFormatError(field_error(line_no, "test id must be positive"));
    if (r.setpoint <= 0)
        throw FileFormatError(field_error(line_no, "setpoint must be positive"));
    if (r.depth_cm < 0)
        throw FileFormatError(field_error(line_no, "negative depth"));
    if (r.dist_m < 0.0)
        throw FileFormatError(field_error(line_no, "negative distance"));
    return r;
}

std::vector<LogRecord> parse_log(std::string_view text)
{
    std::vector<LogRecord> records;
    std::map<int, LogRecord> last_in_test;

    int line_no = 0;
    bool header_seen = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);

        if (!header_seen) {
            if (line != kLogHeader)
                throw VersionError("log: missing or unknown header, expected '" +
                                   std::string(kLogHeader) + "'");
            header_seen = true;
            continue;
        }
        if (line.empty() || line.front() == '#')
            continue;

        const LogRecord r = parse_record(line, line_no);
        if (auto it = last_in_test.find(r.test_id); it != last_in_test.end()) {
            if (r.setpoint <= it->second.setpoint)
                throw OrderError(field_error(line_no, "setpoint not strictly increasing within test"));
            if (r.dist_m <= it->second.dist_m)
                throw OrderError(field_error(line_no, "distance not strictly increasing within test"));
        }
        records.push_back(r);
        last_in_test[r.test_id] = r;
    }
    if (!header_seen)
        throw VersionError("log: empty file, expected '" + std::string(kLogHeader) + "'");
    return records;
}

std::string write_log(const std::vector<LogRecord>& records)
{
    std::string out(kLogHeader);
    out += '\n';
    for (const LogRecord& r : records) {
        out += format_record(r);
        out += '\n';
    }
    return out;
}

} // namespace asb
