#pragma once

#include <stdexcept>
#include <string>

namespace asb {

// Base for everything this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precondition violations: non-finite input, value outside a documented envelope.
class DomainError : public Error {
public:
    using Error::Error;
};

// Ultrasonic sounder cannot echo: true depth beyond sensor range.
class OutOfRangeError : public Error {
public:
    using Error::Error;
};

// NMEA sentence checksum does not match its payload.
class ChecksumError : public Error {
public:
    using Error::Error;
};

// NMEA field cannot be interpreted; message names the field.
class NmeaParseError : public Error {
public:
    using Error::Error;
};

// Commanded draw exceeds the H-bridge limit.
class OverCurrentError : public Error {
public:
    using Error::Error;
};

// Mass exceeds hull displacement.
class WouldSinkError : public Error {
public:
    using Error::Error;
};

// Arrival check asked about an invalid GPS fix.
class NoFixError : public Error {
public:
    using Error::Error;
};

// Bathymetry query outside the grid extent.
class OutOfBoundsError : public Error {
public:
    using Error::Error;
};

// Malformed grid, mission, log or component file; message names the defect.
class FileFormatError : public Error {
public:
    using Error::Error;
};

// Log file missing or carrying an unknown header.
class VersionError : public FileFormatError {
public:
    using FileFormatError::FileFormatError;
};

// Per-test monotonicity violated in a log.
class OrderError : public FileFormatError {
public:
    using FileFormatError::FileFormatError;
};

// Bad key or value in a run configuration file.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace asb
