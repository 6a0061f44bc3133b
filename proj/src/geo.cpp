#include "asb/geo.hpp"

#include <cmath>
#include <numbers>

namespace asb {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;

} // namespace

bool valid_geopoint(const GeoPoint& p)
{
    return std::isfinite(p.lat_deg) && std::isfinite(p.lon_deg) &&
           p.lat_deg >= -90.0 && p.lat_deg <= 90.0 &&
           p.lon_deg >= -180.0 && p.lon_deg <= 180.0;
}

HeadingDeg wrap_heading(double deg)
{
    if (!std::isfinite(deg))
        throw DomainError("wrap_heading: non-finite angle");
    double w = std::fmod(deg, 360.0);
    if (w < 0.0)
        w += 360.0;
    if (w >= 360.0) // fmod of tiny negatives can round back up to 360
        w = 0.0;
    return HeadingDeg{w};
}

double heading_error_deg(HeadingDeg current, HeadingDeg target)
{
    double err = std::fmod(target.deg - current.deg, 360.0);
    if (err > 180.0)
        err -= 360.0;
    else if (err <= -180.0)
        err += 360.0;
    return err;
}

double haversine_distance_m(const GeoPoint& a, const GeoPoint& b)
{
    const double lat1 = a.lat_deg * kDegToRad;
    const double lat2 = b.lat_deg * kDegToRad;
    const double dlat = (b.lat_deg - a.lat_deg) * kDegToRad;
    const double dlon = (b.lon_deg - a.lon_deg) * kDegToRad;

    const double sdlat = std::sin(0.5 * dlat);
    const double sdlon = std::sin(0.5 * dlon);
    const double h = sdlat * sdlat + std::cos(lat1) * std::cos(lat2) * sdlon * sdlon;
    return 2.0 * kEarthRadiusM * std::atan2(std::sqrt(h), std::sqrt(1.0 - h));
}

HeadingDeg initial_bearing(const GeoPoint& a, const GeoPoint& b)
{
    if (a.lat_deg == b.lat_deg && a.lon_deg == b.lon_deg)
        throw DomainError("initial_bearing: coincident points, bearing undefined");

    const double lat1 = a.lat_deg * kDegToRad;
    const double lat2 = b.lat_deg * kDegToRad;
    const double dlon = (b.lon_deg - a.lon_deg) * kDegToRad;

    const double y = std::sin(dlon) * std::cos(lat2);
    const double x = std::cos(lat1) * std::sin(lat2) -
                     std::sin(lat1) * std::cos(lat2) * std::cos(dlon);
    return wrap_heading(std::atan2(y, x) * kRadToDeg);
}

EnuOffset to_local_enu(const GeoPoint& origin, const GeoPoint& p)
{
    const double north = kEarthRadiusM * (p.lat_deg - origin.lat_deg) * kDegToRad;
    const double east = kEarthRadiusM * std::cos(origin.lat_deg * kDegToRad) *
                        (p.lon_deg - origin.lon_deg) * kDegToRad;
    if (std::hypot(east, north) >= kEnuEnvelopeM)
        throw DomainError("to_local_enu: point outside 100 km planar envelope");
    return EnuOffset{east, north};
}

GeoPoint from_local_enu(const GeoPoint& origin, const EnuOffset& off)
{
    if (!std::isfinite(off.east_m) || !std::isfinite(off.north_m) ||
        std::hypot(off.east_m, off.north_m) >= kEnuEnvelopeM)
        throw DomainError("from_local_enu: offset outside 100 km planar envelope");
    const double lat = origin.lat_deg + (off.north_m / kEarthRadiusM) * kRadToDeg;
    const double lon = origin.lon_deg +
                       (off.east_m / (kEarthRadiusM * std::cos(origin.lat_deg * kDegToRad))) * kRadToDeg;
    return GeoPoint{lat, lon};
}

} // namespace asb
