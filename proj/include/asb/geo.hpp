#pragma once

#include "asb/errors.hpp"

namespace asb {

// Spherical earth model. The missions this stack simulates span tens of
// meters, where a sphere is indistinguishable from an ellipsoid.
inline constexpr double kEarthRadiusM = 6'371'000.0;

// Planar ENU frame validity envelope.
inline constexpr double kEnuEnvelopeM = 100'000.0;

// Position in decimal degrees, WGS-84 style axes.
struct GeoPoint {
    double lat_deg = 0.0;
    double lon_deg = 0.0;
};

// Degrees clockwise from true north, always in [0, 360).
struct HeadingDeg {
    double deg = 0.0;
};

// Offset in a local east-north plane anchored at some origin.
struct EnuOffset {
    double east_m = 0.0;
    double north_m = 0.0;
};

bool valid_geopoint(const GeoPoint& p);

// Reduce any finite angle to [0, 360). Throws DomainError on non-finite input.
HeadingDeg wrap_heading(double deg);

// Signed shortest rotation from current to target, in (-180, +180].
double heading_error_deg(HeadingDeg current, HeadingDeg target);

// Great-circle distance in meters (haversine on the spherical model).
double haversine_distance_m(const GeoPoint& a, const GeoPoint& b);

// Compass bearing of the great circle from a to b at a.
// Throws DomainError when the points coincide (bearing undefined).
HeadingDeg initial_bearing(const GeoPoint& a, const GeoPoint& b);

// Planar east-north projection around origin: north = R*dlat,
// east = R*cos(lat_origin)*dlon. Throws DomainError outside the envelope.
EnuOffset to_local_enu(const GeoPoint& origin, const GeoPoint& p);
GeoPoint from_local_enu(const GeoPoint& origin, const EnuOffset& off);

} // namespace asb
