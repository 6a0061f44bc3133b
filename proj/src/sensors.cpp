#include "asb/sensors.hpp"

#include <algorithm>
#include <cmath>

namespace asb {

double sample_depth_cm(double true_depth_cm, const SensorSuite& suite,
                       RandomStream& rng, bool noise_enabled)
{
    if (!(true_depth_cm >= 0.0))
        throw DomainError("sample_depth: negative true depth");
    if (true_depth_cm > suite.depth_max_cm)
        throw OutOfRangeError("sample_depth: true depth beyond sensor range");

    double reading = true_depth_cm;
    if (noise_enabled)
        reading += rng.next_uniform(-suite.depth_accuracy_cm, suite.depth_accuracy_cm);
    return std::clamp(reading, suite.depth_min_cm, suite.depth_max_cm);
}

HeadingDeg sample_compass(HeadingDeg true_heading, const SensorSuite& suite,
                          RandomStream& rng, bool noise_enabled)
{
    if (!noise_enabled)
        return wrap_heading(true_heading.deg);
    return wrap_heading(true_heading.deg + rng.next_gaussian(0.0, suite.compass_sigma_deg));
}

namespace {

double snap_to_cell_center(double coord_m, double cell_m)
{
    return (std::floor(coord_m / cell_m) + 0.5) * cell_m;
}

} // namespace

GpsFix sample_gps(const GeoPoint& true_pos, const GeoPoint& origin,
                  const SensorSuite& suite, RandomStream& rng,
                  bool noise_enabled)
{
    EnuOffset off = to_local_enu(origin, true_pos);
    if (noise_enabled) {
        off.east_m += rng.next_gaussian(0.0, suite.gps_sigma_m);
        off.north_m += rng.next_gaussian(0.0, suite.gps_sigma_m);
    }
    off.east_m = snap_to_cell_center(off.east_m, suite.gps_cell_m);
    off.north_m = snap_to_cell_center(off.north_m, suite.gps_cell_m);
    return GpsFix{from_local_enu(origin, off), true};
}

} // namespace asb
