#pragma once

#include "asb/geo.hpp"
#include "asb/rng.hpp"

namespace asb {

// Datasheet figures for the boat's sensor fit: HC-SR04 sounder (0-450 cm,
// 0.3 cm), HMC5883L compass (1-2 deg heading), SKM53 GPS (4.5-10 m, with a
// ~4 m positional quantum observed in the field).
struct SensorSuite {
    double depth_accuracy_cm = 0.3;
    double depth_min_cm = 0.0;
    double depth_max_cm = 450.0;
    double compass_sigma_deg = 1.5;
    double gps_sigma_m = 3.0;
    double gps_cell_m = 4.0;
};

struct GpsFix {
    GeoPoint point;
    bool valid = false;
};

// Sounder reading: truth plus a bounded uniform error in
// [-depth_accuracy, +depth_accuracy], clipped to the sensor range.
// Throws OutOfRangeError when the true depth exceeds the range (no echo).
double sample_depth_cm(double true_depth_cm, const SensorSuite& suite,
                       RandomStream& rng, bool noise_enabled = true);

// Compass reading: truth plus wrapped gaussian noise.
HeadingDeg sample_compass(HeadingDeg true_heading, const SensorSuite& suite,
                          RandomStream& rng, bool noise_enabled = true);

// GPS reading: per-axis gaussian scatter in the local ENU plane, then a snap
// to the center of the gps_cell_m x gps_cell_m grid cell anchored at origin.
// The snap models the receiver's positional quantum and applies even with
// noise disabled.
GpsFix sample_gps(const GeoPoint& true_pos, const GeoPoint& origin,
                  const SensorSuite& suite, RandomStream& rng,
                  bool noise_enabled = true);

} // namespace asb
