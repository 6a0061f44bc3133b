#pragma once

#include "asb/geo.hpp"

#include <string>
#include <vector>

namespace asb {

// Georeferenced depth grid. origin is the south-west corner; rows are stored
// northernmost first, so node (col, row) sits at
//   east  = col * cellsize_m
//   north = (nrows - 1 - row) * cellsize_m
// in the local ENU frame anchored at origin.
struct Bathymetry {
    int ncols = 0;
    int nrows = 0;
    GeoPoint origin;
    double cellsize_m = 0.0;
    std::vector<double> depths_cm; // row-major, nrows * ncols values

    double node(int col, int row) const { return depths_cm[static_cast<std::size_t>(row) * ncols + col]; }
};

// Bilinear interpolation of the four surrounding nodes.
// Throws OutOfBoundsError outside the grid extent.
double depth_at_cm(const Bathymetry& b, const GeoPoint& p);

bool inside_extent(const Bathymetry& b, const GeoPoint& p);

// Plain-text grid: `ncols`, `nrows`, `lat0`, `lon0`, `cellsize_m` header
// lines, then nrows lines of ncols space-separated depths in cm,
// northernmost row first.
Bathymetry load_bathymetry(const std::string& text);

} // namespace asb
