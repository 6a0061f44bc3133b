#include "asb/bathymetry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace asb {

namespace {

struct GridCoord {
    double x = 0.0; // east, in cells
    double y = 0.0; // north, in cells
};

// Queries exactly on the grid edge arrive with degree-roundtrip noise; a
// micrometer-scale slack keeps them inside.
constexpr double kCellSlack = 1e-6;

GridCoord to_grid(const Bathymetry& b, const GeoPoint& p)
{
    const EnuOffset off = to_local_enu(b.origin, p);
    return GridCoord{off.east_m / b.cellsize_m, off.north_m / b.cellsize_m};
}

bool in_bounds(const Bathymetry& b, const GridCoord& g)
{
    return g.x >= -kCellSlack && g.x <= b.ncols - 1 + kCellSlack &&
           g.y >= -kCellSlack && g.y <= b.nrows - 1 + kCellSlack;
}

} // namespace

bool inside_extent(const Bathymetry& b, const GeoPoint& p)
{
    return in_bounds(b, to_grid(b, p));
}

double depth_at_cm(const Bathymetry& b, const GeoPoint& p)
{
    if (b.ncols < 2 || b.nrows < 2)
        throw DomainError("bathymetry: grid must be at least 2x2");
    GridCoord g = to_grid(b, p);
    if (!in_bounds(b, g)) {
        std::ostringstream msg;
        msg << "bathymetry query outside grid extent (cell " << g.x << ", " << g.y << ")";
        throw OutOfBoundsError(msg.str());
    }
    g.x = std::clamp(g.x, 0.0, static_cast<double>(b.ncols - 1));
    g.y = std::clamp(g.y, 0.0, static_cast<double>(b.nrows - 1));

    // Cell indices count from the south-west; clamping keeps queries on the
    // north/east edges inside the last cell.
    const int col = std::min(static_cast<int>(g.x), b.ncols - 2);
    const int row_s = std::min(static_cast<int>(g.y), b.nrows - 2);
    const double fx = g.x - col;
    const double fy = g.y - row_s;

    // Storage rows count from the north edge.
    const int row_south = b.nrows - 1 - row_s;
    const int row_north = row_south - 1;

    const double sw = b.node(col, row_south);
    const double se = b.node(col + 1, row_south);
    const double nw = b.node(col, row_north);
    const double ne = b.node(col + 1, row_north);

    const double south = sw + (se - sw) * fx;
    const double north = nw + (ne - nw) * fx;
    return south + (north - south) * fy;
}

namespace {

double header_value(std::istream& in, const std::string& expected_key, int& line_no)
{
    std::string line;
    if (!std::getline(in, line))
        throw FileFormatError("bathymetry: missing header line '" + expected_key + "'");
    ++line_no;
    std::istringstream fields(line);
    std::string key;
    double value = 0.0;
    if (!(fields >> key >> value) || key != expected_key)
        throw FileFormatError("bathymetry line " + std::to_string(line_no) +
                              ": expected '" + expected_key + " <value>'");
    return value;
}

} // namespace

Bathymetry load_bathymetry(const std::string& text)
{
    std::istringstream in(text);
    int line_no = 0;

    Bathymetry b;
    const double ncols = header_value(in, "ncols", line_no);
    const double nrows = header_value(in, "nrows", line_no);
    b.origin.lat_deg = header_value(in, "lat0", line_no);
    b.origin.lon_deg = header_value(in, "lon0", line_no);
    b.cellsize_m = header_value(in, "cellsize_m", line_no);

    b.ncols = static_cast<int>(ncols);
    b.nrows = static_cast<int>(nrows);
    if (b.ncols < 2 || b.nrows < 2)
        throw FileFormatError("bathymetry: grid must be at least 2x2");
    if (!(b.cellsize_m > 0.0))
        throw FileFormatError("bathymetry: cellsize must be positive");
    if (!valid_geopoint(b.origin))
        throw FileFormatError("bathymetry: origin out of range");

    b.depths_cm.reserve(static_cast<std::size_t>(b.ncols) * b.nrows);
    double value = 0.0;
    while (in >> value) {
        if (value < 0.0)
            throw FileFormatError("bathymetry: negative depth " + std::to_string(value));
        b.depths_cm.push_back(value);
    }
    if (!in.eof()) {
        in.clear();
        std::string junk;
        in >> junk;
        throw FileFormatError("bathymetry: non-numeric depth value '" + junk + "'");
    }

    const std::size_t expected = static_cast<std::size_t>(b.ncols) * b.nrows;
    if (b.depths_cm.size() != expected)
        throw FileFormatError("bathymetry: dimension mismatch, header claims " +
                              std::to_string(expected) + " values, body has " +
                              std::to_string(b.depths_cm.size()));
    return b;
}

} // namespace asb
