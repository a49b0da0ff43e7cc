#pragma once

#include <filesystem>
#include <vector>

#include "alm/binary_image.hpp"
#include "alm/dataset.hpp"

namespace alm {

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
    double width() const { return hi - lo; }
    bool operator==(const Interval&) const = default;
};

// Integer ink-accumulation grid over a rectangular (x, y) window. Cell
// (ix, iy) covers the ix-th x bin and the iy-th y bin, with iy = 0 at the
// bottom of the y range.
class DataPlane {
public:
    DataPlane(int nx, int ny, Interval x_range, Interval y_range);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    Interval x_range() const { return x_range_; }
    Interval y_range() const { return y_range_; }

    long long cell(int ix, int iy) const { return cells_[static_cast<size_t>(iy) * nx_ + ix]; }
    void set_cell(int ix, int iy, long long value);
    void add(int ix, int iy, long long value);

    // Bin lookup, clamped to the grid so boundary values land in edge bins.
    int x_bin(double x) const;
    int y_bin(double y) const;
    double x_center(int ix) const;
    double y_center(int iy) const;

    long long max_cell() const;
    long long total_mass() const;

    bool operator==(const DataPlane&) const = default;

private:
    int nx_ = 0;
    int ny_ = 0;
    Interval x_range_;
    Interval y_range_;
    std::vector<long long> cells_;
};

// Bins the chosen input dimension against the output. Ranges come from the
// data extremes; a degenerate range is widened to 1 unit around the value.
DataPlane project(const Dataset& dataset, int dim_index, int nx, int ny);

// Stamps an additive pyramid around every source cell: a source of count c
// contributes c * height * (radius + 1 - k) at Chebyshev distance k <= radius,
// clipped at the frame. Pointwise integer addition makes the operation exactly
// order-independent.
DataPlane ids_spread(const DataPlane& plane, int radius, long long height);

// Maps a radius in data units onto cells of this plane's x axis.
int radius_to_cells(const DataPlane& plane, double radius_units);

// Cells holding at least threshold become foreground. Image row 0 is the top
// of the plane (largest y), so exported images look like plots.
BinaryImage binarize(const DataPlane& plane, long long threshold);

// Inverse of binarize's row flip: a 0/1 plane with the image's foreground.
DataPlane plane_from_image(const BinaryImage& img, Interval x_range, Interval y_range);

// PGM export with maxval = max cell value (at least 1); top row = largest y.
void write_plane_pgm(const std::filesystem::path& path, const DataPlane& plane);

}  // namespace alm
