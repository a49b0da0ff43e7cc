#include "alm/data_plane.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "alm/errors.hpp"
#include "alm/pgm.hpp"

namespace alm {

DataPlane::DataPlane(int nx, int ny, Interval x_range, Interval y_range)
    : nx_(nx), ny_(ny), x_range_(x_range), y_range_(y_range) {
    if (nx < 1 || ny < 1) throw Error("DataPlane: nx and ny must be >= 1");
    if (!(x_range.width() > 0.0) || !(y_range.width() > 0.0))
        throw Error("DataPlane: ranges must be non-degenerate");
    cells_.assign(static_cast<size_t>(nx) * ny, 0);
}

void DataPlane::set_cell(int ix, int iy, long long value) {
    if (value < 0) throw Error("DataPlane: cells are non-negative");
    cells_[static_cast<size_t>(iy) * nx_ + ix] = value;
}

void DataPlane::add(int ix, int iy, long long value) {
    cells_[static_cast<size_t>(iy) * nx_ + ix] += value;
}

namespace {

int bin_of(double v, const Interval& range, int count) {
    const int bin = static_cast<int>(std::floor((v - range.lo) / range.width() * count));
    return std::clamp(bin, 0, count - 1);
}

}  // namespace

int DataPlane::x_bin(double x) const { return bin_of(x, x_range_, nx_); }
int DataPlane::y_bin(double y) const { return bin_of(y, y_range_, ny_); }

double DataPlane::x_center(int ix) const {
    return x_range_.lo + (ix + 0.5) * x_range_.width() / nx_;
}

double DataPlane::y_center(int iy) const {
    return y_range_.lo + (iy + 0.5) * y_range_.width() / ny_;
}

long long DataPlane::max_cell() const {
    return *std::max_element(cells_.begin(), cells_.end());
}

long long DataPlane::total_mass() const {
    return std::accumulate(cells_.begin(), cells_.end(), 0LL);
}

namespace {

Interval data_range(double lo, double hi) {
    if (hi > lo) return {lo, hi};
    // Degenerate extent: widen to one unit around the value.
    return {lo - 0.5, lo + 0.5};
}

}  // namespace

DataPlane project(const Dataset& dataset, int dim_index, int nx, int ny) {
    if (dataset.empty()) throw EmptyDataset("project: dataset is empty");
    if (dim_index < 0 || dim_index >= dataset.input_dim())
        throw Error("project: dim_index out of range");
    if (nx < 2 || ny < 2) throw Error("project: nx and ny must be >= 2");

    double x_lo = dataset[0].inputs[static_cast<size_t>(dim_index)], x_hi = x_lo;
    double y_lo = dataset[0].output, y_hi = y_lo;
    for (const Sample& s : dataset) {
        const double x = s.inputs[static_cast<size_t>(dim_index)];
        x_lo = std::min(x_lo, x);
        x_hi = std::max(x_hi, x);
        y_lo = std::min(y_lo, s.output);
        y_hi = std::max(y_hi, s.output);
    }

    DataPlane plane(nx, ny, data_range(x_lo, x_hi), data_range(y_lo, y_hi));
    for (const Sample& s : dataset) {
        const double x = s.inputs[static_cast<size_t>(dim_index)];
        plane.add(plane.x_bin(x), plane.y_bin(s.output), 1);
    }
    return plane;
}

DataPlane ids_spread(const DataPlane& plane, int radius, long long height) {
    if (radius < 0) throw Error("ids_spread: radius must be >= 0");
    if (height < 1) throw Error("ids_spread: height must be >= 1");
    DataPlane out(plane.nx(), plane.ny(), plane.x_range(), plane.y_range());
    for (int iy = 0; iy < plane.ny(); ++iy) {
        for (int ix = 0; ix < plane.nx(); ++ix) {
            const long long count = plane.cell(ix, iy);
            if (count == 0) continue;
            for (int dy = -radius; dy <= radius; ++dy) {
                const int y = iy + dy;
                if (y < 0 || y >= plane.ny()) continue;
                for (int dx = -radius; dx <= radius; ++dx) {
                    const int x = ix + dx;
                    if (x < 0 || x >= plane.nx()) continue;
                    const int k = std::max(std::abs(dx), std::abs(dy));
                    out.add(x, y, count * height * (radius + 1 - k));
                }
            }
        }
    }
    return out;
}

int radius_to_cells(const DataPlane& plane, double radius_units) {
    if (radius_units < 0.0) throw Error("radius_to_cells: radius must be >= 0");
    return static_cast<int>(std::lround(radius_units * plane.nx() / plane.x_range().width()));
}

BinaryImage binarize(const DataPlane& plane, long long threshold) {
    if (threshold < 1) throw Error("binarize: threshold must be >= 1");
    BinaryImage img(plane.nx(), plane.ny());
    for (int iy = 0; iy < plane.ny(); ++iy)
        for (int ix = 0; ix < plane.nx(); ++ix)
            img.set(plane.ny() - 1 - iy, ix, plane.cell(ix, iy) >= threshold);
    return img;
}

DataPlane plane_from_image(const BinaryImage& img, Interval x_range, Interval y_range) {
    DataPlane plane(img.width(), img.height(), x_range, y_range);
    for (int r = 0; r < img.height(); ++r)
        for (int c = 0; c < img.width(); ++c)
            if (img.at(r, c)) plane.set_cell(c, img.height() - 1 - r, 1);
    return plane;
}

void write_plane_pgm(const std::filesystem::path& path, const DataPlane& plane) {
    PgmData data;
    data.width = plane.nx();
    data.height = plane.ny();
    data.maxval = std::max(plane.max_cell(), 1LL);
    data.values.reserve(static_cast<size_t>(plane.nx()) * plane.ny());
    for (int iy = plane.ny() - 1; iy >= 0; --iy)
        for (int ix = 0; ix < plane.nx(); ++ix) data.values.push_back(plane.cell(ix, iy));
    write_pgm(path, data);
}

}  // namespace alm
