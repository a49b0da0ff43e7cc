#include "alm/narrow_path.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "alm/errors.hpp"
#include "alm/morphology.hpp"

namespace alm {

NarrowPath::NarrowPath(int nx, Interval x_range, Interval y_range)
    : nx_(nx), x_range_(x_range), y_range_(y_range), columns_(static_cast<size_t>(nx)) {
    if (nx < 1) throw Error("NarrowPath: nx must be >= 1");
}

void NarrowPath::add_delegate(int ix, Delegate delegate) {
    if (ix < 0 || ix >= nx_) throw Error("NarrowPath: column index out of range");
    if (delegate.y < y_range_.lo || delegate.y > y_range_.hi)
        throw Error("NarrowPath: delegate outside the y range");
    if (delegate.weight < 0.0) throw Error("NarrowPath: weight must be non-negative");
    auto& column = columns_[static_cast<size_t>(ix)];
    if (delegate.branch != static_cast<int>(column.size()))
        throw Error("NarrowPath: branch labels must be contiguous from 0");
    column.push_back(delegate);
}

int NarrowPath::x_bin(double x) const {
    const int bin = static_cast<int>(std::floor((x - x_range_.lo) / x_range_.width() * nx_));
    return std::clamp(bin, 0, nx_ - 1);
}

int NarrowPath::nonempty_columns() const {
    int n = 0;
    for (const auto& column : columns_)
        if (!column.empty()) ++n;
    return n;
}

int NarrowPath::delegate_count() const {
    int n = 0;
    for (const auto& column : columns_) n += static_cast<int>(column.size());
    return n;
}

WeightedPoint cog_merge(WeightedPoint a, WeightedPoint b) {
    if (a.weight < 0.0 || b.weight < 0.0) throw Error("cog_merge: weights must be >= 0");
    const double total = a.weight + b.weight;
    if (total == 0.0) throw ZeroTotalWeight("cog_merge: both weights are zero");
    return {(a.y * a.weight + b.y * b.weight) / total, total};
}

NarrowPath cog_extract(const DataPlane& plane) {
    NarrowPath path(plane.nx(), plane.x_range(), plane.y_range());
    double variance_sum = 0.0;
    int nonempty = 0;
    for (int ix = 0; ix < plane.nx(); ++ix) {
        double mass = 0.0, moment = 0.0;
        for (int iy = 0; iy < plane.ny(); ++iy) {
            const double v = static_cast<double>(plane.cell(ix, iy));
            mass += v;
            moment += v * plane.y_center(iy);
        }
        if (mass == 0.0) continue;
        const double y_star = moment / mass;
        double variance = 0.0;
        for (int iy = 0; iy < plane.ny(); ++iy) {
            const double v = static_cast<double>(plane.cell(ix, iy));
            if (v == 0.0) continue;
            const double d = plane.y_center(iy) - y_star;
            variance += v * d * d;
        }
        variance /= mass;
        path.add_delegate(ix, {y_star, 0, mass});
        variance_sum += variance;
        ++nonempty;
    }
    const double mean_variance = nonempty ? variance_sum / nonempty : 0.0;
    path.set_confidence(1.0 / (1.0 + mean_variance));
    return path;
}

NarrowPath split_columns(const BinaryImage& skeleton, Interval x_range, Interval y_range,
                         int gap_threshold) {
    if (gap_threshold < 0) throw Error("split_columns: gap_threshold must be >= 0");
    NarrowPath path(skeleton.width(), x_range, y_range);
    const int ny = skeleton.height();
    auto y_center = [&](int row) {
        const int iy = ny - 1 - row;  // image row 0 is the top of the plane
        return y_range.lo + (iy + 0.5) * y_range.width() / ny;
    };

    double variance_sum = 0.0;
    int nonempty = 0;
    for (int c = 0; c < skeleton.width(); ++c) {
        // Rows of foreground pixels, walked from the top so runs come out in
        // top-to-bottom branch order.
        std::vector<std::vector<int>> runs;
        int last_row = -2;
        for (int r = 0; r < ny; ++r) {
            if (!skeleton.at(r, c)) continue;
            if (runs.empty() || r - last_row - 1 > gap_threshold) runs.emplace_back();
            runs.back().push_back(r);
            last_row = r;
        }
        if (runs.empty()) continue;

        double column_sq_sum = 0.0;
        int column_pixels = 0;
        for (size_t b = 0; b < runs.size(); ++b) {
            double sum = 0.0;
            for (int r : runs[b]) sum += y_center(r);
            const double mean = sum / static_cast<double>(runs[b].size());
            path.add_delegate(c, {mean, static_cast<int>(b),
                                  static_cast<double>(runs[b].size())});
            for (int r : runs[b]) {
                const double d = y_center(r) - mean;
                column_sq_sum += d * d;
            }
            column_pixels += static_cast<int>(runs[b].size());
        }
        variance_sum += column_sq_sum / column_pixels;
        ++nonempty;
    }
    const double mean_variance = nonempty ? variance_sum / nonempty : 0.0;
    path.set_confidence(1.0 / (1.0 + mean_variance));
    return path;
}

int default_gap_threshold(const OctetPair& octets) {
    return octets.thinning[0].size() / 2;
}

NarrowPath morph_extract(const DataPlane& plane, long long threshold, int thicken_passes,
                         const OctetPair& octets, int gap_threshold) {
    if (thicken_passes < 0) throw Error("morph_extract: thicken_passes must be >= 0");
    BinaryImage img = binarize(plane, threshold);
    for (int i = 0; i < thicken_passes; ++i) img = thicken_pass(img, octets.thickening);
    const ConvergenceResult thinned =
        thin_to_convergence(img, octets.thinning, default_pass_cap(img));
    if (!thinned.converged)
        throw NonConvergence("morph_extract: thinning did not reach a fixed point within " +
                             std::to_string(default_pass_cap(img)) + " passes");
    return split_columns(thinned.image, plane.x_range(), plane.y_range(), gap_threshold);
}

void write_path_csv(const std::filesystem::path& path, const NarrowPath& narrow_path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write path CSV: " + path.string());
    out << "x_index,x_center,branch,y,weight\n";
    char buf[64];
    for (int ix = 0; ix < narrow_path.nx(); ++ix) {
        for (const Delegate& d : narrow_path.column(ix)) {
            out << ix << ',';
            std::snprintf(buf, sizeof(buf), "%.17g", narrow_path.x_center(ix));
            out << buf << ',' << d.branch << ',';
            std::snprintf(buf, sizeof(buf), "%.17g", d.y);
            out << buf << ',';
            std::snprintf(buf, sizeof(buf), "%.17g", d.weight);
            out << buf << '\n';
        }
    }
    if (!out) throw IoError("failed writing path CSV: " + path.string());
}

std::vector<PathCsvRow> read_path_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open path CSV: " + path.string());
    std::string line;
    if (!std::getline(in, line) ||
        (line != "x_index,x_center,branch,y,weight" &&
         line != "x_index,x_center,branch,y,weight\r"))
        throw ParseError("bad path CSV header: " + path.string());
    std::vector<PathCsvRow> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string token;
        PathCsvRow row;
        try {
            std::getline(fields, token, ',');
            row.x_index = std::stoi(token);
            std::getline(fields, token, ',');
            row.x_center = std::stod(token);
            std::getline(fields, token, ',');
            row.branch = std::stoi(token);
            std::getline(fields, token, ',');
            row.y = std::stod(token);
            std::getline(fields, token, ',');
            row.weight = std::stod(token);
        } catch (const std::exception&) {
            throw ParseError("bad path CSV row in " + path.string());
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace alm
