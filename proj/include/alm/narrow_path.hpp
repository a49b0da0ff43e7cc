#pragma once

#include <filesystem>
#include <vector>

#include "alm/data_plane.hpp"
#include "alm/mask.hpp"

namespace alm {

struct Delegate {
    double y = 0.0;
    int branch = 0;      // 0 at the top of the column, contiguous downward
    double weight = 0.0;
};

// Per-column delegate lists over a plane's x axis, plus one confidence value
// for the whole plane (reciprocal-of-variance style, in (0, 1]).
class NarrowPath {
public:
    NarrowPath(int nx, Interval x_range, Interval y_range);

    int nx() const { return nx_; }
    Interval x_range() const { return x_range_; }
    Interval y_range() const { return y_range_; }
    double x_center(int ix) const {
        return x_range_.lo + (ix + 0.5) * x_range_.width() / nx_;
    }
    // Column lookup, clamped so out-of-range x lands in an edge column.
    int x_bin(double x) const;

    const std::vector<Delegate>& column(int ix) const {
        return columns_[static_cast<size_t>(ix)];
    }
    void add_delegate(int ix, Delegate delegate);

    int nonempty_columns() const;
    int delegate_count() const;

    double confidence() const { return confidence_; }
    void set_confidence(double value) { confidence_ = value; }

private:
    int nx_ = 0;
    Interval x_range_;
    Interval y_range_;
    std::vector<std::vector<Delegate>> columns_;
    double confidence_ = 1.0;
};

struct WeightedPoint {
    double y = 0.0;
    double weight = 0.0;
};

// Weighted average of two points; the weights add. Throws ZeroTotalWeight
// when both weights are zero.
WeightedPoint cog_merge(WeightedPoint a, WeightedPoint b);

// Center-of-gravity extraction: one delegate per nonempty column at the
// column's weighted mean height, weight = column mass. Confidence is
// 1 / (1 + mean column variance).
NarrowPath cog_extract(const DataPlane& plane);

// Groups a skeleton's foreground pixels per column into runs separated by
// vertical gaps greater than gap_threshold; one delegate per run at the run's
// mass center, branches numbered from the top.
NarrowPath split_columns(const BinaryImage& skeleton, Interval x_range, Interval y_range,
                         int gap_threshold);

// Structuring-element radius; the default run-splitting threshold.
int default_gap_threshold(const OctetPair& octets);

// Morphological extraction: binarize at threshold, thicken thicken_passes
// times, thin to convergence, then split columns into runs. Throws
// NonConvergence if the thinning pass cap is exhausted.
NarrowPath morph_extract(const DataPlane& plane, long long threshold, int thicken_passes,
                         const OctetPair& octets, int gap_threshold);

// CSV columns x_index,x_center,branch,y,weight; one row per delegate.
void write_path_csv(const std::filesystem::path& path, const NarrowPath& narrow_path);

struct PathCsvRow {
    int x_index = 0;
    double x_center = 0.0;
    int branch = 0;
    double y = 0.0;
    double weight = 0.0;
};
std::vector<PathCsvRow> read_path_csv(const std::filesystem::path& path);

}  // namespace alm
