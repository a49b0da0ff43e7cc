#include "alm/model.hpp"

#include <cmath>
#include <optional>

#include "alm/errors.hpp"
#include "alm/morphology.hpp"

namespace alm {

SisoStage run_siso(const Dataset& dataset, int dim_index, const FitConfig& config) {
    DataPlane raw = project(dataset, dim_index, config.nx, config.ny);

    DataPlane diffused = [&] {
        if (config.diffusion == DiffusionMode::Ids)
            return ids_spread(raw, config.radius, config.height);
        BinaryImage img = binarize(raw, config.threshold);
        for (int i = 0; i < config.thicken_passes; ++i)
            img = thicken_pass(img, config.octets.thickening);
        return plane_from_image(img, raw.x_range(), raw.y_range());
    }();

    NarrowPath path = [&] {
        const int gap = config.gap_threshold >= 0 ? config.gap_threshold
                                                  : default_gap_threshold(config.octets);
        if (config.extraction == ExtractionMode::Cog) return cog_extract(diffused);
        // A thicken-diffused plane is already 0/1; the threshold applies when
        // extracting from an ink plane.
        const long long threshold =
            config.diffusion == DiffusionMode::Thicken ? 1 : config.threshold;
        BinaryImage img = binarize(diffused, threshold);
        const int cap = config.max_passes > 0 ? config.max_passes : default_pass_cap(img);
        const ConvergenceResult thinned = thin_to_convergence(img, config.octets.thinning, cap);
        if (!thinned.converged)
            throw NonConvergence("run_siso: thinning did not reach a fixed point within " +
                                 std::to_string(cap) + " passes");
        return split_columns(thinned.image, diffused.x_range(), diffused.y_range(), gap);
    }();

    return {std::move(raw), std::move(diffused), std::move(path)};
}

MisoModel::MisoModel(std::vector<NarrowPath> paths) : paths_(std::move(paths)) {
    if (paths_.empty()) throw Error("MisoModel: at least one path required");
}

namespace {

// Nearest column with a delegate; ties resolve to the left.
int nearest_nonempty_column(const NarrowPath& path, int ix) {
    if (!path.column(ix).empty()) return ix;
    for (int d = 1; d < path.nx(); ++d) {
        if (ix - d >= 0 && !path.column(ix - d).empty()) return ix - d;
        if (ix + d < path.nx() && !path.column(ix + d).empty()) return ix + d;
    }
    throw Error("predict: path has no delegates");
}

double evaluate_path(const NarrowPath& path, double x, std::optional<double> previous) {
    const int ix = nearest_nonempty_column(path, path.x_bin(x));
    const std::vector<Delegate>& column = path.column(ix);
    if (!previous.has_value() || column.size() == 1) return column.front().y;
    const Delegate* best = &column.front();
    for (const Delegate& d : column) {
        // strict comparison: ties keep the lower branch index
        if (std::abs(d.y - *previous) < std::abs(best->y - *previous)) best = &d;
    }
    return best->y;
}

}  // namespace

double MisoModel::predict(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != input_dim())
        throw Error("predict: input has wrong dimension");
    double weighted_sum = 0.0, weight_total = 0.0;
    double plain_sum = 0.0;
    std::optional<double> previous;
    for (int dim = 0; dim < input_dim(); ++dim) {
        const double value = evaluate_path(paths_[static_cast<size_t>(dim)], x[static_cast<size_t>(dim)],
                                           previous);
        previous = value;
        const double c = confidence(dim);
        weighted_sum += c * value;
        weight_total += c;
        plain_sum += value;
    }
    if (weight_total == 0.0) return plain_sum / input_dim();
    return weighted_sum / weight_total;
}

MisoModel fit(const Dataset& dataset, const FitConfig& config) {
    if (dataset.empty()) throw EmptyDataset("fit: dataset is empty");
    std::vector<NarrowPath> paths;
    paths.reserve(static_cast<size_t>(dataset.input_dim()));
    for (int dim = 0; dim < dataset.input_dim(); ++dim)
        paths.push_back(run_siso(dataset, dim, config).path);
    return MisoModel(std::move(paths));
}

}  // namespace alm
