#pragma once

#include <span>
#include <vector>

#include "alm/dataset.hpp"
#include "alm/data_plane.hpp"
#include "alm/mask.hpp"
#include "alm/narrow_path.hpp"

namespace alm {

enum class DiffusionMode { Ids, Thicken };
enum class ExtractionMode { Cog, Thin };

struct FitConfig {
    int nx = 64;
    int ny = 64;
    DiffusionMode diffusion = DiffusionMode::Ids;
    ExtractionMode extraction = ExtractionMode::Cog;
    int radius = 1;            // IDS spread radius, in cells
    long long height = 1;      // IDS stamp height
    long long threshold = 1;   // binarization threshold
    int thicken_passes = 1;
    int gap_threshold = -1;    // negative: use the structuring-element radius
    int max_passes = 0;        // 0: width + height
    OctetPair octets = OctetPair::standard();
};

// One single-input stage: projected plane, diffused plane, extracted path.
struct SisoStage {
    DataPlane raw;
    DataPlane diffused;
    NarrowPath path;
};

SisoStage run_siso(const Dataset& dataset, int dim_index, const FitConfig& config);

// One narrow path per input dimension; prediction recombines the per-
// dimension path values as a confidence-weighted mean.
class MisoModel {
public:
    explicit MisoModel(std::vector<NarrowPath> paths);

    int input_dim() const { return static_cast<int>(paths_.size()); }
    const NarrowPath& path(int dim) const { return paths_[static_cast<size_t>(dim)]; }
    double confidence(int dim) const { return paths_[static_cast<size_t>(dim)].confidence(); }

    // Inputs outside the trained ranges are clamped. Columns without
    // delegates fall back to the nearest nonempty column. In multi-branch
    // columns the branch nearest the previous dimension's value wins; ties
    // and the first dimension take the lowest branch index.
    double predict(std::span<const double> x) const;

private:
    std::vector<NarrowPath> paths_;
};

MisoModel fit(const Dataset& dataset, const FitConfig& config);

}  // namespace alm
