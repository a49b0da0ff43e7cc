#pragma once

#include <filesystem>
#include <vector>

namespace alm {

struct Sample {
    std::vector<double> inputs;
    double output = 0.0;
};

// Multi-input single-output sample set. All samples share input_dim and all
// values are finite.
class Dataset {
public:
    explicit Dataset(int input_dim);

    void add(std::vector<double> inputs, double output);

    int input_dim() const { return input_dim_; }
    size_t size() const { return samples_.size(); }
    bool empty() const { return samples_.empty(); }
    const Sample& operator[](size_t i) const { return samples_[i]; }
    auto begin() const { return samples_.begin(); }
    auto end() const { return samples_.end(); }

private:
    int input_dim_ = 0;
    std::vector<Sample> samples_;
};

// CSV with header x1..xd,y; one sample per row.
Dataset read_dataset_csv(const std::filesystem::path& path);
void write_dataset_csv(const std::filesystem::path& path, const Dataset& dataset);

}  // namespace alm
