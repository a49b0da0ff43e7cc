#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace alm {

// Rectangular 0/1 grid. Row 0 is the top row, matching the PGM files it
// round-trips through.
class BinaryImage {
public:
    BinaryImage(int width, int height, uint8_t fill = 0);

    // Builds from rows of '0'/'1' characters; handy in tests.
    static BinaryImage from_rows(const std::vector<std::string>& rows);

    int width() const { return width_; }
    int height() const { return height_; }

    uint8_t at(int row, int col) const { return cells_[static_cast<size_t>(row) * width_ + col]; }
    void set(int row, int col, uint8_t value) {
        cells_[static_cast<size_t>(row) * width_ + col] = value ? 1 : 0;
    }
    bool in_bounds(int row, int col) const {
        return row >= 0 && row < height_ && col >= 0 && col < width_;
    }

    int foreground_count() const;

    // True when every foreground cell of *this is foreground in other.
    bool subset_of(const BinaryImage& other) const;

    bool operator==(const BinaryImage&) const = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<uint8_t> cells_;
};

BinaryImage complement(const BinaryImage& img);

}  // namespace alm
