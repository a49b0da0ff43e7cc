#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace alm {

enum class MaskCell : uint8_t { Foreground, Background, DontCare };

// Square tri-valued structuring element. Foreground cells must overlay 1s,
// background cells must overlay 0s, don't-care cells are unconstrained.
// The anchor is the cell aligned with the output position; by default the
// center (floor(n/2), floor(n/2)).
class TriValuedMask {
public:
    explicit TriValuedMask(int size, MaskCell fill = MaskCell::DontCare);

    // Builds from rows of '1' (foreground), '0' (background), '*' (don't care).
    static TriValuedMask from_rows(const std::vector<std::string>& rows);

    int size() const { return size_; }
    int anchor_row() const { return anchor_row_; }
    int anchor_col() const { return anchor_col_; }
    void set_anchor(int row, int col);

    MaskCell at(int row, int col) const { return cells_[static_cast<size_t>(row) * size_ + col]; }
    void set(int row, int col, MaskCell value) {
        cells_[static_cast<size_t>(row) * size_ + col] = value;
    }

    std::vector<std::string> rows() const;

    bool operator==(const TriValuedMask&) const = default;

private:
    int size_ = 0;
    int anchor_row_ = 0;
    int anchor_col_ = 0;
    std::vector<MaskCell> cells_;
};

// Foreground and background interchanged, don't-care and anchor preserved.
TriValuedMask complement_mask(const TriValuedMask& mask);

// Rotates the mask by 45 degrees clockwise: every concentric ring shifts by
// one eighth of its circumference. Defined for odd sizes only.
TriValuedMask rotate45(const TriValuedMask& mask);

// Ordered family of 8 structuring elements applied in sequence.
class MaskOctet {
public:
    explicit MaskOctet(std::vector<TriValuedMask> masks);

    // base plus its seven successive 45-degree rotations.
    static MaskOctet from_base(const TriValuedMask& base);

    // The textbook 3x3 thinning sequence: background along the top row,
    // foreground along the bottom, rotated clockwise.
    static const MaskOctet& standard_thinning();
    // The thinning sequence with ones and zeros interchanged.
    static const MaskOctet& standard_thickening();

    MaskOctet complemented() const;

    const TriValuedMask& operator[](size_t i) const { return masks_[i]; }
    size_t size() const { return masks_.size(); }
    auto begin() const { return masks_.begin(); }
    auto end() const { return masks_.end(); }

private:
    std::vector<TriValuedMask> masks_;
};

struct OctetPair {
    MaskOctet thinning;
    MaskOctet thickening;

    static OctetPair standard();
    // Octet loaded from a file serves as the thinning family; thickening is
    // its complement.
    static OctetPair from_thinning(MaskOctet octet);
};

// Mask file format: one mask per block, rows of '1'/'0'/'*', blocks separated
// by blank lines.
std::vector<TriValuedMask> parse_masks(std::istream& in);
MaskOctet load_octet(const std::filesystem::path& path);
void write_masks(std::ostream& out, const std::vector<TriValuedMask>& masks);
void write_octet(const std::filesystem::path& path, const MaskOctet& octet);

}  // namespace alm
