#include "alm/binary_image.hpp"

#include <algorithm>

#include "alm/errors.hpp"

namespace alm {

BinaryImage::BinaryImage(int width, int height, uint8_t fill)
    : width_(width), height_(height) {
    if (width < 1 || height < 1)
        throw Error("BinaryImage: width and height must be >= 1");
    cells_.assign(static_cast<size_t>(width) * height, fill ? 1 : 0);
}

BinaryImage BinaryImage::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty() || rows.front().empty())
        throw Error("BinaryImage::from_rows: empty grid");
    BinaryImage img(static_cast<int>(rows.front().size()), static_cast<int>(rows.size()));
    for (int r = 0; r < img.height_; ++r) {
        if (static_cast<int>(rows[r].size()) != img.width_)
            throw Error("BinaryImage::from_rows: ragged rows");
        for (int c = 0; c < img.width_; ++c) {
            const char ch = rows[r][c];
            if (ch != '0' && ch != '1')
                throw Error("BinaryImage::from_rows: cells must be '0' or '1'");
            img.set(r, c, ch == '1');
        }
    }
    return img;
}

int BinaryImage::foreground_count() const {
    return static_cast<int>(std::count(cells_.begin(), cells_.end(), uint8_t{1}));
}

bool BinaryImage::subset_of(const BinaryImage& other) const {
    if (width_ != other.width_ || height_ != other.height_) return false;
    for (size_t i = 0; i < cells_.size(); ++i)
        if (cells_[i] && !other.cells_[i]) return false;
    return true;
}

BinaryImage complement(const BinaryImage& img) {
    BinaryImage out(img.width(), img.height());
    for (int r = 0; r < img.height(); ++r)
        for (int c = 0; c < img.width(); ++c)
            out.set(r, c, img.at(r, c) ? 0 : 1);
    return out;
}

}  // namespace alm
