#include "alm/mask.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "alm/errors.hpp"

namespace alm {

namespace {

char cell_char(MaskCell cell) {
    switch (cell) {
        case MaskCell::Foreground: return '1';
        case MaskCell::Background: return '0';
        case MaskCell::DontCare: return '*';
    }
    return '?';
}

MaskCell cell_from_char(char ch) {
    switch (ch) {
        case '1': return MaskCell::Foreground;
        case '0': return MaskCell::Background;
        case '*': return MaskCell::DontCare;
        default: throw ParseError(std::string("mask cell must be '1', '0' or '*', got '") + ch + "'");
    }
}

}  // namespace

TriValuedMask::TriValuedMask(int size, MaskCell fill) : size_(size) {
    if (size < 1) throw Error("TriValuedMask: size must be >= 1");
    anchor_row_ = size / 2;
    anchor_col_ = size / 2;
    cells_.assign(static_cast<size_t>(size) * size, fill);
}

TriValuedMask TriValuedMask::from_rows(const std::vector<std::string>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw ParseError("mask block is empty");
    TriValuedMask mask(n);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(rows[r].size()) != n)
            throw ParseError("mask block is not square");
        for (int c = 0; c < n; ++c) mask.set(r, c, cell_from_char(rows[r][c]));
    }
    return mask;
}

void TriValuedMask::set_anchor(int row, int col) {
    if (row < 0 || row >= size_ || col < 0 || col >= size_)
        throw Error("TriValuedMask: anchor out of bounds");
    anchor_row_ = row;
    anchor_col_ = col;
}

std::vector<std::string> TriValuedMask::rows() const {
    std::vector<std::string> out(static_cast<size_t>(size_));
    for (int r = 0; r < size_; ++r) {
        out[r].resize(static_cast<size_t>(size_));
        for (int c = 0; c < size_; ++c) out[r][c] = cell_char(at(r, c));
    }
    return out;
}

TriValuedMask complement_mask(const TriValuedMask& mask) {
    TriValuedMask out = mask;
    for (int r = 0; r < mask.size(); ++r) {
        for (int c = 0; c < mask.size(); ++c) {
            switch (mask.at(r, c)) {
                case MaskCell::Foreground: out.set(r, c, MaskCell::Background); break;
                case MaskCell::Background: out.set(r, c, MaskCell::Foreground); break;
                case MaskCell::DontCare: break;
            }
        }
    }
    return out;
}

TriValuedMask rotate45(const TriValuedMask& mask) {
    const int n = mask.size();
    if (n % 2 == 0)
        throw Error("rotate45: undefined for even-sized masks");
    TriValuedMask out = mask;
    // Walk each concentric ring clockwise and shift its cells by one eighth
    // of the ring length.
    for (int k = 0; 2 * k + 1 < n; ++k) {
        const int side = n - 2 * k;
        std::vector<std::pair<int, int>> ring;
        ring.reserve(static_cast<size_t>(4 * (side - 1)));
        for (int c = k; c < k + side; ++c) ring.emplace_back(k, c);
        for (int r = k + 1; r < k + side; ++r) ring.emplace_back(r, k + side - 1);
        for (int c = k + side - 2; c >= k; --c) ring.emplace_back(k + side - 1, c);
        for (int r = k + side - 2; r > k; --r) ring.emplace_back(r, k);
        const size_t len = ring.size();
        const size_t shift = static_cast<size_t>((side - 1) / 2);
        for (size_t i = 0; i < len; ++i) {
            const auto [sr, sc] = ring[i];
            const auto [dr, dc] = ring[(i + shift) % len];
            out.set(dr, dc, mask.at(sr, sc));
        }
    }
    return out;
}

MaskOctet::MaskOctet(std::vector<TriValuedMask> masks) : masks_(std::move(masks)) {
    if (masks_.size() != 8) throw Error("MaskOctet: exactly 8 masks required");
    for (const TriValuedMask& m : masks_)
        if (m.size() != masks_.front().size())
            throw Error("MaskOctet: masks must share one size");
    // Rotation-family invariant; only verifiable where rotate45 is defined.
    if (masks_.front().size() % 2 == 1) {
        for (size_t i = 1; i < masks_.size(); ++i)
            if (!(masks_[i] == rotate45(masks_[i - 1])))
                throw Error("MaskOctet: mask " + std::to_string(i) +
                            " is not the 45-degree rotation of its predecessor");
    }
}

MaskOctet MaskOctet::from_base(const TriValuedMask& base) {
    std::vector<TriValuedMask> masks;
    masks.reserve(8);
    masks.push_back(base);
    for (int i = 1; i < 8; ++i) masks.push_back(rotate45(masks.back()));
    return MaskOctet(std::move(masks));
}

const MaskOctet& MaskOctet::standard_thinning() {
    static const MaskOctet octet = from_base(TriValuedMask::from_rows({
        "000",
        "*1*",
        "111",
    }));
    return octet;
}

const MaskOctet& MaskOctet::standard_thickening() {
    static const MaskOctet octet = standard_thinning().complemented();
    return octet;
}

MaskOctet MaskOctet::complemented() const {
    std::vector<TriValuedMask> masks;
    masks.reserve(8);
    for (const TriValuedMask& m : masks_) masks.push_back(complement_mask(m));
    return MaskOctet(std::move(masks));
}

OctetPair OctetPair::standard() {
    return {MaskOctet::standard_thinning(), MaskOctet::standard_thickening()};
}

OctetPair OctetPair::from_thinning(MaskOctet octet) {
    MaskOctet thickening = octet.complemented();
    return {std::move(octet), std::move(thickening)};
}

std::vector<TriValuedMask> parse_masks(std::istream& in) {
    std::vector<TriValuedMask> masks;
    std::vector<std::string> block;
    std::string line;
    auto flush = [&] {
        if (!block.empty()) {
            masks.push_back(TriValuedMask::from_rows(block));
            block.clear();
        }
    };
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        // strip surrounding whitespace
        const size_t begin = line.find_first_not_of(" \t");
        if (begin == std::string::npos) {
            flush();
            continue;
        }
        const size_t end = line.find_last_not_of(" \t");
        block.push_back(line.substr(begin, end - begin + 1));
    }
    flush();
    return masks;
}

MaskOctet load_octet(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open octet file: " + path.string());
    std::vector<TriValuedMask> masks = parse_masks(in);
    if (masks.size() != 8)
        throw ParseError("octet file must contain exactly 8 mask blocks, found " +
                         std::to_string(masks.size()) + ": " + path.string());
    return MaskOctet(std::move(masks));
}

void write_masks(std::ostream& out, const std::vector<TriValuedMask>& masks) {
    for (size_t i = 0; i < masks.size(); ++i) {
        if (i) out << '\n';
        for (const std::string& row : masks[i].rows()) out << row << '\n';
    }
}

void write_octet(const std::filesystem::path& path, const MaskOctet& octet) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write octet file: " + path.string());
    write_masks(out, std::vector<TriValuedMask>(octet.begin(), octet.end()));
}

}  // namespace alm
