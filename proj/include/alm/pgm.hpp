#pragma once

#include <filesystem>
#include <vector>

#include "alm/binary_image.hpp"

namespace alm {

// Plain (P2) PGM. Values are row-major with row 0 at the top.
struct PgmData {
    int width = 0;
    int height = 0;
    long long maxval = 1;
    std::vector<long long> values;
};

PgmData read_pgm(const std::filesystem::path& path);
void write_pgm(const std::filesystem::path& path, const PgmData& data);

// BinaryImage round-trip uses maxval 1.
void write_pgm(const std::filesystem::path& path, const BinaryImage& img);
BinaryImage read_pgm_binary(const std::filesystem::path& path);

}  // namespace alm
