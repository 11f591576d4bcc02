#pragma once

// Binary PGM (P5) reader/writer, 8- and 16-bit, and conversion to/from the
// float image type (pixels normalized to [0, 1) by value / (maxval + 1)).

#include "wavelift/transform.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wavelift {

struct PgmImage {
    int width = 0;
    int height = 0;
    int maxval = 255;  // < 256 selects 1-byte samples, else 2-byte big-endian
    std::vector<std::uint16_t> pixels;  // row-major
};

// Throws std::runtime_error on malformed or unreadable files.
PgmImage read_pgm(const std::string& path);
void write_pgm(const std::string& path, const PgmImage& img);

Image to_image(const PgmImage& pgm);

// Quantizes with rounding and clamps to [0, maxval].
PgmImage from_image(const Image& img, int maxval = 255);

}  // namespace wavelift
