#pragma once

// Subband container: line-oriented ASCII header followed by raw
// little-endian IEEE-754 float64 planes, written so a round-trip reproduces
// every plane bit-exactly.
//
// Layout:
//   WAVELIFT-SUBBANDS 1
//   wavelet <name>
//   scheme <kind>
//   levels <L>
//   boundary <periodic|symmetric>
//   scaling <0|1>
//   image <width> <height>
//   level <i> <plane_w> <plane_h>     (one line per level, finest first)
//   data
//   <payload>
// The payload holds, per level in header order, the detail planes HL, LH,
// HH (row-major doubles); the coarsest level is preceded by its LL plane,
// i.e. its planes are LL, HL, LH, HH.

#include "wavelift/transform.hpp"

#include <optional>
#include <string>
#include <utility>

namespace wavelift {

struct SubbandHeader {
    std::string wavelet;
    std::string scheme;
    int levels = 1;
    BoundaryMode boundary = BoundaryMode::periodic;
    bool scaling = false;
    int image_w = 0;
    int image_h = 0;
};

// Both throw std::runtime_error on I/O failure or malformed content.
void write_subbands(const std::string& path, const SubbandHeader& header,
                    const Pyramid& pyramid);
std::pair<SubbandHeader, Pyramid> read_subbands(const std::string& path);

std::string boundary_name(BoundaryMode mode);                     // "periodic"/"symmetric"
std::optional<BoundaryMode> parse_boundary(const std::string&);   // inverse

}  // namespace wavelift
