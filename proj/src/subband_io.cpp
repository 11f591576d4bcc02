#include "wavelift/subband_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

static_assert(std::endian::native == std::endian::little,
              "raw float64 payload assumes a little-endian host");

namespace wavelift {

std::string boundary_name(BoundaryMode mode) {
    return mode == BoundaryMode::periodic ? "periodic" : "symmetric";
}

std::optional<BoundaryMode> parse_boundary(const std::string& s) {
    if (s == "periodic") return BoundaryMode::periodic;
    if (s == "symmetric") return BoundaryMode::symmetric;
    return std::nullopt;
}

namespace {

constexpr const char* kMagic = "WAVELIFT-SUBBANDS 1";

void write_plane(std::ostream& out, const std::vector<double>& plane, int w, int h) {
    if (plane.size() != static_cast<std::size_t>(w) * h)
        throw std::runtime_error("subband plane has inconsistent dimensions");
    out.write(reinterpret_cast<const char*>(plane.data()),
              static_cast<std::streamsize>(plane.size() * sizeof(double)));
}

std::vector<double> read_plane(std::istream& in, int w, int h) {
    std::vector<double> plane(static_cast<std::size_t>(w) * h);
    in.read(reinterpret_cast<char*>(plane.data()),
            static_cast<std::streamsize>(plane.size() * sizeof(double)));
    if (static_cast<std::size_t>(in.gcount()) != plane.size() * sizeof(double))
        throw std::runtime_error("malformed subband file: truncated payload");
    return plane;
}

std::string expect_line(std::istream& in, const std::string& key) {
    std::string line;
    if (!std::getline(in, line) || line.rfind(key + " ", 0) != 0)
        throw std::runtime_error("malformed subband file: expected '" + key + "' line");
    return line.substr(key.size() + 1);
}

}  // namespace

void write_subbands(const std::string& path, const SubbandHeader& header,
                    const Pyramid& pyramid) {
    if (static_cast<int>(pyramid.details.size()) != header.levels)
        throw std::runtime_error("pyramid level count does not match header");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");

    out << kMagic << "\n";
    out << "wavelet " << header.wavelet << "\n";
    out << "scheme " << header.scheme << "\n";
    out << "levels " << header.levels << "\n";
    out << "boundary " << boundary_name(header.boundary) << "\n";
    out << "scaling " << (header.scaling ? 1 : 0) << "\n";
    out << "image " << header.image_w << " " << header.image_h << "\n";
    for (int i = 0; i < header.levels; ++i)
        out << "level " << i + 1 << " " << pyramid.details[i].w << " "
            << pyramid.details[i].h << "\n";
    out << "data\n";

    for (int i = 0; i < header.levels; ++i) {
        const PyramidLevel& lvl = pyramid.details[i];
        if (i == header.levels - 1) {
            if (pyramid.ll_w != lvl.w || pyramid.ll_h != lvl.h)
                throw std::runtime_error("coarsest LL plane has inconsistent dimensions");
            write_plane(out, pyramid.ll, lvl.w, lvl.h);
        }
        write_plane(out, lvl.hl, lvl.w, lvl.h);
        write_plane(out, lvl.lh, lvl.w, lvl.h);
        write_plane(out, lvl.hh, lvl.w, lvl.h);
    }
    if (!out) throw std::runtime_error("failed writing " + path);
}

std::pair<SubbandHeader, Pyramid> read_subbands(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);

    std::string line;
    if (!std::getline(in, line) || line != kMagic)
        throw std::runtime_error("malformed subband file: bad magic");

    SubbandHeader header;
    header.wavelet = expect_line(in, "wavelet");
    header.scheme = expect_line(in, "scheme");
    header.levels = std::stoi(expect_line(in, "levels"));
    if (header.levels < 1) throw std::runtime_error("malformed subband file: bad levels");
    const auto boundary = parse_boundary(expect_line(in, "boundary"));
    if (!boundary) throw std::runtime_error("malformed subband file: bad boundary");
    header.boundary = *boundary;
    header.scaling = std::stoi(expect_line(in, "scaling")) != 0;
    {
        std::istringstream dims(expect_line(in, "image"));
        if (!(dims >> header.image_w >> header.image_h))
            throw std::runtime_error("malformed subband file: bad image line");
    }

    Pyramid pyramid;
    for (int i = 0; i < header.levels; ++i) {
        std::istringstream lvl(expect_line(in, "level"));
        int index = 0;
        PyramidLevel detail;
        if (!(lvl >> index >> detail.w >> detail.h) || index != i + 1 || detail.w <= 0 ||
            detail.h <= 0)
            throw std::runtime_error("malformed subband file: bad level line");
        pyramid.details.push_back(std::move(detail));
    }
    if (!std::getline(in, line) || line != "data")
        throw std::runtime_error("malformed subband file: missing data marker");

    for (int i = 0; i < header.levels; ++i) {
        PyramidLevel& lvl = pyramid.details[i];
        if (i == header.levels - 1) {
            pyramid.ll_w = lvl.w;
            pyramid.ll_h = lvl.h;
            pyramid.ll = read_plane(in, lvl.w, lvl.h);
        }
        lvl.hl = read_plane(in, lvl.w, lvl.h);
        lvl.lh = read_plane(in, lvl.w, lvl.h);
        lvl.hh = read_plane(in, lvl.w, lvl.h);
    }
    return {std::move(header), std::move(pyramid)};
}

}  // namespace wavelift
