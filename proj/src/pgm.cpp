#include "wavelift/pgm.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace wavelift {

namespace {

// Reads the next header token, skipping whitespace and '#' comments.
std::string next_token(std::istream& in) {
    std::string tok;
    int ch;
    while ((ch = in.get()) != EOF) {
        if (ch == '#') {
            while ((ch = in.get()) != EOF && ch != '\n') {
            }
            continue;
        }
        if (std::isspace(ch)) {
            if (!tok.empty()) return tok;
            continue;
        }
        tok.push_back(static_cast<char>(ch));
    }
    return tok;
}

int parse_positive(const std::string& tok, const char* what) {
    try {
        const long v = std::stol(tok);
        if (v <= 0 || v > 1 << 20) throw std::out_of_range(what);
        return static_cast<int>(v);
    } catch (...) {
        throw std::runtime_error(std::string("malformed PGM: bad ") + what);
    }
}

}  // namespace

PgmImage read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    if (next_token(in) != "P5") throw std::runtime_error("malformed PGM: not binary P5");

    PgmImage img;
    img.width = parse_positive(next_token(in), "width");
    img.height = parse_positive(next_token(in), "height");
    img.maxval = parse_positive(next_token(in), "maxval");
    if (img.maxval > 65535) throw std::runtime_error("malformed PGM: maxval > 65535");
    // The single whitespace byte after maxval was consumed by next_token.

    const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
    const int bytes = img.maxval < 256 ? 1 : 2;
    std::vector<unsigned char> raw(n * bytes);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (static_cast<std::size_t>(in.gcount()) != raw.size())
        throw std::runtime_error("malformed PGM: truncated pixel data");

    img.pixels.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        img.pixels[i] = bytes == 1
                            ? raw[i]
                            : static_cast<std::uint16_t>((raw[2 * i] << 8) | raw[2 * i + 1]);
        if (img.pixels[i] > img.maxval)
            throw std::runtime_error("malformed PGM: sample exceeds maxval");
    }
    return img;
}

void write_pgm(const std::string& path, const PgmImage& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << "P5\n" << img.width << " " << img.height << "\n" << img.maxval << "\n";
    const int bytes = img.maxval < 256 ? 1 : 2;
    for (const std::uint16_t v : img.pixels) {
        if (bytes == 2) out.put(static_cast<char>(v >> 8));
        out.put(static_cast<char>(v & 0xff));
    }
    if (!out) throw std::runtime_error("failed writing " + path);
}

Image to_image(const PgmImage& pgm) {
    Image img(pgm.width, pgm.height);
    const double scale = 1.0 / (pgm.maxval + 1.0);
    for (std::size_t i = 0; i < pgm.pixels.size(); ++i)
        img.samples[i] = pgm.pixels[i] * scale;
    return img;
}

PgmImage from_image(const Image& img, int maxval) {
    PgmImage pgm;
    pgm.width = img.width;
    pgm.height = img.height;
    pgm.maxval = maxval;
    pgm.pixels.resize(img.samples.size());
    for (std::size_t i = 0; i < img.samples.size(); ++i) {
        const double v = std::lround(img.samples[i] * (maxval + 1.0));
        pgm.pixels[i] = static_cast<std::uint16_t>(std::min<double>(std::max(v, 0.0), maxval));
    }
    return pgm;
}

}  // namespace wavelift
