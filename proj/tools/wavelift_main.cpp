// wavelift command-line tool: verification reports, cost tables, image
// transforms, round-trips, parallel-execution simulation, micro-benchmarks.
//
// Exit codes: 0 success; 1 usage/precondition error; 2 data or verification
// failure; 3 race hazards detected.

#include "CLI11.hpp"

#include "wavelift/parsim.hpp"
#include "wavelift/pgm.hpp"
#include "wavelift/schemes.hpp"
#include "wavelift/subband_io.hpp"
#include "wavelift/transform.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <string>
#include <vector>

namespace {

using namespace wavelift;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;
constexpr int kExitHazards = 3;

SchemeKind scheme_or_throw(const std::string& name) {
    const auto kind = parse_scheme(name);
    if (!kind) throw std::invalid_argument("unknown scheme: " + name);
    return *kind;
}

BoundaryMode boundary_or_throw(const std::string& name) {
    const auto mode = parse_boundary(name);
    if (!mode) throw std::invalid_argument("unknown boundary mode: " + name);
    return *mode;
}

Buffering buffering_or_throw(const std::string& name) {
    const auto b = parse_buffering(name);
    if (!b) throw std::invalid_argument("unknown buffering mode: " + name);
    return *b;
}

std::pair<int, int> parse_dims(const std::string& s, const char* what) {
    const auto x = s.find('x');
    try {
        if (x != std::string::npos) {
            const int w = std::stoi(s.substr(0, x));
            const int h = std::stoi(s.substr(x + 1));
            if (w > 0 && h > 0) return {w, h};
        }
    } catch (...) {
    }
    throw std::invalid_argument(std::string("bad ") + what + " '" + s + "', expected WxH");
}

Image load_even_image(const std::string& path, bool pad) {
    const PgmImage pgm = read_pgm(path);
    Image img = to_image(pgm);
    if (img.width % 2 == 0 && img.height % 2 == 0) return img;
    if (!pad)
        throw std::invalid_argument("image dimensions are odd (" + std::to_string(img.width) +
                                    "x" + std::to_string(img.height) +
                                    "); rerun with --pad or supply even dimensions");
    // Whole-point symmetric padding by one mirrored row/column.
    const int w = img.width + img.width % 2;
    const int h = img.height + img.height % 2;
    Image padded(w, h);
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c)
            padded.at(r, c) = img.at(resolve_index(r, img.height, BoundaryMode::symmetric),
                                     resolve_index(c, img.width, BoundaryMode::symmetric));
    return padded;
}

void check_divisible(const Image& img, int levels) {
    if (levels < 1) throw std::invalid_argument("levels must be >= 1");
    const int div = 1 << levels;
    if (img.width % div != 0 || img.height % div != 0)
        throw std::invalid_argument("image dimensions " + std::to_string(img.width) + "x" +
                                    std::to_string(img.height) + " are not divisible by 2^" +
                                    std::to_string(levels));
}

int cmd_verify(const std::string& wavelet_filter, const std::string& scheme_filter) {
    std::vector<std::string> wavelet_names = {"cdf53", "cdf97", "dd137"};
    if (!wavelet_filter.empty()) {
        get_wavelet(wavelet_filter);  // validates; throws on unknown names
        wavelet_names = {wavelet_filter};
    }
    std::vector<SchemeKind> kinds = all_scheme_kinds();
    if (!scheme_filter.empty()) kinds = {scheme_or_throw(scheme_filter)};

    bool all_ok = true;
    for (const std::string& wname : wavelet_names) {
        const WaveletSpec wavelet = get_wavelet(wname);
        const StepMatrix reference = scheme_reference_matrix(wavelet);
        for (const SchemeKind kind : kinds) {
            const Scheme scheme = build_scheme(kind, wavelet);
            const IdentityReport rep =
                verify_scheme_identity(scheme_step_matrices(scheme), reference, 1e-12);
            all_ok = all_ok && rep.match;
            std::printf("%-6s %-16s %s", wname.c_str(), scheme_name(kind).c_str(),
                        rep.match ? "PASS" : "FAIL");
            if (wavelet.mode() == CoeffMode::exact)
                std::printf(" (exact)\n");
            else
                std::printf(" (max dev %.3g)\n", rep.max_deviation);
            if (!rep.match) std::printf("       %s\n", rep.detail.c_str());
        }
    }
    return all_ok ? kExitOk : kExitFailure;
}

int cmd_report(const std::string& format) {
    const std::vector<WaveletSpec> wavelets = {get_wavelet("cdf53"), get_wavelet("cdf97"),
                                               get_wavelet("dd137")};
    const std::vector<CostReport> rows = cost_table(wavelets, all_scheme_kinds());
    std::vector<std::string> footnotes;
    if (format == "csv") {
        std::printf("wavelet,scheme,barriers,macs\n");
        for (const CostReport& r : rows) {
            std::printf("%s,%s,%d,%ld\n", r.wavelet.c_str(), scheme_name(r.kind).c_str(),
                        r.barriers, r.macs);
            if (!r.note.empty())
                footnotes.push_back(r.wavelet + "/" + scheme_name(r.kind) + ": " + r.note);
        }
        for (const std::string& f : footnotes) std::printf("# %s\n", f.c_str());
    } else {
        std::printf("| wavelet | scheme | barriers | MACs |\n");
        std::printf("|---------|--------|---------:|-----:|\n");
        for (const CostReport& r : rows) {
            std::string macs = std::to_string(r.macs);
            if (!r.note.empty()) {
                macs += "*";
                footnotes.push_back(r.wavelet + "/" + scheme_name(r.kind) + ": " + r.note);
            }
            std::printf("| %s | %s | %d | %s |\n", r.wavelet.c_str(),
                        scheme_name(r.kind).c_str(), r.barriers, macs.c_str());
        }
        for (const std::string& f : footnotes) std::printf("\n* %s\n", f.c_str());
    }
    return kExitOk;
}

int cmd_transform(const std::string& in, const std::string& out, const std::string& wavelet,
                  const std::string& scheme, int levels, const std::string& boundary,
                  bool scaling, bool pad) {
    const WaveletSpec w = get_wavelet(wavelet);
    const SchemeKind kind = scheme_or_throw(scheme);
    const BoundaryMode bmode = boundary_or_throw(boundary);
    const Image img = load_even_image(in, pad);
    check_divisible(img, levels);

    const Scheme s = build_scheme(kind, w);
    const Pyramid pyramid = multi_level_forward(img, s, levels, bmode, scaling);
    SubbandHeader header;
    header.wavelet = w.name;
    header.scheme = scheme_name(kind);
    header.levels = levels;
    header.boundary = bmode;
    header.scaling = scaling;
    header.image_w = img.width;
    header.image_h = img.height;
    write_subbands(out, header, pyramid);
    std::printf("wrote %s: %d level(s), coarsest %dx%d, %s/%s, %s boundary\n", out.c_str(),
                levels, pyramid.ll_w, pyramid.ll_h, w.name.c_str(),
                scheme_name(kind).c_str(), boundary_name(bmode).c_str());
    return kExitOk;
}

int cmd_roundtrip(const std::string& in, const std::string& wavelet,
                  const std::string& scheme, int levels, const std::string& boundary) {
    const WaveletSpec w = get_wavelet(wavelet);
    const SchemeKind kind = scheme_or_throw(scheme);
    const BoundaryMode bmode = boundary_or_throw(boundary);
    const Image img = load_even_image(in, /*pad=*/false);
    check_divisible(img, levels);

    if (bmode == BoundaryMode::symmetric && kind != SchemeKind::Sweldens)
        std::fprintf(stderr,
                     "note: %s under the symmetric boundary matches the separable "
                     "factorization only away from image borders; reconstruction is "
                     "exact for --scheme sweldens or --boundary periodic\n",
                     scheme_name(kind).c_str());

    const Scheme s = build_scheme(kind, w);
    const Pyramid pyramid = multi_level_forward(img, s, levels, bmode, /*apply_scaling=*/false);
    const Image rec = multi_level_inverse(pyramid, w, bmode, /*undo_scaling=*/false);
    double max_err = 0.0;
    for (std::size_t i = 0; i < img.samples.size(); ++i)
        max_err = std::max(max_err, std::abs(img.samples[i] - rec.samples[i]));
    const bool ok = max_err <= 1e-6;
    std::printf("roundtrip %s/%s levels=%d %s: max abs error %.3g (tolerance 1e-06) %s\n",
                w.name.c_str(), scheme_name(kind).c_str(), levels,
                boundary_name(bmode).c_str(), max_err, ok ? "OK" : "FAIL");
    return ok ? kExitOk : kExitFailure;
}

int cmd_simulate(const std::string& in, const std::string& wavelet, const std::string& scheme,
                 const std::string& tile, const std::string& buffering, int break_n, int halo,
                 const std::string& boundary, const std::string& json_path) {
    const WaveletSpec w = get_wavelet(wavelet);
    const SchemeKind kind = scheme_or_throw(scheme);
    const BoundaryMode bmode = boundary_or_throw(boundary);
    const auto [tw, th] = parse_dims(tile, "tile size");

    TileConfig cfg;
    cfg.tile_w = tw;
    cfg.tile_h = th;
    cfg.halo = halo;
    cfg.buffering = buffering_or_throw(buffering);

    Scheme s = build_scheme(kind, w);
    if (break_n != 0) s = break_barrier(s, break_n);

    const Image img = load_even_image(in, /*pad=*/false);
    const auto [grid, trace] = simulate(img, s, cfg, bmode);
    const std::string json = trace.to_json();
    std::printf("%s\n", json.c_str());
    if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) throw std::runtime_error("cannot open " + json_path + " for writing");
        f << json << "\n";
    }
    return trace.race_free() ? kExitOk : kExitHazards;
}

int cmd_bench(const std::string& size, const std::string& wavelet, const std::string& scheme,
              int reps, const std::string& format) {
    if (reps < 1) throw std::invalid_argument("reps must be >= 1");
    const WaveletSpec w = get_wavelet(wavelet);
    const SchemeKind kind = scheme_or_throw(scheme);
    const auto [bw, bh] = parse_dims(size, "size");
    if (bw % 2 != 0 || bh % 2 != 0)
        throw std::invalid_argument("bench size must have even dimensions");

    Image img(bw, bh);
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (double& v : img.samples) v = dist(rng);

    const Scheme s = build_scheme(kind, w);
    std::vector<double> seconds;
    double checksum = 0.0;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        const QuadGrid g = forward(img, s, BoundaryMode::periodic, /*apply_scaling=*/false);
        const auto t1 = std::chrono::steady_clock::now();
        checksum += g.at(LL, 0, 0);
        seconds.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    if (!std::isfinite(checksum)) return kExitFailure;
    std::sort(seconds.begin(), seconds.end());
    const std::size_t n = seconds.size();
    const double median = (seconds[(n - 1) / 2] + seconds[n / 2]) / 2.0;
    const double mbps = static_cast<double>(bw) * bh * 8.0 / median / 1e6;
    if (format == "csv")
        std::printf("scheme,wavelet,size,mbps\n%s,%s,%dx%d,%.2f\n", scheme_name(kind).c_str(),
                    w.name.c_str(), bw, bh, mbps);
    else
        std::printf("%s/%s %dx%d: median %.2f MB/s over %d rep(s)\n", scheme_name(kind).c_str(),
                    w.name.c_str(), bw, bh, mbps, reps);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wavelift: 2-D lifting-scheme wavelet transforms as verified polyphase step sequences"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand(
        "verify", "Check every scheme's step product against the full polyphase matrix");
    std::string v_wavelet, v_scheme;
    verify->add_option("--wavelet", v_wavelet, "Restrict to one wavelet (cdf53|cdf97|dd137)");
    verify->add_option("--scheme", v_scheme, "Restrict to one scheme kind");

    auto* report =
        app.add_subcommand("report", "Print the cost table: barriers and MACs per scheme/wavelet");
    std::string r_format = "markdown";
    report->add_option("--format", r_format, "Output format (default markdown)")
        ->check(CLI::IsMember({"csv", "markdown"}));

    auto* transform = app.add_subcommand("transform", "Transform a PGM image to a subband file");
    std::string t_in, t_out, t_wavelet = "cdf53", t_scheme = "sweldens",
                t_boundary = "periodic";
    int t_levels = 1;
    bool t_scaling = false, t_pad = false;
    transform->add_option("input", t_in, "Input PGM (binary P5)")->required();
    transform->add_option("output", t_out, "Output subband file")->required();
    transform->add_option("--wavelet", t_wavelet, "Wavelet (default cdf53)");
    transform->add_option("--scheme", t_scheme, "Scheme kind (default sweldens)");
    transform->add_option("--levels", t_levels, "Decomposition levels (default 1)");
    transform->add_option("--boundary", t_boundary, "periodic|symmetric (default periodic)");
    transform->add_flag("--scaling", t_scaling, "Apply the zeta scaling step per level");
    transform->add_flag("--pad", t_pad, "Symmetric-pad odd dimensions to even");

    auto* roundtrip =
        app.add_subcommand("roundtrip", "Forward+inverse a PGM image and report the max error");
    std::string rt_in, rt_wavelet = "cdf53", rt_scheme = "sweldens", rt_boundary = "periodic";
    int rt_levels = 1;
    roundtrip->add_option("input", rt_in, "Input PGM (binary P5)")->required();
    roundtrip->add_option("--wavelet", rt_wavelet, "Wavelet (default cdf53)");
    roundtrip->add_option("--scheme", rt_scheme, "Scheme kind (default sweldens)");
    roundtrip->add_option("--levels", rt_levels, "Decomposition levels (default 1)");
    roundtrip->add_option("--boundary", rt_boundary, "periodic|symmetric (default periodic)");

    auto* simulate = app.add_subcommand(
        "simulate", "Run the tiled work-group execution simulator and print its trace as JSON");
    std::string s_in, s_wavelet = "cdf53", s_scheme = "sweldens", s_tile = "8x8",
                s_buffering = "double", s_boundary = "periodic", s_json;
    int s_break = 0, s_halo = -1;
    simulate->add_option("input", s_in, "Input PGM (binary P5)")->required();
    simulate->add_option("--wavelet", s_wavelet, "Wavelet (default cdf53)");
    simulate->add_option("--scheme", s_scheme, "Scheme kind (default sweldens)");
    simulate->add_option("--tile", s_tile, "Core tile size WxH in component-grid units");
    simulate->add_option("--buffering", s_buffering, "single|double (default double)");
    simulate->add_option("--break-barrier", s_break,
                         "Clear the Nth barrier flag (negative control, 1-based)");
    simulate->add_option("--halo", s_halo, "Halo ring width (default: computed requirement)");
    simulate->add_option("--boundary", s_boundary, "periodic|symmetric (default periodic)");
    simulate->add_option("--json", s_json, "Also write the trace JSON to this file");

    auto* bench = app.add_subcommand("bench", "Time the forward transform on random data");
    std::string b_size = "1024x1024", b_wavelet = "cdf53", b_scheme = "sweldens",
                b_format = "text";
    int b_reps = 5;
    bench->add_option("--size", b_size, "Image size WxH (default 1024x1024)");
    bench->add_option("--wavelet", b_wavelet, "Wavelet (default cdf53)");
    bench->add_option("--scheme", b_scheme, "Scheme kind (default sweldens)");
    bench->add_option("--reps", b_reps, "Repetitions (median is reported, default 5)");
    bench->add_option("--format", b_format, "text|csv (default text)")
        ->check(CLI::IsMember({"text", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(v_wavelet, v_scheme);
        if (report->parsed()) return cmd_report(r_format);
        if (transform->parsed())
            return cmd_transform(t_in, t_out, t_wavelet, t_scheme, t_levels, t_boundary,
                                 t_scaling, t_pad);
        if (roundtrip->parsed())
            return cmd_roundtrip(rt_in, rt_wavelet, rt_scheme, rt_levels, rt_boundary);
        if (simulate->parsed())
            return cmd_simulate(s_in, s_wavelet, s_scheme, s_tile, s_buffering, s_break, s_halo,
                                s_boundary, s_json);
        if (bench->parsed())
            return cmd_bench(b_size, b_wavelet, b_scheme, b_reps, b_format);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitFailure;
    }
    return kExitUsage;
}
