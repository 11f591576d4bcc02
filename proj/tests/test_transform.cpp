#include "doctest.h"

#include "test_util.hpp"
#include "wavelift/transform.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace wavelift;
using namespace wavelift::testing;

namespace {

// Largest difference over the interior of the component planes, excluding a
// margin of `margin` component-grid cells on every side.
double interior_plane_diff(const QuadGrid& a, const QuadGrid& b, int margin) {
    double m = 0.0;
    for (int comp = 0; comp < 4; ++comp)
        for (int r = margin; r < a.h - margin; ++r)
            for (int c = margin; c < a.w - margin; ++c)
                m = std::max(m, std::abs(a.at(comp, r, c) - b.at(comp, r, c)));
    return m;
}

}  // namespace

TEST_CASE("resolve_index: periodic and whole-point mirror") {
    // Periodic wrap.
    CHECK(resolve_index(0, 4, BoundaryMode::periodic) == 0);
    CHECK(resolve_index(3, 4, BoundaryMode::periodic) == 3);
    CHECK(resolve_index(4, 4, BoundaryMode::periodic) == 0);
    CHECK(resolve_index(-1, 4, BoundaryMode::periodic) == 3);
    CHECK(resolve_index(-5, 4, BoundaryMode::periodic) == 3);
    CHECK(resolve_index(9, 4, BoundaryMode::periodic) == 1);

    // Whole-point mirror: -1 -> 1, n -> n-2, reflections iterate.
    CHECK(resolve_index(0, 4, BoundaryMode::symmetric) == 0);
    CHECK(resolve_index(-1, 4, BoundaryMode::symmetric) == 1);
    CHECK(resolve_index(-2, 4, BoundaryMode::symmetric) == 2);
    CHECK(resolve_index(4, 4, BoundaryMode::symmetric) == 2);
    CHECK(resolve_index(5, 4, BoundaryMode::symmetric) == 1);
    CHECK(resolve_index(6, 4, BoundaryMode::symmetric) == 0);
    CHECK(resolve_index(7, 4, BoundaryMode::symmetric) == 1);  // second reflection
    CHECK(resolve_index(-5, 4, BoundaryMode::symmetric) == 1);

    // Degenerate length-1 axis absorbs every index.
    CHECK(resolve_index(-3, 1, BoundaryMode::symmetric) == 0);
    CHECK(resolve_index(2, 1, BoundaryMode::symmetric) == 0);
    CHECK(resolve_index(-3, 1, BoundaryMode::periodic) == 0);
}

TEST_CASE("polyphase split and merge") {
    Image img(6, 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 6; ++c) img.at(r, c) = r * 10 + c;

    const QuadGrid q = polyphase_split(img);
    CHECK(q.w == 3);
    CHECK(q.h == 2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 3; ++c) {
            CHECK(q.at(LL, r, c) == img.at(2 * r, 2 * c));
            CHECK(q.at(HL, r, c) == img.at(2 * r, 2 * c + 1));
            CHECK(q.at(LH, r, c) == img.at(2 * r + 1, 2 * c));
            CHECK(q.at(HH, r, c) == img.at(2 * r + 1, 2 * c + 1));
        }

    const Image back = polyphase_merge(q);
    CHECK(back.width == img.width);
    CHECK(back.height == img.height);
    CHECK(max_image_diff(img, back) == 0.0);

    CHECK_THROWS_AS((void)polyphase_split(Image(5, 4)), std::invalid_argument);
    CHECK_THROWS_AS((void)polyphase_split(Image(4, 5)), std::invalid_argument);
}

TEST_CASE("horizontal predict annihilates constants") {
    const WaveletSpec w = get_wavelet("cdf53");
    const Scheme s = build_scheme(SchemeKind::Sweldens, w);
    Image img(8, 8);
    for (double& v : img.samples) v = 0.625;
    QuadGrid q = polyphase_split(img);
    for (BoundaryMode b : {BoundaryMode::periodic, BoundaryMode::symmetric}) {
        const QuadGrid out = apply_step(q, s.steps[0].matrix, b);  // T_H
        for (int r = 0; r < out.h; ++r)
            for (int c = 0; c < out.w; ++c) {
                CHECK(out.at(HL, r, c) == 0.0);  // P sums to -1
                CHECK(out.at(HH, r, c) == 0.0);
                CHECK(out.at(LL, r, c) == 0.625);
                CHECK(out.at(LH, r, c) == 0.625);
            }
    }
}

TEST_CASE("fused predict applied to an impulse hits the expected cells") {
    // T_P for cdf53: HL and LH take -1/2 at read offsets (0,0)/(0,+1) and
    // (0,0)/(+1,0); HH takes the tensor product 1/4 over the 2x2 of offsets.
    const WaveletSpec w = get_wavelet("cdf53");
    const Scheme mono = build_scheme(SchemeKind::Monolithic, w);
    REQUIRE(mono.steps[0].label == "T_P");

    QuadGrid q(8, 8);
    q.at(LL, 2, 2) = 1.0;
    const QuadGrid out = apply_step(q, mono.steps[0].matrix, BoundaryMode::periodic);

    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) {
            const bool hl = r == 2 && (c == 1 || c == 2);
            const bool lh = (r == 1 || r == 2) && c == 2;
            const bool hh = (r == 1 || r == 2) && (c == 1 || c == 2);
            CHECK(out.at(LL, r, c) == (r == 2 && c == 2 ? 1.0 : 0.0));
            CHECK(out.at(HL, r, c) == (hl ? -0.5 : 0.0));
            CHECK(out.at(LH, r, c) == (lh ? -0.5 : 0.0));
            CHECK(out.at(HH, r, c) == (hh ? 0.25 : 0.0));
        }
}

TEST_CASE("forward rejects odd dimensions; inverse checks plane sizes") {
    const Scheme s = build_scheme(SchemeKind::Sweldens, get_wavelet("cdf53"));
    CHECK_THROWS_AS((void)forward(Image(6, 5), s, BoundaryMode::periodic, false),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)forward(Image(0, 0), s, BoundaryMode::periodic, false),
                    std::invalid_argument);
}

TEST_CASE("all schemes produce identical planes under the periodic boundary") {
    for (const char* name : {"cdf53", "dd137"}) {
        CAPTURE(name);
        const WaveletSpec w = get_wavelet(name);
        const Image img = random_dyadic_image(32, 32, 101);
        const QuadGrid ref =
            forward(img, build_scheme(SchemeKind::Sweldens, w), BoundaryMode::periodic, false);
        for (SchemeKind kind : all_scheme_kinds()) {
            CAPTURE(scheme_name(kind));
            const QuadGrid got =
                forward(img, build_scheme(kind, w), BoundaryMode::periodic, false);
            // Dyadic coefficients on dyadic samples: double arithmetic is
            // exact, so every factorization agrees bit for bit.
            CHECK(max_plane_diff(ref, got) == 0.0);
        }
    }

    const WaveletSpec w97 = get_wavelet("cdf97");
    const Image img = random_image(32, 32, 102);
    const QuadGrid ref =
        forward(img, build_scheme(SchemeKind::Sweldens, w97), BoundaryMode::periodic, false);
    for (SchemeKind kind : all_scheme_kinds()) {
        CAPTURE(scheme_name(kind));
        const QuadGrid got =
            forward(img, build_scheme(kind, w97), BoundaryMode::periodic, false);
        CHECK(max_plane_diff(ref, got) <= 1e-9);
    }
}

TEST_CASE("all schemes agree on the interior under the symmetric boundary") {
    const int margin = 8;
    for (const char* name : {"cdf53", "dd137"}) {
        CAPTURE(name);
        const WaveletSpec w = get_wavelet(name);
        const Image img = random_dyadic_image(64, 64, 103);
        const QuadGrid ref =
            forward(img, build_scheme(SchemeKind::Sweldens, w), BoundaryMode::symmetric, false);
        for (SchemeKind kind : all_scheme_kinds()) {
            CAPTURE(scheme_name(kind));
            const QuadGrid got =
                forward(img, build_scheme(kind, w), BoundaryMode::symmetric, false);
            CHECK(interior_plane_diff(ref, got, margin) == 0.0);
        }
    }

    const WaveletSpec w97 = get_wavelet("cdf97");
    const Image img = random_image(64, 64, 104);
    const QuadGrid ref =
        forward(img, build_scheme(SchemeKind::Sweldens, w97), BoundaryMode::symmetric, false);
    for (SchemeKind kind : all_scheme_kinds()) {
        CAPTURE(scheme_name(kind));
        const QuadGrid got =
            forward(img, build_scheme(kind, w97), BoundaryMode::symmetric, false);
        CHECK(interior_plane_diff(ref, got, margin) <= 1e-9);
    }
}

TEST_CASE("forward is linear") {
    const WaveletSpec w = get_wavelet("cdf97");
    const Image x = random_image(16, 16, 105);
    const Image y = random_image(16, 16, 106);
    Image combo(16, 16);
    for (std::size_t i = 0; i < combo.samples.size(); ++i)
        combo.samples[i] = 2.5 * x.samples[i] - 0.75 * y.samples[i];

    for (SchemeKind kind :
         {SchemeKind::Sweldens, SchemeKind::Monolithic, SchemeKind::Convolution}) {
        for (BoundaryMode b : {BoundaryMode::periodic, BoundaryMode::symmetric}) {
            CAPTURE(scheme_name(kind));
            const Scheme s = build_scheme(kind, w);
            const QuadGrid fx = forward(x, s, b, false);
            const QuadGrid fy = forward(y, s, b, false);
            const QuadGrid fc = forward(combo, s, b, false);
            double dev = 0.0;
            for (int comp = 0; comp < 4; ++comp)
                for (std::size_t i = 0; i < fc.planes[comp].size(); ++i)
                    dev = std::max(dev, std::abs(fc.planes[comp][i] -
                                                 (2.5 * fx.planes[comp][i] -
                                                  0.75 * fy.planes[comp][i])));
            CHECK(dev <= 1e-12);
        }
    }
}

TEST_CASE("scaling multiplies LL by zeta^2 and divides HH") {
    const WaveletSpec w = get_wavelet("cdf97");
    const Scheme s = build_scheme(SchemeKind::Sweldens, w);
    const Image img = random_image(16, 16, 107);
    const QuadGrid plain = forward(img, s, BoundaryMode::periodic, false);
    const QuadGrid scaled = forward(img, s, BoundaryMode::periodic, true);
    const double z2 = w.zeta * w.zeta;
    for (int r = 0; r < plain.h; ++r)
        for (int c = 0; c < plain.w; ++c) {
            CHECK(scaled.at(LL, r, c) == doctest::Approx(plain.at(LL, r, c) * z2).epsilon(1e-14));
            CHECK(scaled.at(HH, r, c) == doctest::Approx(plain.at(HH, r, c) / z2).epsilon(1e-14));
            CHECK(scaled.at(HL, r, c) == plain.at(HL, r, c));
            CHECK(scaled.at(LH, r, c) == plain.at(LH, r, c));
        }
}

TEST_CASE("perfect reconstruction: separable scheme, both boundaries") {
    for (const char* name : {"cdf53", "cdf97", "dd137"}) {
        const WaveletSpec w = get_wavelet(name);
        const Scheme s = build_scheme(SchemeKind::Sweldens, w);
        for (BoundaryMode b : {BoundaryMode::periodic, BoundaryMode::symmetric}) {
            for (bool scaling : {false, true}) {
                CAPTURE(name);
                CAPTURE(scaling);
                const Image img = random_image(16, 16, 108);
                const QuadGrid q = forward(img, s, b, scaling);
                const Image rec = inverse(q, w, b, scaling);
                CHECK(max_image_diff(img, rec) <= 1e-9);
            }
        }
    }
}

TEST_CASE("perfect reconstruction: every scheme kind under the periodic boundary") {
    for (const char* name : {"cdf53", "cdf97", "dd137"}) {
        const WaveletSpec w = get_wavelet(name);
        const Image img = random_image(16, 16, 109);
        for (SchemeKind kind : all_scheme_kinds()) {
            CAPTURE(name);
            CAPTURE(scheme_name(kind));
            const QuadGrid q =
                forward(img, build_scheme(kind, w), BoundaryMode::periodic, false);
            const Image rec = inverse(q, w, BoundaryMode::periodic, false);
            CHECK(max_image_diff(img, rec) <= 1e-9);
        }
    }
}

TEST_CASE("convolution path equals the lifted transform on impulses") {
    const WaveletSpec w = get_wavelet("cdf53");
    const Scheme sw = build_scheme(SchemeKind::Sweldens, w);
    const Scheme conv = build_scheme(SchemeKind::Convolution, w);
    for (int pos : {0, 1, 5 * 16 + 7, 15 * 16 + 15}) {
        CAPTURE(pos);
        Image img(16, 16);
        img.samples[pos] = 1.0;
        const QuadGrid a = forward(img, sw, BoundaryMode::periodic, false);
        const QuadGrid b = forward(img, conv, BoundaryMode::periodic, false);
        CHECK(max_plane_diff(a, b) <= 1e-12);
    }
}

TEST_CASE("multi-level pyramid structure and reconstruction") {
    const WaveletSpec w = get_wavelet("cdf53");
    const Scheme s = build_scheme(SchemeKind::Sweldens, w);
    const Image img = random_dyadic_image(64, 32, 110);

    const Pyramid pyr = multi_level_forward(img, s, 3, BoundaryMode::periodic, false);
    REQUIRE(pyr.details.size() == 3);
    CHECK(pyr.details[0].w == 32);  // finest level first
    CHECK(pyr.details[0].h == 16);
    CHECK(pyr.details[1].w == 16);
    CHECK(pyr.details[1].h == 8);
    CHECK(pyr.details[2].w == 8);
    CHECK(pyr.details[2].h == 4);
    CHECK(pyr.ll_w == 8);
    CHECK(pyr.ll_h == 4);
    CHECK(pyr.ll.size() == 32);

    const Image rec = multi_level_inverse(pyr, w, BoundaryMode::periodic, false);
    CHECK(max_image_diff(img, rec) == 0.0);

    // Single level must agree with the flat transform.
    const Pyramid one = multi_level_forward(img, s, 1, BoundaryMode::periodic, false);
    const QuadGrid q = forward(img, s, BoundaryMode::periodic, false);
    CHECK(one.details.size() == 1);
    for (int r = 0; r < q.h; ++r)
        for (int c = 0; c < q.w; ++c) {
            const std::size_t i = static_cast<std::size_t>(r) * q.w + c;
            CHECK(one.ll[i] == q.at(LL, r, c));
            CHECK(one.details[0].hl[i] == q.at(HL, r, c));
            CHECK(one.details[0].lh[i] == q.at(LH, r, c));
            CHECK(one.details[0].hh[i] == q.at(HH, r, c));
        }
}

TEST_CASE("multi-level validation errors") {
    const WaveletSpec w = get_wavelet("cdf53");
    const Scheme s = build_scheme(SchemeKind::Sweldens, w);
    // 12 is divisible by 4 but not by 8: levels = 3 must be rejected.
    CHECK_THROWS_AS(
        (void)multi_level_forward(Image(12, 16), s, 3, BoundaryMode::periodic, false),
        std::invalid_argument);
    CHECK_THROWS_AS((void)multi_level_forward(Image(16, 16), s, 0, BoundaryMode::periodic, false),
                    std::invalid_argument);

    Pyramid pyr = multi_level_forward(random_image(16, 16, 111), s, 2, BoundaryMode::periodic,
                                      false);
    pyr.details[0].hl.pop_back();  // corrupt a plane size
    CHECK_THROWS_AS((void)multi_level_inverse(pyr, w, BoundaryMode::periodic, false),
                    std::invalid_argument);
    pyr.details[0].hl.push_back(0.0);
    pyr.details[1].w = 9;  // inconsistent level dimensions
    CHECK_THROWS_AS((void)multi_level_inverse(pyr, w, BoundaryMode::periodic, false),
                    std::invalid_argument);
}

TEST_CASE("worker count is positive") { CHECK(worker_count() >= 1); }
