#include "doctest.h"

#include "test_util.hpp"
#include "wavelift/wavelets.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

using namespace wavelift;

namespace {
Coeff q(long long n, long long d = 1) { return Coeff::exact(n, d); }

LaurentPoly1 p1(std::initializer_list<std::pair<int, Coeff>> terms) {
    return LaurentPoly1::from_terms(CoeffMode::exact, terms);
}

double moment(const LaurentPoly1& p, int order) {
    double m = 0.0;
    for (const auto& [k, c] : p.terms()) m += c.to_double() * std::pow(double(k), order);
    return m;
}
}  // namespace

TEST_CASE("cdf53 lifting operators") {
    const WaveletSpec w = get_wavelet("cdf53");
    CHECK(w.name == "cdf53");
    CHECK(w.mode() == CoeffMode::exact);
    REQUIRE(w.stages.size() == 1);
    CHECK(w.stages[0].predict == p1({{0, q(-1, 2)}, {-1, q(-1, 2)}}));
    CHECK(w.stages[0].update == p1({{0, q(1, 4)}, {1, q(1, 4)}}));
    CHECK(w.zeta * w.zeta == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("cdf97 lifting operators") {
    const WaveletSpec w = get_wavelet("cdf97");
    CHECK(w.mode() == CoeffMode::real);
    REQUIRE(w.stages.size() == 2);
    const double alpha = -1.5861343420693648;
    const double beta = -0.052980118572961;
    const double gamma = 0.882911075530934;
    const double delta = 0.443506852043971;
    CHECK(w.stages[0].predict.at(0).to_double() == alpha);
    CHECK(w.stages[0].predict.at(-1).to_double() == alpha);
    CHECK(w.stages[0].update.at(0).to_double() == beta);
    CHECK(w.stages[0].update.at(1).to_double() == beta);
    CHECK(w.stages[1].predict.at(0).to_double() == gamma);
    CHECK(w.stages[1].predict.at(-1).to_double() == gamma);
    CHECK(w.stages[1].update.at(0).to_double() == delta);
    CHECK(w.stages[1].update.at(1).to_double() == delta);
    CHECK(w.stages[0].predict.tap_count() == 2);
    CHECK(w.stages[1].update.tap_count() == 2);
    CHECK(w.zeta == 1.149604398860241);
}

TEST_CASE("dd137 lifting operators") {
    const WaveletSpec w = get_wavelet("dd137");
    CHECK(w.mode() == CoeffMode::exact);
    REQUIRE(w.stages.size() == 1);
    CHECK(w.stages[0].predict ==
          p1({{1, q(1, 16)}, {0, q(-9, 16)}, {-1, q(-9, 16)}, {-2, q(1, 16)}}));
    CHECK(w.stages[0].update ==
          p1({{2, q(-1, 32)}, {1, q(9, 32)}, {0, q(9, 32)}, {-1, q(-1, 32)}}));
    CHECK(w.zeta == 1.0);
}

TEST_CASE("unknown wavelet names are rejected") {
    CHECK_THROWS_AS((void)get_wavelet("cdf99"), std::invalid_argument);
    CHECK_THROWS_AS((void)get_wavelet(""), std::invalid_argument);
}

TEST_CASE("operator scalar/residual splits") {
    SUBCASE("cdf53") {
        const auto split = split_operators(get_wavelet("cdf53"));
        REQUIRE(split.size() == 1);
        CHECK(split[0].p0 == p1({{0, q(-1, 2)}}));
        CHECK(split[0].p1 == p1({{-1, q(-1, 2)}}));
        CHECK(split[0].u0 == p1({{0, q(1, 4)}}));
        CHECK(split[0].u1 == p1({{1, q(1, 4)}}));
    }
    SUBCASE("dd137") {
        const auto split = split_operators(get_wavelet("dd137"));
        REQUIRE(split.size() == 1);
        CHECK(split[0].p0 == p1({{0, q(-9, 16)}}));
        CHECK(split[0].p1 == p1({{1, q(1, 16)}, {-1, q(-9, 16)}, {-2, q(1, 16)}}));
        CHECK(split[0].u0 == p1({{0, q(9, 32)}}));
        CHECK(split[0].u1 == p1({{2, q(-1, 32)}, {1, q(9, 32)}, {-1, q(-1, 32)}}));
    }
    SUBCASE("splits reconstruct the operators") {
        for (const char* name : {"cdf53", "cdf97", "dd137"}) {
            const WaveletSpec w = get_wavelet(name);
            const auto split = split_operators(w);
            REQUIRE(split.size() == w.stages.size());
            for (std::size_t k = 0; k < split.size(); ++k) {
                CHECK(split[k].p0 + split[k].p1 == w.stages[k].predict);
                CHECK(split[k].u0 + split[k].u1 == w.stages[k].update);
            }
        }
    }
}

TEST_CASE("cdf53 analysis filters") {
    const auto [g0, g1] = analysis_filters(get_wavelet("cdf53"));
    CHECK(g0 == p1({{-2, q(-1, 8)}, {-1, q(1, 4)}, {0, q(3, 4)}, {1, q(1, 4)}, {2, q(-1, 8)}}));
    CHECK(g1 == p1({{-1, q(-1, 2)}, {0, q(1)}, {1, q(-1, 2)}}));
    CHECK(g0.degree() + 1 == 5);  // 5/3 support
    CHECK(g1.degree() + 1 == 3);
}

TEST_CASE("dd137 analysis filters: 13/7 support with interior zeros") {
    const auto [g0, g1] = analysis_filters(get_wavelet("dd137"));

    // Low-pass: 13-sample support, 11 nonzero taps (positions +/-5 vanish).
    CHECK(g0.degree() + 1 == 13);
    CHECK(g0.tap_count() == 11);
    CHECK(g0.at(0) == q(87, 128));
    for (int s : {-1, 1}) {
        CHECK(g0.at(s * 1) == q(9, 32));
        CHECK(g0.at(s * 2) == q(-63, 512));
        CHECK(g0.at(s * 3) == q(-1, 32));
        CHECK(g0.at(s * 4) == q(9, 256));
        CHECK(g0.at(s * 5).is_zero());
        CHECK(g0.at(s * 6) == q(-1, 512));
    }

    // High-pass: 7-sample support, 5 nonzero taps (positions +/-2 vanish).
    CHECK(g1.degree() + 1 == 7);
    CHECK(g1.tap_count() == 5);
    CHECK(g1.at(0) == q(1));
    for (int s : {-1, 1}) {
        CHECK(g1.at(s * 1) == q(-9, 16));
        CHECK(g1.at(s * 2).is_zero());
        CHECK(g1.at(s * 3) == q(1, 16));
    }
}

TEST_CASE("cdf97 analysis filters: support and moments") {
    const auto [g0, g1] = analysis_filters(get_wavelet("cdf97"));
    CHECK(g0.degree() + 1 == 9);  // 9/7 support
    CHECK(g1.degree() + 1 == 7);
    CHECK(g0.tap_count() == 9);
    CHECK(g1.tap_count() == 7);

    // The scaling step is excluded from the filters, so the low-pass DC gain
    // is the classical 9/7 normalization constant K = sqrt(2)/zeta; the
    // high-pass has four vanishing moments (as exact as the shipped double
    // coefficients permit).
    CHECK(moment(g0, 0) == doctest::Approx(1.230174104914001).epsilon(1e-9));
    CHECK(get_wavelet("cdf97").zeta * moment(g0, 0) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    for (int order = 0; order < 4; ++order)
        CHECK(std::abs(moment(g1, order)) < 1e-9);
}

TEST_CASE("exact wavelets: DC gain and high-pass moments") {
    for (const char* name : {"cdf53", "dd137"}) {
        const auto [g0, g1] = analysis_filters(get_wavelet(name));
        Rational dc(0), hp(0), hp1(0);
        for (const auto& [k, c] : g0.terms()) dc = dc + c.rat();
        for (const auto& [k, c] : g1.terms()) {
            hp = hp + c.rat();
            hp1 = hp1 + c.rat() * Rational(k);
        }
        CHECK(dc == Rational(1));
        CHECK(hp == Rational(0));
        CHECK(hp1 == Rational(0));
    }
}

TEST_CASE("2-D convolution filters: tensor structure and tap counts") {
    struct Expect {
        const char* name;
        int ll, hl, lh, hh;
    };
    for (const Expect& e : std::initializer_list<Expect>{
             {"cdf53", 25, 15, 15, 9}, {"cdf97", 81, 63, 63, 49}, {"dd137", 121, 55, 55, 25}}) {
        CAPTURE(e.name);
        const WaveletSpec w = get_wavelet(e.name);
        const ConvFilters f = conv2d_filters(w);
        CHECK(f.f_ll.tap_count() == e.ll);
        CHECK(f.f_hl.tap_count() == e.hl);
        CHECK(f.f_lh.tap_count() == e.lh);
        CHECK(f.f_hh.tap_count() == e.hh);

        // Tensor-product identity: F_ss'(km, kn) = g_s[kn] * g_s'[km], with
        // the first subscript vertical and the second horizontal.
        const auto [g0, g1] = analysis_filters(w);
        const LaurentPoly1* vert[4] = {&g0, &g0, &g1, &g1};
        const LaurentPoly1* horz[4] = {&g0, &g1, &g0, &g1};
        const LaurentPoly2* filt[4] = {&f.f_ll, &f.f_hl, &f.f_lh, &f.f_hh};
        for (int comp = 0; comp < 4; ++comp) {
            CHECK(*filt[comp] ==
                  orient(*vert[comp], Axis::vertical) * orient(*horz[comp], Axis::horizontal));
        }
    }
}

TEST_CASE("2-D convolution tap totals") {
    auto total = [](const ConvFilters& f) {
        return f.f_ll.tap_count() + f.f_hl.tap_count() + f.f_lh.tap_count() + f.f_hh.tap_count();
    };
    CHECK(total(conv2d_filters(get_wavelet("cdf53"))) == 64);
    CHECK(total(conv2d_filters(get_wavelet("cdf97"))) == 256);
    CHECK(total(conv2d_filters(get_wavelet("dd137"))) == 256);
}
