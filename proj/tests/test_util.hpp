#pragma once

// Shared helpers for the unit tests: seeded random generators for rationals,
// Laurent polynomials, and images, plus small comparison utilities.

#include "wavelift/laurent.hpp"
#include "wavelift/transform.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

namespace wavelift::testing {

inline std::mt19937 make_rng(unsigned seed) { return std::mt19937(seed); }

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 8);
    return Rational::ratio(num(rng), den(rng));
}

// Random exact polynomial with exponents in [-range, range]; may be zero.
inline LaurentPoly1 random_poly1(std::mt19937& rng, int max_terms = 4, int range = 4) {
    std::uniform_int_distribution<int> count(0, max_terms);
    std::uniform_int_distribution<int> expo(-range, range);
    LaurentPoly1 p(CoeffMode::exact);
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        const int e = expo(rng);
        p.set_term(e, p.at(e) + Coeff::exact(random_rational(rng)));
    }
    return p;
}

inline LaurentPoly1 random_nonzero_poly1(std::mt19937& rng, int max_terms = 4, int range = 4) {
    for (;;) {
        LaurentPoly1 p = random_poly1(rng, max_terms, range);
        if (!p.is_zero()) return p;
    }
}

inline LaurentPoly2 random_poly2(std::mt19937& rng, int max_terms = 4, int range = 3) {
    std::uniform_int_distribution<int> count(0, max_terms);
    std::uniform_int_distribution<int> expo(-range, range);
    LaurentPoly2 p(CoeffMode::exact);
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        const int km = expo(rng);
        const int kn = expo(rng);
        p.set_term(km, kn, p.at(km, kn) + Coeff::exact(random_rational(rng)));
    }
    return p;
}

inline Image random_image(int w, int h, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    Image img(w, h);
    for (double& s : img.samples) s = dist(rng);
    return img;
}

// Random image whose samples are small dyadic rationals, so exact-mode
// schemes stay bit-exact in double arithmetic.
inline Image random_dyadic_image(int w, int h, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(0, 255);
    Image img(w, h);
    for (double& s : img.samples) s = dist(rng) / 256.0;
    return img;
}

inline double max_plane_diff(const QuadGrid& a, const QuadGrid& b) {
    double m = 0.0;
    for (int comp = 0; comp < 4; ++comp)
        for (std::size_t i = 0; i < a.planes[comp].size(); ++i)
            m = std::max(m, std::abs(a.planes[comp][i] - b.planes[comp][i]));
    return m;
}

inline double max_image_diff(const Image& a, const Image& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.samples.size(); ++i)
        m = std::max(m, std::abs(a.samples[i] - b.samples[i]));
    return m;
}

}  // namespace wavelift::testing
