#include "wavelift/wavelets.hpp"

#include "wavelift/polyphase.hpp"

#include <cmath>
#include <stdexcept>

namespace wavelift {

namespace {

LaurentPoly1 exact_poly(const std::vector<std::pair<int, std::pair<long long, long long>>>& taps) {
    LaurentPoly1 p(CoeffMode::exact);
    for (const auto& [k, frac] : taps) p.set_term(k, Coeff::exact(frac.first, frac.second));
    return p;
}

LaurentPoly1 real_two_tap(double c, int k0, int k1) {
    LaurentPoly1 p(CoeffMode::real);
    p.set_term(k0, Coeff::real(c));
    p.set_term(k1, Coeff::real(c));
    return p;
}

}  // namespace

WaveletSpec get_wavelet(const std::string& name) {
    if (name == "cdf53") {
        // P(z) = -1/2 (1 + z^-1), U(z) = 1/4 (1 + z), zeta = sqrt(2).
        WaveletSpec spec;
        spec.name = name;
        spec.stages.push_back({exact_poly({{0, {-1, 2}}, {-1, {-1, 2}}}),
                               exact_poly({{0, {1, 4}}, {1, {1, 4}}})});
        spec.zeta = std::sqrt(2.0);
        return spec;
    }
    if (name == "cdf97") {
        // Two stages of two-tap operators; the standard published constants,
        // gated by the vanishing-moment property test rather than trusted.
        const double alpha = -1.5861343420693648;
        const double beta = -0.052980118572961;
        const double gamma = 0.882911075530934;
        const double delta = 0.443506852043971;
        WaveletSpec spec;
        spec.name = name;
        spec.stages.push_back({real_two_tap(alpha, 0, -1), real_two_tap(beta, 0, 1)});
        spec.stages.push_back({real_two_tap(gamma, 0, -1), real_two_tap(delta, 0, 1)});
        spec.zeta = 1.149604398860241;
        return spec;
    }
    if (name == "dd137") {
        // P(z) = 1/16 (z + z^-2) - 9/16 (1 + z^-1),
        // U(z) = 9/32 (1 + z) - 1/32 (z^-1 + z^2); no scaling step.
        WaveletSpec spec;
        spec.name = name;
        spec.stages.push_back(
            {exact_poly({{1, {1, 16}}, {-2, {1, 16}}, {0, {-9, 16}}, {-1, {-9, 16}}}),
             exact_poly({{0, {9, 32}}, {1, {9, 32}}, {-1, {-1, 32}}, {2, {-1, 32}}})});
        spec.zeta = 1.0;
        return spec;
    }
    throw std::invalid_argument("unknown wavelet: " + name);
}

std::vector<SplitStage> split_operators(const WaveletSpec& spec) {
    std::vector<SplitStage> out;
    out.reserve(spec.stages.size());
    for (const LiftingStage& stage : spec.stages) {
        auto [p0, p1] = stage.predict.split_scalar();
        auto [u0, u1] = stage.update.split_scalar();
        out.push_back({p0, p1, u0, u1});
    }
    return out;
}

std::pair<LaurentPoly1, LaurentPoly1> analysis_filters(const WaveletSpec& spec) {
    return interleave_filters(lifting_product_1d(spec, /*include_scaling=*/false));
}

ConvFilters conv2d_filters(const WaveletSpec& spec) {
    const auto [g0, g1] = analysis_filters(spec);
    const LaurentPoly2 g0h = orient(g0, Axis::horizontal);
    const LaurentPoly2 g1h = orient(g1, Axis::horizontal);
    const LaurentPoly2 g0v = g0h.transpose();
    const LaurentPoly2 g1v = g1h.transpose();
    // First subscript = vertical (row) filter, second = horizontal (column).
    return ConvFilters{g0v * g0h, g0v * g1h, g1v * g0h, g1v * g1h};
}

}  // namespace wavelift
