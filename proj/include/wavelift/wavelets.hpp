#pragma once

// The shipped lifting factorizations (CDF 5/3, CDF 9/7, DD 13/7) and derived
// quantities: scalar/non-scalar operator splits, 1-D analysis filters, and
// the four 2-D convolution filters.

#include "wavelift/laurent.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wavelift {

// One predict/update pair of a lifting factorization.
struct LiftingStage {
    LaurentPoly1 predict;
    LaurentPoly1 update;
};

struct WaveletSpec {
    std::string name;
    std::vector<LiftingStage> stages;  // K = stages.size() >= 1
    double zeta = 1.0;                 // non-zero scaling factor

    CoeffMode mode() const { return stages.at(0).predict.mode(); }
};

// Returns one of the shipped wavelets: "cdf53", "cdf97", "dd137".
// cdf53 and dd137 carry exact rational coefficients; cdf97 is float.
// Throws std::invalid_argument for unknown names.
WaveletSpec get_wavelet(const std::string& name);

// Per-stage split of each operator into its scalar (exponent-0) part and the
// residual: P = P0 + P1, U = U0 + U1 with P0, U0 scalars.
struct SplitStage {
    LaurentPoly1 p0, p1, u0, u1;
};
std::vector<SplitStage> split_operators(const WaveletSpec& spec);

// Low-pass/high-pass analysis filter pair derived from the lifting product
// (scaling excluded). Phase convention: g0 evaluates at even sample
// positions, g1 at odd sample positions.
std::pair<LaurentPoly1, LaurentPoly1> analysis_filters(const WaveletSpec& spec);

// Tensor-product 2-D analysis filters: F_ss' = g_s(z_n) * g_s'(z_m), where
// the first subscript selects the vertical (row) filter and the second the
// horizontal (column) filter: F_LL = g0 x g0, F_HL = g0 x g1 (horizontal
// high-pass), F_LH = g1 x g0, F_HH = g1 x g1.
struct ConvFilters {
    LaurentPoly2 f_ll, f_hl, f_lh, f_hh;
};
ConvFilters conv2d_filters(const WaveletSpec& spec);

}  // namespace wavelift
