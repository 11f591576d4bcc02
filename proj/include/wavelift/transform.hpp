#pragma once

// Executes schemes on real images: polyphase split/merge, step application
// as subband-grid convolution, forward/inverse transforms, scaling, the
// multi-level pyramid, and the direct-convolution reference path.

#include "wavelift/schemes.hpp"

#include <array>
#include <vector>

namespace wavelift {

struct Image {
    int width = 0;   // even and positive for transform input
    int height = 0;
    std::vector<double> samples;  // row-major, height*width

    Image() = default;
    Image(int w, int h) : width(w), height(h), samples(static_cast<std::size_t>(w) * h, 0.0) {}

    double& at(int r, int c) { return samples[static_cast<std::size_t>(r) * width + c]; }
    double at(int r, int c) const { return samples[static_cast<std::size_t>(r) * width + c]; }
};

struct QuadGrid {
    int w = 0;  // plane width  (= image width / 2)
    int h = 0;  // plane height (= image height / 2)
    std::array<std::vector<double>, 4> planes;  // indexed by Component (LL, HL, LH, HH)

    QuadGrid() = default;
    QuadGrid(int w_, int h_) : w(w_), h(h_) {
        for (auto& p : planes) p.assign(static_cast<std::size_t>(w) * h, 0.0);
    }

    double& at(int comp, int r, int c) {
        return planes[comp][static_cast<std::size_t>(r) * w + c];
    }
    double at(int comp, int r, int c) const {
        return planes[comp][static_cast<std::size_t>(r) * w + c];
    }
};

enum class BoundaryMode { periodic, symmetric };  // symmetric = whole-point mirror

// Resolves an index into [0, n) under the boundary mode.
int resolve_index(int i, int n, BoundaryMode boundary);

// Pure re-indexing into the four polyphase components:
// LL <- (even row, even col), HL <- (even, odd), LH <- (odd, even),
// HH <- (odd, odd). Throws on odd dimensions.
QuadGrid polyphase_split(const Image& img);

// Exact inverse of polyphase_split.
Image polyphase_merge(const QuadGrid& q);

// Out-of-place evaluation y_i = sum_j M_ij (*) x_j, where a Laurent term
// z_m^km z_n^kn reads the component sample at (row - kn, col - km) with the
// chosen boundary extension on the half-resolution grid.
QuadGrid apply_step(const QuadGrid& q, const StepMatrix& step, BoundaryMode boundary);

// Splits, applies each scheme step in order (or evaluates the four 2-D
// filters at subsampled positions for Convolution), then optionally applies
// the scaling step: LL *= zeta^2, HH *= zeta^-2, HL/LH unchanged.
QuadGrid forward(const Image& img, const Scheme& scheme, BoundaryMode boundary,
                 bool apply_scaling);

// Inverts via the reversed, negated elementary separable steps (valid for a
// QuadGrid produced by any scheme kind of the same wavelet); undoes scaling
// first when requested.
Image inverse(const QuadGrid& q, const WaveletSpec& wavelet, BoundaryMode boundary,
              bool undo_scaling);

struct PyramidLevel {
    int w = 0, h = 0;
    std::vector<double> hl, lh, hh;
};

struct Pyramid {
    std::vector<PyramidLevel> details;  // finest level first
    int ll_w = 0, ll_h = 0;
    std::vector<double> ll;  // coarsest approximation plane
};

// Recursively re-transforms the LL plane. Dimensions must be divisible by
// 2^levels; levels >= 1.
Pyramid multi_level_forward(const Image& img, const Scheme& scheme, int levels,
                            BoundaryMode boundary, bool apply_scaling);

Image multi_level_inverse(const Pyramid& pyramid, const WaveletSpec& wavelet,
                          BoundaryMode boundary, bool undo_scaling);

// Worker cap for data-parallel loops: value of WAVELIFT_THREADS, where 0 or
// an unset variable selects the hardware concurrency.
int worker_count();

}  // namespace wavelift
