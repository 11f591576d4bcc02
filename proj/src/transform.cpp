#include "wavelift/transform.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace wavelift {

int worker_count() {
    static const int cached = [] {
        int n = 0;
        if (const char* env = std::getenv("WAVELIFT_THREADS")) {
            try {
                n = std::stoi(env);
            } catch (...) {
                n = 0;
            }
            if (n < 0) n = 0;
        }
        if (n == 0) {
            n = static_cast<int>(std::thread::hardware_concurrency());
            if (n <= 0) n = 1;
        }
        return n;
    }();
    return cached;
}

namespace {

// Runs fn(r) for r in [0, rows), split across worker threads in fixed
// contiguous ranges; deterministic because ranges are disjoint and no
// reduction order depends on the thread count.
template <typename Fn>
void parallel_rows(int rows, Fn&& fn) {
    const int workers = std::min(worker_count(), rows);
    if (workers <= 1 || rows < 64) {
        for (int r = 0; r < rows; ++r) fn(r);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const int chunk = (rows + workers - 1) / workers;
    for (int t = 0; t < workers; ++t) {
        const int begin = t * chunk;
        const int end = std::min(rows, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([begin, end, &fn] {
            for (int r = begin; r < end; ++r) fn(r);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

int resolve_index(int i, int n, BoundaryMode boundary) {
    if (i >= 0 && i < n) return i;
    if (n == 1) return 0;
    if (boundary == BoundaryMode::periodic) {
        int m = i % n;
        return m < 0 ? m + n : m;
    }
    // Whole-point mirror: ... 2 1 | 0 1 2 ... n-1 | n-2 n-3 ...
    while (i < 0 || i >= n) {
        if (i < 0) i = -i;
        if (i >= n) i = 2 * (n - 1) - i;
    }
    return i;
}

QuadGrid polyphase_split(const Image& img) {
    if (img.width <= 0 || img.height <= 0 || img.width % 2 != 0 || img.height % 2 != 0)
        throw std::invalid_argument("polyphase_split requires even positive dimensions");
    QuadGrid q(img.width / 2, img.height / 2);
    for (int r = 0; r < q.h; ++r)
        for (int c = 0; c < q.w; ++c) {
            q.at(LL, r, c) = img.at(2 * r, 2 * c);
            q.at(HL, r, c) = img.at(2 * r, 2 * c + 1);
            q.at(LH, r, c) = img.at(2 * r + 1, 2 * c);
            q.at(HH, r, c) = img.at(2 * r + 1, 2 * c + 1);
        }
    return q;
}

Image polyphase_merge(const QuadGrid& q) {
    Image img(q.w * 2, q.h * 2);
    for (int r = 0; r < q.h; ++r)
        for (int c = 0; c < q.w; ++c) {
            img.at(2 * r, 2 * c) = q.at(LL, r, c);
            img.at(2 * r, 2 * c + 1) = q.at(HL, r, c);
            img.at(2 * r + 1, 2 * c) = q.at(LH, r, c);
            img.at(2 * r + 1, 2 * c + 1) = q.at(HH, r, c);
        }
    return img;
}

QuadGrid apply_step(const QuadGrid& q, const StepMatrix& step, BoundaryMode boundary) {
    QuadGrid out(q.w, q.h);
    for (int comp = 0; comp < 4; ++comp) {
        const auto compute_row = [&](int r) {
            for (int c = 0; c < q.w; ++c) {
                double acc = 0.0;
                for (int src = 0; src < 4; ++src) {
                    const LaurentPoly2& entry = step.entry(comp, src);
                    if (entry.is_zero()) continue;
                    if (comp == src && entry.is_one()) {
                        acc += q.at(src, r, c);
                        continue;
                    }
                    for (const auto& [e, coeff] : entry.terms()) {
                        const int rr = resolve_index(r - e.second, q.h, boundary);
                        const int cc = resolve_index(c - e.first, q.w, boundary);
                        acc += coeff.to_double() * q.at(src, rr, cc);
                    }
                }
                out.at(comp, r, c) = acc;
            }
        };
        parallel_rows(q.h, compute_row);
    }
    return out;
}

namespace {

QuadGrid forward_convolution(const Image& img, const ConvFilters& filters,
                             BoundaryMode boundary) {
    QuadGrid out(img.width / 2, img.height / 2);
    const LaurentPoly2* f[4] = {&filters.f_ll, &filters.f_hl, &filters.f_lh, &filters.f_hh};
    const int row_phase[4] = {0, 0, 1, 1};
    const int col_phase[4] = {0, 1, 0, 1};
    for (int comp = 0; comp < 4; ++comp) {
        const auto compute_row = [&](int r) {
            for (int c = 0; c < out.w; ++c) {
                double acc = 0.0;
                for (const auto& [e, coeff] : f[comp]->terms()) {
                    const int rr = resolve_index(2 * r + row_phase[comp] - e.second, img.height,
                                                 boundary);
                    const int cc = resolve_index(2 * c + col_phase[comp] - e.first, img.width,
                                                 boundary);
                    acc += coeff.to_double() * img.at(rr, cc);
                }
                out.at(comp, r, c) = acc;
            }
        };
        parallel_rows(out.h, compute_row);
    }
    return out;
}

void scale_planes(QuadGrid& q, double zeta, bool invert) {
    if (zeta == 1.0) return;
    const double s = invert ? 1.0 / (zeta * zeta) : zeta * zeta;
    for (double& v : q.planes[LL]) v *= s;
    for (double& v : q.planes[HH]) v /= s;
}

}  // namespace

QuadGrid forward(const Image& img, const Scheme& scheme, BoundaryMode boundary,
                 bool apply_scaling) {
    if (img.width <= 0 || img.height <= 0 || img.width % 2 != 0 || img.height % 2 != 0)
        throw std::invalid_argument("forward requires even positive dimensions");
    QuadGrid q;
    if (scheme.kind == SchemeKind::Convolution) {
        q = forward_convolution(img, *scheme.conv_filters, boundary);
    } else {
        q = polyphase_split(img);
        for (const Step& step : scheme.steps) q = apply_step(q, step.matrix, boundary);
    }
    if (apply_scaling) scale_planes(q, scheme.wavelet.zeta, /*invert=*/false);
    return q;
}

Image inverse(const QuadGrid& q, const WaveletSpec& wavelet, BoundaryMode boundary,
              bool undo_scaling) {
    QuadGrid cur = q;
    if (undo_scaling) scale_planes(cur, wavelet.zeta, /*invert=*/true);

    // Reversed, negated elementary separable steps form the exact inverse of
    // the verified step products for every scheme kind of this wavelet.
    const CoeffMode mode = wavelet.mode();
    const LaurentPoly1 zero = LaurentPoly1::zero(mode);
    for (auto it = wavelet.stages.rbegin(); it != wavelet.stages.rend(); ++it) {
        const MatrixKindParams neg_u{zero, -it->update};
        const MatrixKindParams neg_p{-it->predict, zero};
        cur = apply_step(cur, build_matrix(MatrixKind::S_V, neg_u), boundary);
        cur = apply_step(cur, build_matrix(MatrixKind::S_H, neg_u), boundary);
        cur = apply_step(cur, build_matrix(MatrixKind::T_V, neg_p), boundary);
        cur = apply_step(cur, build_matrix(MatrixKind::T_H, neg_p), boundary);
    }
    return polyphase_merge(cur);
}

Pyramid multi_level_forward(const Image& img, const Scheme& scheme, int levels,
                            BoundaryMode boundary, bool apply_scaling) {
    if (levels < 1) throw std::invalid_argument("levels must be >= 1");
    const int div = 1 << levels;
    if (img.width % div != 0 || img.height % div != 0)
        throw std::invalid_argument("image dimensions must be divisible by 2^levels");

    Pyramid pyramid;
    Image cur = img;
    for (int level = 0; level < levels; ++level) {
        QuadGrid q = forward(cur, scheme, boundary, apply_scaling);
        PyramidLevel detail;
        detail.w = q.w;
        detail.h = q.h;
        detail.hl = std::move(q.planes[HL]);
        detail.lh = std::move(q.planes[LH]);
        detail.hh = std::move(q.planes[HH]);
        pyramid.details.push_back(std::move(detail));
        if (level + 1 == levels) {
            pyramid.ll_w = q.w;
            pyramid.ll_h = q.h;
            pyramid.ll = std::move(q.planes[LL]);
        } else {
            Image next(q.w, q.h);
            next.samples = std::move(q.planes[LL]);
            cur = std::move(next);
        }
    }
    return pyramid;
}

Image multi_level_inverse(const Pyramid& pyramid, const WaveletSpec& wavelet,
                          BoundaryMode boundary, bool undo_scaling) {
    if (pyramid.details.empty()) throw std::invalid_argument("empty pyramid");
    std::vector<double> ll = pyramid.ll;
    int w = pyramid.ll_w;
    int h = pyramid.ll_h;
    if (ll.size() != static_cast<std::size_t>(w) * h)
        throw std::invalid_argument("approximation plane size does not match its dimensions");
    for (auto it = pyramid.details.rbegin(); it != pyramid.details.rend(); ++it) {
        if (it->w != w || it->h != h)
            throw std::invalid_argument("pyramid level dimensions are inconsistent");
        const std::size_t plane = static_cast<std::size_t>(w) * h;
        if (it->hl.size() != plane || it->lh.size() != plane || it->hh.size() != plane)
            throw std::invalid_argument("pyramid detail plane size does not match its level");
        QuadGrid q(w, h);
        q.planes[LL] = ll;
        q.planes[HL] = it->hl;
        q.planes[LH] = it->lh;
        q.planes[HH] = it->hh;
        Image img = inverse(q, wavelet, boundary, undo_scaling);
        ll = std::move(img.samples);
        w = img.width;
        h = img.height;
    }
    Image out(w, h);
    out.samples = std::move(ll);
    return out;
}

}  // namespace wavelift
