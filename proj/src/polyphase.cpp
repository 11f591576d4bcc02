#include "wavelift/polyphase.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wavelift {

const char* to_string(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::T_H: return "T_H";
        case MatrixKind::T_V: return "T_V";
        case MatrixKind::S_H: return "S_H";
        case MatrixKind::S_V: return "S_V";
        case MatrixKind::T_I: return "T_I";
        case MatrixKind::R_I: return "R_I";
        case MatrixKind::S_I: return "S_I";
        case MatrixKind::T_E: return "T_E";
        case MatrixKind::R_E: return "R_E";
        case MatrixKind::S_E: return "S_E";
        case MatrixKind::T_MONO: return "T_MONO";
        case MatrixKind::S_MONO: return "S_MONO";
        case MatrixKind::N_FULL: return "N_FULL";
    }
    return "?";
}

StepMatrix::StepMatrix(CoeffMode mode, MatrixKind kind) : mode_(mode), kind_(kind) {
    for (auto& e : m_) e = LaurentPoly2::zero(mode);
    for (int i = 0; i < 4; ++i) m_[i * 4 + i] = LaurentPoly2::one(mode);
}

StepMatrix StepMatrix::identity(CoeffMode mode) { return StepMatrix(mode); }

void StepMatrix::set_entry(int row, int col, const LaurentPoly2& p) {
    if (p.mode() != mode_) throw std::invalid_argument("step-matrix entry mode mismatch");
    m_.at(row * 4 + col) = p;
}

bool StepMatrix::is_identity() const {
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            if (r == c ? !entry(r, c).is_one() : !entry(r, c).is_zero()) return false;
        }
    return true;
}

namespace {

struct Oriented {
    LaurentPoly2 ph, pv, uh, uv;  // predict/update along each axis
};

Oriented orient_params(const MatrixKindParams& params) {
    Oriented o;
    o.ph = orient(params.predict, Axis::horizontal);
    o.pv = o.ph.transpose();
    o.uh = orient(params.update, Axis::horizontal);
    o.uv = o.uh.transpose();
    return o;
}

CoeffMode params_mode(MatrixKind kind, const MatrixKindParams& params) {
    bool uses_p = kind != MatrixKind::S_H && kind != MatrixKind::S_V && kind != MatrixKind::S_I &&
                  kind != MatrixKind::S_E && kind != MatrixKind::S_MONO;
    bool uses_u = kind != MatrixKind::T_H && kind != MatrixKind::T_V && kind != MatrixKind::T_I &&
                  kind != MatrixKind::T_E && kind != MatrixKind::T_MONO;
    if (uses_p && uses_u && params.predict.mode() != params.update.mode())
        throw std::invalid_argument("predict/update mode mismatch for matrix kind");
    return uses_p ? params.predict.mode() : params.update.mode();
}

}  // namespace

StepMatrix build_matrix(MatrixKind kind, const MatrixKindParams& params) {
    const CoeffMode mode = params_mode(kind, params);
    // A zero operator yields identity rows for its kind (degenerate but legal).
    MatrixKindParams aligned = params;
    if (aligned.predict.mode() != mode) aligned.predict = LaurentPoly1::zero(mode);
    if (aligned.update.mode() != mode) aligned.update = LaurentPoly1::zero(mode);
    const Oriented o = orient_params(aligned);

    StepMatrix m(mode, kind);
    switch (kind) {
        case MatrixKind::T_H:
            m.set_entry(HL, LL, o.ph);
            m.set_entry(HH, LH, o.ph);
            break;
        case MatrixKind::T_V:
            m.set_entry(LH, LL, o.pv);
            m.set_entry(HH, HL, o.pv);
            break;
        case MatrixKind::S_H:
            m.set_entry(LL, HL, o.uh);
            m.set_entry(LH, HH, o.uh);
            break;
        case MatrixKind::S_V:
            m.set_entry(LL, LH, o.uv);
            m.set_entry(HL, HH, o.uv);
            break;
        case MatrixKind::T_I:
            m.set_entry(HH, LL, o.ph * o.pv);
            m.set_entry(HH, HL, o.pv);
            m.set_entry(HH, LH, o.ph);
            break;
        case MatrixKind::R_I:
            m.set_entry(HL, LL, o.ph);
            m.set_entry(HL, HH, o.uv);
            m.set_entry(LH, LL, o.pv);
            m.set_entry(LH, HH, o.uh);
            break;
        case MatrixKind::S_I:
            m.set_entry(LL, HL, o.uh);
            m.set_entry(LL, LH, o.uv);
            m.set_entry(LL, HH, -(o.uh * o.uv));
            break;
        case MatrixKind::T_E:
            m.set_entry(HL, LL, o.ph);
            m.set_entry(LH, LL, o.pv);
            m.set_entry(HH, LL, -(o.ph * o.pv));
            break;
        case MatrixKind::R_E:
            m.set_entry(LL, HL, o.uh);
            m.set_entry(LL, LH, o.uv);
            m.set_entry(HH, HL, o.pv);
            m.set_entry(HH, LH, o.ph);
            break;
        case MatrixKind::S_E:
            m.set_entry(LL, HH, o.uh * o.uv);
            m.set_entry(HL, HH, o.uv);
            m.set_entry(LH, HH, o.uh);
            break;
        case MatrixKind::T_MONO:
            m.set_entry(HL, LL, o.ph);
            m.set_entry(LH, LL, o.pv);
            m.set_entry(HH, LL, o.ph * o.pv);
            m.set_entry(HH, HL, o.pv);
            m.set_entry(HH, LH, o.ph);
            break;
        case MatrixKind::S_MONO:
            m.set_entry(LL, HL, o.uh);
            m.set_entry(LL, LH, o.uv);
            m.set_entry(LL, HH, o.uh * o.uv);
            m.set_entry(HL, HH, o.uv);
            m.set_entry(LH, HH, o.uh);
            break;
        case MatrixKind::N_FULL: {
            const LaurentPoly1 one1 = LaurentPoly1::constant(Coeff::one(mode));
            const LaurentPoly1 v1 = aligned.predict * aligned.update + one1;
            const LaurentPoly2 vh = orient(v1, Axis::horizontal);
            const LaurentPoly2 vv = vh.transpose();
            m.set_entry(LL, LL, vv * vh);
            m.set_entry(LL, HL, vv * o.uh);
            m.set_entry(LL, LH, o.uv * vh);
            m.set_entry(LL, HH, o.uv * o.uh);
            m.set_entry(HL, LL, vv * o.ph);
            m.set_entry(HL, HL, vv);
            m.set_entry(HL, LH, o.uv * o.ph);
            m.set_entry(HL, HH, o.uv);
            m.set_entry(LH, LL, o.pv * vh);
            m.set_entry(LH, HL, o.pv * o.uh);
            m.set_entry(LH, LH, vh);
            m.set_entry(LH, HH, o.uh);
            m.set_entry(HH, LL, o.pv * o.ph);
            m.set_entry(HH, HL, o.pv);
            m.set_entry(HH, LH, o.ph);
            break;
        }
    }
    return m;
}

StepMatrix matmul(const StepMatrix& a, const StepMatrix& b) {
    if (a.mode() != b.mode()) throw std::invalid_argument("matmul: coefficient mode mismatch");
    StepMatrix r(a.mode(), MatrixKind::N_FULL);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            LaurentPoly2 sum = LaurentPoly2::zero(a.mode());
            for (int k = 0; k < 4; ++k) sum = sum + a.entry(i, k) * b.entry(k, j);
            r.set_entry(i, j, sum);
        }
    return r;
}

StepMatrix product_in_application_order(const std::vector<StepMatrix>& steps) {
    if (steps.empty()) throw std::invalid_argument("empty step list");
    StepMatrix acc = steps.front();
    for (std::size_t i = 1; i < steps.size(); ++i) acc = matmul(steps[i], acc);
    return acc;
}

IdentityReport verify_scheme_identity(const std::vector<StepMatrix>& steps,
                                      const StepMatrix& reference, double tol) {
    const StepMatrix product = product_in_application_order(steps);
    const bool both_exact =
        product.mode() == CoeffMode::exact && reference.mode() == CoeffMode::exact;

    IdentityReport report;
    report.match = true;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            const double dev = max_abs_diff(product.entry(r, c), reference.entry(r, c));
            const bool entry_match =
                both_exact ? product.entry(r, c) == reference.entry(r, c) : dev <= tol;
            if (dev > report.max_deviation) report.max_deviation = dev;
            if (!entry_match && report.match) {
                report.match = false;
                report.first_row = r;
                report.first_col = c;
                std::ostringstream os;
                os << "first differing entry (" << r << "," << c
                   << "): product = " << product.entry(r, c).str()
                   << ", reference = " << reference.entry(r, c).str();
                report.detail = os.str();
            }
        }
    if (report.match) report.detail = "product matches reference";
    return report;
}

PolyMatrix2 build_1d_polyphase(const LaurentPoly1& g0, const LaurentPoly1& g1) {
    PolyMatrix2 m{LaurentPoly1(g0.mode()), LaurentPoly1(g0.mode()), LaurentPoly1(g0.mode()),
                  LaurentPoly1(g0.mode())};
    for (const auto& [k, c] : g0.terms()) {
        if (k % 2 == 0)
            m.g0e.set_term(k / 2, c);  // g0_{2e}
        else
            m.g0o.set_term((k + 1) / 2, c);  // g0_{2e-1}
    }
    for (const auto& [k, c] : g1.terms()) {
        if (k % 2 == 0)
            m.g1e.set_term(k / 2, c);  // g1_{2e}
        else
            m.g1o.set_term((k - 1) / 2, c);  // g1_{2e+1}
    }
    return m;
}

std::pair<LaurentPoly1, LaurentPoly1> interleave_filters(const PolyMatrix2& m) {
    LaurentPoly1 g0(m.mode());
    LaurentPoly1 g1(m.mode());
    for (const auto& [e, c] : m.g0e.terms()) g0.set_term(2 * e, c);
    for (const auto& [e, c] : m.g0o.terms()) g0.set_term(2 * e - 1, c);
    for (const auto& [e, c] : m.g1e.terms()) g1.set_term(2 * e, c);
    for (const auto& [e, c] : m.g1o.terms()) g1.set_term(2 * e + 1, c);
    return {g0, g1};
}

namespace {

// Internal 2x2 over rows (L, H) x columns (E, O).
struct Mat2 {
    LaurentPoly1 a, b, c, d;  // [[a, b], [c, d]]
};

Mat2 mat2_identity(CoeffMode mode) {
    const LaurentPoly1 one = LaurentPoly1::constant(Coeff::one(mode));
    const LaurentPoly1 zero = LaurentPoly1::zero(mode);
    return {one, zero, zero, one};
}

Mat2 mat2_mul(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
}

}  // namespace

PolyMatrix2 lifting_product_1d(const WaveletSpec& spec, bool include_scaling) {
    if (spec.stages.empty()) throw std::invalid_argument("wavelet spec has no stages");
    CoeffMode mode = spec.mode();
    const LaurentPoly1 one = LaurentPoly1::constant(Coeff::one(mode));
    const LaurentPoly1 zero = LaurentPoly1::zero(mode);

    Mat2 acc = mat2_identity(mode);
    for (const LiftingStage& stage : spec.stages) {
        const Mat2 predict{one, zero, stage.predict, one};
        const Mat2 update{one, stage.update, zero, one};
        acc = mat2_mul(update, mat2_mul(predict, acc));
    }

    if (include_scaling && spec.zeta != 1.0) {
        // The scaling diagonal is irrational in general; the product drops to
        // real mode when it is included.
        if (mode == CoeffMode::exact) {
            acc = {acc.a.to_real(), acc.b.to_real(), acc.c.to_real(), acc.d.to_real()};
            mode = CoeffMode::real;
        }
        const Mat2 scale{LaurentPoly1::constant(Coeff::real(spec.zeta)), LaurentPoly1(mode),
                         LaurentPoly1(mode),
                         LaurentPoly1::constant(Coeff::real(1.0 / spec.zeta))};
        acc = mat2_mul(scale, acc);
    }

    // Row L = [V, U-part], row H = [P-part, 1] in the unscaled single-stage
    // case; named per the phase convention documented in the header.
    PolyMatrix2 m{acc.c, acc.d, acc.b, acc.a};
    return m;
}

StepMatrix conv_polyphase_matrix(const ConvFilters& filters) {
    const CoeffMode mode = filters.f_ll.mode();
    StepMatrix m(mode, MatrixKind::N_FULL);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m.set_entry(r, c, LaurentPoly2::zero(mode));

    const LaurentPoly2* rows[4] = {&filters.f_ll, &filters.f_hl, &filters.f_lh, &filters.f_hh};
    for (int target = 0; target < 4; ++target) {
        const bool col_high = target == HL || target == HH;   // horizontal high-pass
        const bool row_high = target == LH || target == HH;   // vertical high-pass
        for (const auto& [e, coeff] : rows[target]->terms()) {
            const int km = e.first;
            const int kn = e.second;
            // Horizontal phase extraction: low-pass taps split as
            // g_{2a} -> even source, g_{2a-1} -> odd source; high-pass taps as
            // g_{2a+1} -> even source, g_{2a} -> odd source.
            int a, b;
            bool src_col_odd, src_row_odd;
            if (!col_high) {
                src_col_odd = (km % 2) != 0;
                a = src_col_odd ? (km + 1) / 2 : km / 2;
            } else {
                src_col_odd = (km % 2) == 0;
                a = src_col_odd ? km / 2 : (km - 1) / 2;
            }
            if (!row_high) {
                src_row_odd = (kn % 2) != 0;
                b = src_row_odd ? (kn + 1) / 2 : kn / 2;
            } else {
                src_row_odd = (kn % 2) == 0;
                b = src_row_odd ? kn / 2 : (kn - 1) / 2;
            }
            const int source = (src_row_odd ? 2 : 0) + (src_col_odd ? 1 : 0);
            LaurentPoly2 entry = m.entry(target, source);
            entry.set_term(a, b, entry.at(a, b) + coeff);
            m.set_entry(target, source, entry);
        }
    }
    return m;
}

}  // namespace wavelift
