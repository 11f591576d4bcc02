#pragma once

// 2x2 (1-D) and 4x4 (2-D) polyphase matrices of the lifting schemes.
//
// The 4x4 step matrices act on component vectors x = [LL, HL, LH, HH]^T
// (row/column order fixed). Matrix application order convention: in a step
// sequence the first-applied step is the *rightmost* factor of the matrix
// product, y = S_k ... S_1 x.

#include "wavelift/laurent.hpp"
#include "wavelift/wavelets.hpp"

#include <array>
#include <string>
#include <vector>

namespace wavelift {

// Component indices into step-matrix rows/columns.
enum Component : int { LL = 0, HL = 1, LH = 2, HH = 3 };

enum class MatrixKind {
    T_H,     // horizontal predict (separable)
    T_V,     // vertical predict (separable)
    S_H,     // horizontal update (separable)
    S_V,     // vertical update (separable)
    T_I,     // three-step non-separable: predict
    R_I,     // three-step non-separable: mixed predict/update
    S_I,     // three-step non-separable: update
    T_E,     // explosive predict
    R_E,     // explosive mixed
    S_E,     // explosive update
    T_MONO,  // two-step non-separable predict
    S_MONO,  // two-step non-separable update
    N_FULL,  // full one-step polyphase matrix
};

const char* to_string(MatrixKind kind);

struct MatrixKindParams {
    LaurentPoly1 predict;  // unused by update-only kinds
    LaurentPoly1 update;   // unused by predict-only kinds
};

class StepMatrix {
public:
    explicit StepMatrix(CoeffMode mode = CoeffMode::exact, MatrixKind kind = MatrixKind::N_FULL);

    static StepMatrix identity(CoeffMode mode);

    CoeffMode mode() const { return mode_; }
    MatrixKind kind() const { return kind_; }
    void set_kind(MatrixKind k) { kind_ = k; }

    bool needs_barrier() const { return needs_barrier_; }
    void set_needs_barrier(bool b) { needs_barrier_ = b; }

    const LaurentPoly2& entry(int row, int col) const { return m_.at(row * 4 + col); }
    void set_entry(int row, int col, const LaurentPoly2& p);

    bool is_identity() const;

private:
    std::array<LaurentPoly2, 16> m_;
    CoeffMode mode_;
    MatrixKind kind_;
    bool needs_barrier_ = true;
};

// Builds the named 4x4 step matrix from the operators it references.
// Horizontal operators are oriented along z_m, vertical ones are the
// transposed filters along z_n. A zero operator contributes identity rows;
// the degenerate matrix may reduce to the identity outright.
StepMatrix build_matrix(MatrixKind kind, const MatrixKindParams& params);

// Standard matrix product with LaurentPoly2 entry arithmetic (a acts after b).
StepMatrix matmul(const StepMatrix& a, const StepMatrix& b);

// Product of a step list in application order: first element applied first,
// i.e. result = steps.back() * ... * steps.front(). This is the only place
// that fixes the orientation; call sites never multiply directly.
StepMatrix product_in_application_order(const std::vector<StepMatrix>& steps);

struct IdentityReport {
    bool match = false;
    double max_deviation = 0.0;  // largest entrywise coefficient deviation
    int first_row = -1;          // first differing entry (-1,-1 when matching)
    int first_col = -1;
    std::string detail;
};

// Computes the right-to-left product of `steps` and compares it entrywise to
// `reference`. Exact mode compares identically; real mode within tol.
// A mismatch is a report outcome, not an error.
IdentityReport verify_scheme_identity(const std::vector<StepMatrix>& steps,
                                      const StepMatrix& reference, double tol);

// 1-D polyphase matrix in the display layout
//   [ G_{1,o}  G_{1,e} ]
//   [ G_{0,o}  G_{0,e} ]
// with the module's fixed phase convention:
//   g0_{2e} = (G_{0,e})_e,   g0_{2e-1} = (G_{0,o})_e,
//   g1_{2e} = (G_{1,e})_e,   g1_{2e+1} = (G_{1,o})_e.
// Even phase corresponds to the low-pass output positions.
struct PolyMatrix2 {
    LaurentPoly1 g1o, g1e, g0o, g0e;

    CoeffMode mode() const { return g0e.mode(); }
};

// Splits each filter into even/odd phase subsequences per the layout above.
PolyMatrix2 build_1d_polyphase(const LaurentPoly1& g0, const LaurentPoly1& g1);

// Inverse of build_1d_polyphase: interleaves phases back into (g0, g1).
std::pair<LaurentPoly1, LaurentPoly1> interleave_filters(const PolyMatrix2& m);

// Multiplies the elementary 2x2 predict/update matrices of all stages
// right-to-left (first stage applied first); optionally appends the scaling
// diagonal diag(zeta, 1/zeta). Exact when the coefficients are rational.
PolyMatrix2 lifting_product_1d(const WaveletSpec& spec, bool include_scaling = false);

// Reassembles a 4x4 polyphase matrix from four 2-D filters by per-axis phase
// extraction; used to check the direct-convolution path against N_FULL.
StepMatrix conv_polyphase_matrix(const ConvFilters& filters);

}  // namespace wavelift
