#pragma once

// The ten named schemes as annotated step sequences, plus the cost model
// (multiply-accumulate and barrier counts).

#include "wavelift/polyphase.hpp"
#include "wavelift/wavelets.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wavelift {

enum class SchemeKind {
    Sweldens,
    Iwahashi,
    IwahashiStar,
    Explosive,
    ExplosiveStar,
    Monolithic,
    MonolithicStar,
    Polyphase,
    PolyphaseStar,
    Convolution,
};

// All kinds in canonical (cost-table row) order.
const std::vector<SchemeKind>& all_scheme_kinds();

std::string scheme_name(SchemeKind kind);                     // e.g. "iwahashi_star"
std::optional<SchemeKind> parse_scheme(const std::string&);   // inverse of scheme_name

struct Step {
    StepMatrix matrix;
    bool needs_barrier = true;
    std::string label;  // e.g. "T_H", "N(P1,U1)"
};

struct Scheme {
    SchemeKind kind;
    WaveletSpec wavelet;
    std::vector<Step> steps;                  // empty for Convolution
    std::optional<ConvFilters> conv_filters;  // set only for Convolution
};

// Assembles the step sequence of `kind` for `wavelet`. Multi-stage wavelets
// concatenate per-stage step lists in stage order (first stage applied
// first). Star kinds split each stage's operators into scalar and residual
// parts; scalar steps carry no barrier. A stage whose scalar parts are all
// zero degenerates to the base kind for that stage, and individual steps
// that reduce to the identity are omitted.
Scheme build_scheme(SchemeKind kind, const WaveletSpec& wavelet);

// Multiply-accumulate count: one per nonzero tap of every matrix entry that
// is not a diagonal constant 1; for Convolution, the sum of the four 2-D
// filter tap counts. The scaling step is excluded.
long count_macs(const Scheme& scheme);

// Number of steps flagged needs_barrier (Convolution is charged the single
// initial data-availability barrier).
int count_barriers(const Scheme& scheme);

struct CostReport {
    SchemeKind kind;
    std::string wavelet;
    int barriers = 0;
    long macs = 0;
    std::string note;  // set for cells that warrant a footnote
};

// Cartesian product of cost reports, wavelet-major, kinds in the given
// order (canonical row order when all_scheme_kinds() is passed).
std::vector<CostReport> cost_table(const std::vector<WaveletSpec>& wavelets,
                                   const std::vector<SchemeKind>& kinds);

// The step matrices to feed the identity check: the scheme's own matrices,
// or the polyphase reassembly of the four filters for Convolution.
std::vector<StepMatrix> scheme_step_matrices(const Scheme& scheme);

// Verification reference: product of the per-stage full polyphase matrices
// (first stage rightmost). Formed only at verification time to keep entries
// small for multi-stage wavelets.
StepMatrix scheme_reference_matrix(const WaveletSpec& wavelet);

}  // namespace wavelift
