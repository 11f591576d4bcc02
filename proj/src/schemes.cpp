#include "wavelift/schemes.hpp"

#include <stdexcept>

namespace wavelift {

const std::vector<SchemeKind>& all_scheme_kinds() {
    static const std::vector<SchemeKind> kinds = {
        SchemeKind::Sweldens,    SchemeKind::Iwahashi,  SchemeKind::IwahashiStar,
        SchemeKind::Explosive,   SchemeKind::ExplosiveStar, SchemeKind::Monolithic,
        SchemeKind::MonolithicStar, SchemeKind::Polyphase, SchemeKind::PolyphaseStar,
        SchemeKind::Convolution,
    };
    return kinds;
}

std::string scheme_name(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::Sweldens: return "sweldens";
        case SchemeKind::Iwahashi: return "iwahashi";
        case SchemeKind::IwahashiStar: return "iwahashi_star";
        case SchemeKind::Explosive: return "explosive";
        case SchemeKind::ExplosiveStar: return "explosive_star";
        case SchemeKind::Monolithic: return "monolithic";
        case SchemeKind::MonolithicStar: return "monolithic_star";
        case SchemeKind::Polyphase: return "polyphase";
        case SchemeKind::PolyphaseStar: return "polyphase_star";
        case SchemeKind::Convolution: return "convolution";
    }
    return "?";
}

std::optional<SchemeKind> parse_scheme(const std::string& name) {
    for (SchemeKind kind : all_scheme_kinds())
        if (scheme_name(kind) == name) return kind;
    return std::nullopt;
}

namespace {

void push_step(std::vector<Step>& steps, MatrixKind mk, const MatrixKindParams& params,
               bool needs_barrier, const std::string& label) {
    StepMatrix m = build_matrix(mk, params);
    if (m.is_identity()) return;  // degenerate step (zero operator): omitted
    m.set_needs_barrier(needs_barrier);
    steps.push_back(Step{std::move(m), needs_barrier, label});
}

void append_base_stage(std::vector<Step>& steps, SchemeKind kind, const LiftingStage& stage) {
    const LaurentPoly1 zero = LaurentPoly1::zero(stage.predict.mode());
    const MatrixKindParams p{stage.predict, zero};
    const MatrixKindParams u{zero, stage.update};
    const MatrixKindParams pu{stage.predict, stage.update};
    switch (kind) {
        case SchemeKind::Sweldens:
            push_step(steps, MatrixKind::T_H, p, true, "T_H");
            push_step(steps, MatrixKind::T_V, p, true, "T_V");
            push_step(steps, MatrixKind::S_H, u, true, "S_H");
            push_step(steps, MatrixKind::S_V, u, true, "S_V");
            break;
        case SchemeKind::Iwahashi:
            push_step(steps, MatrixKind::T_I, p, true, "T_I");
            push_step(steps, MatrixKind::R_I, pu, true, "R_I");
            push_step(steps, MatrixKind::S_I, u, true, "S_I");
            break;
        case SchemeKind::Explosive:
            push_step(steps, MatrixKind::T_E, p, true, "T_E");
            push_step(steps, MatrixKind::R_E, pu, true, "R_E");
            push_step(steps, MatrixKind::S_E, u, true, "S_E");
            break;
        case SchemeKind::Monolithic:
            push_step(steps, MatrixKind::T_MONO, p, true, "T_P");
            push_step(steps, MatrixKind::S_MONO, u, true, "S_U");
            break;
        case SchemeKind::Polyphase:
            push_step(steps, MatrixKind::N_FULL, pu, true, "N");
            break;
        default:
            throw std::logic_error("append_base_stage: not a base kind");
    }
}

void append_star_stage(std::vector<Step>& steps, SchemeKind kind, const LiftingStage& stage) {
    const auto [p0, p1] = stage.predict.split_scalar();
    const auto [u0, u1] = stage.update.split_scalar();
    if (p0.is_zero() && u0.is_zero()) {
        // Nothing to hoist out of the barriers: the stage degenerates to the
        // base kind.
        switch (kind) {
            case SchemeKind::IwahashiStar: append_base_stage(steps, SchemeKind::Iwahashi, stage); return;
            case SchemeKind::ExplosiveStar: append_base_stage(steps, SchemeKind::Explosive, stage); return;
            case SchemeKind::MonolithicStar: append_base_stage(steps, SchemeKind::Monolithic, stage); return;
            case SchemeKind::PolyphaseStar: append_base_stage(steps, SchemeKind::Polyphase, stage); return;
            default: throw std::logic_error("append_star_stage: not a star kind");
        }
    }

    const LaurentPoly1 zero = LaurentPoly1::zero(stage.predict.mode());
    const MatrixKindParams scalar_p{p0, zero};
    const MatrixKindParams scalar_u{zero, u0};
    const MatrixKindParams res_p{p1, zero};
    const MatrixKindParams res_u{zero, u1};
    const MatrixKindParams res_pu{p1, u1};

    switch (kind) {
        case SchemeKind::IwahashiStar:
        case SchemeKind::ExplosiveStar: {
            const bool iwa = kind == SchemeKind::IwahashiStar;
            push_step(steps, MatrixKind::T_H, scalar_p, false, "T_H(P0)");
            push_step(steps, MatrixKind::T_V, scalar_p, false, "T_V(P0)");
            push_step(steps, iwa ? MatrixKind::T_I : MatrixKind::T_E, res_p, true,
                      iwa ? "T_I(P1)" : "T_E(P1)");
            push_step(steps, iwa ? MatrixKind::R_I : MatrixKind::R_E, res_pu, true,
                      iwa ? "R_I(P1,U1)" : "R_E(P1,U1)");
            push_step(steps, iwa ? MatrixKind::S_I : MatrixKind::S_E, res_u, true,
                      iwa ? "S_I(U1)" : "S_E(U1)");
            push_step(steps, MatrixKind::S_H, scalar_u, false, "S_H(U0)");
            push_step(steps, MatrixKind::S_V, scalar_u, false, "S_V(U0)");
            break;
        }
        case SchemeKind::MonolithicStar:
            // The leading fused predict reads spatial neighbours, so it keeps
            // the initial data barrier; the trailing scalar steps join its
            // epoch-mates without one.
            push_step(steps, MatrixKind::T_MONO, res_p, true, "T_P(P1)");
            push_step(steps, MatrixKind::T_H, scalar_p, false, "T_H(P0)");
            push_step(steps, MatrixKind::T_V, scalar_p, false, "T_V(P0)");
            push_step(steps, MatrixKind::S_MONO, res_u, true, "S_U(U1)");
            push_step(steps, MatrixKind::S_H, scalar_u, false, "S_H(U0)");
            push_step(steps, MatrixKind::S_V, scalar_u, false, "S_V(U0)");
            break;
        case SchemeKind::PolyphaseStar:
            push_step(steps, MatrixKind::T_H, scalar_p, false, "T_H(P0)");
            push_step(steps, MatrixKind::T_V, scalar_p, false, "T_V(P0)");
            push_step(steps, MatrixKind::N_FULL, res_pu, true, "N(P1,U1)");
            push_step(steps, MatrixKind::S_H, scalar_u, false, "S_H(U0)");
            push_step(steps, MatrixKind::S_V, scalar_u, false, "S_V(U0)");
            break;
        default:
            throw std::logic_error("append_star_stage: not a star kind");
    }
}

}  // namespace

Scheme build_scheme(SchemeKind kind, const WaveletSpec& wavelet) {
    Scheme scheme;
    scheme.kind = kind;
    scheme.wavelet = wavelet;
    if (kind == SchemeKind::Convolution) {
        scheme.conv_filters = conv2d_filters(wavelet);
        return scheme;
    }
    for (const LiftingStage& stage : wavelet.stages) {
        switch (kind) {
            case SchemeKind::Sweldens:
            case SchemeKind::Iwahashi:
            case SchemeKind::Explosive:
            case SchemeKind::Monolithic:
            case SchemeKind::Polyphase:
                append_base_stage(scheme.steps, kind, stage);
                break;
            case SchemeKind::IwahashiStar:
            case SchemeKind::ExplosiveStar:
            case SchemeKind::MonolithicStar:
            case SchemeKind::PolyphaseStar:
                append_star_stage(scheme.steps, kind, stage);
                break;
            case SchemeKind::Convolution:
                break;  // handled above
        }
    }
    return scheme;
}

long count_macs(const Scheme& scheme) {
    if (scheme.kind == SchemeKind::Convolution) {
        const ConvFilters& f = *scheme.conv_filters;
        return static_cast<long>(f.f_ll.tap_count()) + f.f_hl.tap_count() + f.f_lh.tap_count() +
               f.f_hh.tap_count();
    }
    long macs = 0;
    for (const Step& step : scheme.steps)
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                const LaurentPoly2& e = step.matrix.entry(r, c);
                if (r == c && e.is_one()) continue;  // identity diagonal is free
                macs += e.tap_count();
            }
    return macs;
}

int count_barriers(const Scheme& scheme) {
    if (scheme.kind == SchemeKind::Convolution) return 1;
    int n = 0;
    for (const Step& step : scheme.steps) n += step.needs_barrier ? 1 : 0;
    return n;
}

std::vector<CostReport> cost_table(const std::vector<WaveletSpec>& wavelets,
                                   const std::vector<SchemeKind>& kinds) {
    std::vector<CostReport> out;
    for (const WaveletSpec& w : wavelets)
        for (SchemeKind kind : kinds) {
            const Scheme scheme = build_scheme(kind, w);
            CostReport report;
            report.kind = kind;
            report.wavelet = w.name;
            report.barriers = count_barriers(scheme);
            report.macs = count_macs(scheme);
            if (kind == SchemeKind::Convolution && w.name == "dd137") {
                report.note =
                    "nonzero-tap count; the 13/7-sample filter supports contain interior zero "
                    "taps (11 and 5 nonzero), so a support-based count would give 400 instead";
            }
            out.push_back(std::move(report));
        }
    return out;
}

std::vector<StepMatrix> scheme_step_matrices(const Scheme& scheme) {
    if (scheme.kind == SchemeKind::Convolution)
        return {conv_polyphase_matrix(*scheme.conv_filters)};
    std::vector<StepMatrix> out;
    out.reserve(scheme.steps.size());
    for (const Step& step : scheme.steps) out.push_back(step.matrix);
    return out;
}

StepMatrix scheme_reference_matrix(const WaveletSpec& wavelet) {
    std::vector<StepMatrix> per_stage;
    per_stage.reserve(wavelet.stages.size());
    for (const LiftingStage& stage : wavelet.stages)
        per_stage.push_back(build_matrix(MatrixKind::N_FULL, {stage.predict, stage.update}));
    return product_in_application_order(per_stage);
}

}  // namespace wavelift
