#include "wavelift/parsim.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace wavelift {

std::string buffering_name(Buffering b) {
    return b == Buffering::single_buffered ? "single" : "double";
}

std::optional<Buffering> parse_buffering(const std::string& s) {
    if (s == "single") return Buffering::single_buffered;
    if (s == "double") return Buffering::double_buffered;
    return std::nullopt;
}

std::vector<Step> effective_steps(const Scheme& scheme) {
    if (scheme.kind == SchemeKind::Convolution && scheme.steps.empty()) {
        Step s;
        s.matrix = conv_polyphase_matrix(scheme.conv_filters.value());
        s.needs_barrier = true;
        s.label = "N(conv)";
        return {s};
    }
    return scheme.steps;
}

namespace {

constexpr int kLoadStep = -1;  // the epoch-0 quadruple load pseudo-step

bool row_is_identity(const StepMatrix& m, int r) {
    for (int c = 0; c < 4; ++c) {
        const LaurentPoly2& e = m.entry(r, c);
        if (r == c ? !e.is_one() : !e.is_zero()) return false;
    }
    return true;
}

struct StepStat {
    int epoch = 0;
    std::array<bool, 4> writes{};       // non-identity output rows
    std::array<bool, 4> cross_reads{};  // components read at non-zero offset
    std::array<bool, 4> stale_src{};    // cross-reads of these components race
};

struct Analysis {
    std::vector<StepStat> stats;
    int epoch_count = 1;
    int explicit_barriers = 0;
    int split_barriers = 0;  // single-buffer read/write phase splits
    long reads = 0;          // traffic model, per quadruple
    long writes = 0;
    int cells_single = 1;
    int cells_double = 1;
};

Analysis analyze(const std::vector<Step>& steps) {
    Analysis a;
    a.stats.resize(steps.size());

    // Epochs and per-step read/write footprints.
    int epoch = 0;
    for (std::size_t s = 0; s < steps.size(); ++s) {
        if (steps[s].needs_barrier) {
            ++epoch;
            ++a.explicit_barriers;
        }
        StepStat& st = a.stats[s];
        st.epoch = epoch;
        const StepMatrix& m = steps[s].matrix;
        for (int r = 0; r < 4; ++r) {
            if (row_is_identity(m, r)) continue;
            st.writes[r] = true;
            for (int c = 0; c < 4; ++c)
                for (const auto& term : m.entry(r, c).terms())
                    if (term.first.first != 0 || term.first.second != 0)
                        st.cross_reads[c] = true;
        }
    }
    a.epoch_count = epoch + 1;

    // Stale-read classification and phase-split needs, per epoch. A cross-
    // read races when an earlier step of the same epoch (the load included)
    // wrote the read component: in-order semantics require the new value but
    // the reader holds the epoch-start snapshot. Writes at the same or later
    // steps are covered by buffering (double) or the phase split (single).
    for (int e = 0; e < a.epoch_count; ++e) {
        std::array<bool, 4> has_write{}, cross{}, written{};
        if (e == 0) has_write = written = {true, true, true, true};  // load
        for (std::size_t s = 0; s < steps.size(); ++s) {
            if (a.stats[s].epoch != e) continue;
            for (int c = 0; c < 4; ++c)
                if (a.stats[s].cross_reads[c]) {
                    cross[c] = true;
                    if (has_write[c]) a.stats[s].stale_src[c] = true;
                }
            for (int r = 0; r < 4; ++r)
                if (a.stats[s].writes[r]) has_write[r] = written[r] = true;
        }
        for (int c = 0; c < 4; ++c)
            if (cross[c] && written[c]) {
                ++a.split_barriers;
                break;
            }
    }

    // Traffic model: distinct (component, offset, version) fetches, with
    // offset-(0,0) operands register-resident; a fetch stays cached until
    // the component's version bumps. A value counts as written to shared
    // storage only if some neighbour fetches it.
    std::array<int, 4> version{0, 0, 0, 0};
    std::map<std::pair<int, int>, int> birth;       // (comp, ver) -> epoch
    std::map<std::pair<int, int>, int> last_fetch;  // (comp, ver) -> epoch
    std::set<std::tuple<int, int, int, int>> fetched;
    for (int c = 0; c < 4; ++c) birth[{c, 0}] = 0;
    for (std::size_t s = 0; s < steps.size(); ++s) {
        const StepStat& st = a.stats[s];
        const StepMatrix& m = steps[s].matrix;
        for (int r = 0; r < 4; ++r) {
            if (!st.writes[r]) continue;
            for (int c = 0; c < 4; ++c)
                for (const auto& term : m.entry(r, c).terms()) {
                    const int dr = -term.first.second, dc = -term.first.first;
                    if (dr == 0 && dc == 0) continue;
                    fetched.insert({c, dr, dc, version[c]});
                    auto [it, inserted] =
                        last_fetch.try_emplace({c, version[c]}, st.epoch);
                    if (!inserted) it->second = std::max(it->second, st.epoch);
                }
        }
        for (int r = 0; r < 4; ++r)
            if (st.writes[r]) {
                ++version[r];
                birth[{r, version[r]}] = st.epoch;
            }
    }
    a.reads = static_cast<long>(fetched.size());
    a.writes = static_cast<long>(last_fetch.size());

    // Peak simultaneously-live shared cells. A published value occupies a
    // cell from the epoch after its birth through the epoch of its last
    // fetch; double buffering holds an epoch's live inputs next to its
    // published outputs, single buffering reuses the cells of values whose
    // last fetch happens in the same epoch.
    int peak_single = 0, peak_double = 0;
    for (int e = 0; e < a.epoch_count; ++e) {
        int live = 0, dying = 0, born = 0;
        for (const auto& [key, death] : last_fetch) {
            const int b = birth.at(key);
            if (b < e && e <= death) {
                ++live;
                if (death == e) ++dying;
            }
            if (b == e) ++born;
        }
        peak_double = std::max(peak_double, live + born);
        peak_single = std::max({peak_single, live, live - dying + born});
    }
    a.cells_double = std::max(1, peak_double);
    a.cells_single = std::max(1, peak_single);
    return a;
}

struct Tile {
    int r0 = 0, c0 = 0;  // core origin on the component grid
    int ch = 0, cw = 0;  // core size (clamped at the grid edge)
    int lh = 0, lw = 0;  // local buffer size (core + 2*halo)
    int thread_base = 0;
    std::array<std::vector<double>, 4> cur, prev;
    std::vector<char> active;
    std::vector<int> grow, gcol;  // global coords per local cell (-1 inactive)
};

}  // namespace

int required_halo(const Scheme& scheme) {
    const std::vector<Step> steps = effective_steps(scheme);
    // reach[c][d]: how far component c's current value depends on loaded
    // cells in direction d (0 up, 1 down, 2 left, 3 right). Signed: a value
    // may depend only on one side. Composing a step shifts each source
    // component's cone by the read offset and takes the per-row maximum.
    long reach[4][4] = {};
    for (const Step& step : steps) {
        const StepMatrix& m = step.matrix;
        long next[4][4];
        std::copy(&reach[0][0], &reach[0][0] + 16, &next[0][0]);
        for (int r = 0; r < 4; ++r) {
            if (row_is_identity(m, r)) continue;
            long best[4] = {};
            bool first = true;
            for (int c = 0; c < 4; ++c)
                for (const auto& term : m.entry(r, c).terms()) {
                    const long dr = -term.first.second, dc = -term.first.first;
                    const long cand[4] = {reach[c][0] - dr, reach[c][1] + dr,
                                          reach[c][2] - dc, reach[c][3] + dc};
                    for (int d = 0; d < 4; ++d)
                        best[d] = first ? cand[d] : std::max(best[d], cand[d]);
                    first = false;
                }
            if (!first)
                for (int d = 0; d < 4; ++d) next[r][d] = best[d];
        }
        std::copy(&next[0][0], &next[0][0] + 16, &reach[0][0]);
    }
    long halo = 0;
    for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) halo = std::max(halo, reach[c][d]);
    return static_cast<int>(halo);
}

Scheme break_barrier(const Scheme& scheme, int n) {
    Scheme broken = scheme;
    broken.steps = effective_steps(scheme);
    int seen = 0;
    for (Step& step : broken.steps) {
        if (!step.needs_barrier) continue;
        if (++seen == n) {
            step.needs_barrier = false;
            return broken;
        }
    }
    throw std::invalid_argument("barrier index out of range: " + std::to_string(n) +
                                " of " + std::to_string(seen));
}

std::pair<QuadGrid, ExecTrace> simulate(const Image& img, const Scheme& scheme,
                                        const TileConfig& cfg, BoundaryMode boundary) {
    if (img.width <= 0 || img.height <= 0 || img.width % 2 != 0 || img.height % 2 != 0)
        throw std::invalid_argument("simulate requires even positive image dimensions");
    if (cfg.tile_w <= 0 || cfg.tile_h <= 0 || cfg.tile_w % 2 != 0 || cfg.tile_h % 2 != 0)
        throw std::invalid_argument("tile dimensions must be even and positive");

    const std::vector<Step> steps = effective_steps(scheme);
    const int needed = required_halo(scheme);
    const int halo = cfg.halo < 0 ? needed : cfg.halo;
    if (halo < needed)
        throw std::invalid_argument("insufficient halo: " + std::to_string(halo) +
                                    " provided, scheme requires " + std::to_string(needed));

    const Analysis an = analyze(steps);
    const QuadGrid input = polyphase_split(img);
    const int W = input.w, H = input.h;

    // Tiles partition the component grid; edge tiles are clamped. Each local
    // buffer cell is one simulated thread. Periodic wrapping happens at load
    // time, so halo copies of a cell evolve exactly like the original;
    // symmetric mode leaves out-of-image positions inactive and mirrors
    // boundary reads back into the buffer.
    std::vector<Tile> tiles;
    int next_thread = 0;
    for (int r0 = 0; r0 < H; r0 += cfg.tile_h)
        for (int c0 = 0; c0 < W; c0 += cfg.tile_w) {
            Tile t;
            t.r0 = r0;
            t.c0 = c0;
            t.ch = std::min(cfg.tile_h, H - r0);
            t.cw = std::min(cfg.tile_w, W - c0);
            t.lh = t.ch + 2 * halo;
            t.lw = t.cw + 2 * halo;
            t.thread_base = next_thread;
            next_thread += t.lh * t.lw;
            const std::size_t n = static_cast<std::size_t>(t.lh) * t.lw;
            for (int comp = 0; comp < 4; ++comp) {
                t.cur[comp].assign(n, 0.0);
                t.prev[comp].assign(n, 0.0);
            }
            t.active.assign(n, 0);
            t.grow.assign(n, -1);
            t.gcol.assign(n, -1);
            for (int lr = 0; lr < t.lh; ++lr)
                for (int lc = 0; lc < t.lw; ++lc) {
                    const int gr = r0 - halo + lr;
                    const int gc = c0 - halo + lc;
                    const std::size_t i = static_cast<std::size_t>(lr) * t.lw + lc;
                    if (boundary == BoundaryMode::periodic) {
                        t.grow[i] = resolve_index(gr, H, boundary);
                        t.gcol[i] = resolve_index(gc, W, boundary);
                        t.active[i] = 1;
                    } else if (gr >= 0 && gr < H && gc >= 0 && gc < W) {
                        t.grow[i] = gr;
                        t.gcol[i] = gc;
                        t.active[i] = 1;
                    }
                    if (t.active[i])
                        for (int comp = 0; comp < 4; ++comp)
                            t.cur[comp][i] = input.at(comp, t.grow[i], t.gcol[i]);
                }
            tiles.push_back(std::move(t));
        }

    ExecTrace trace;
    for (std::size_t s = 0; s < steps.size(); ++s) {
        trace.step_epochs.push_back(an.stats[s].epoch);
        trace.step_labels.push_back(steps[s].label);
    }
    trace.epochs = an.epoch_count;
    trace.split_barriers =
        cfg.buffering == Buffering::single_buffered ? an.split_barriers : 0;
    trace.barriers_executed = an.explicit_barriers + trace.split_barriers;
    trace.local_reads = an.reads;
    trace.local_writes = an.writes;
    trace.cells_per_quadruple =
        cfg.buffering == Buffering::single_buffered ? an.cells_single : an.cells_double;

    // Execution. The phase-split barrier changes neither values nor order,
    // so single- and double-buffered runs share this loop; only the counts
    // above differ. Reads resolve identically to apply_step, keeping the
    // accumulation order bitwise equal to the reference transform.
    std::vector<std::pair<int, std::size_t>> seen;  // hazard dedup per thread-step
    for (std::size_t s = 0; s < steps.size(); ++s) {
        if (steps[s].needs_barrier)
            for (Tile& t : tiles) t.prev = t.cur;
        const StepStat& st = an.stats[s];
        const StepMatrix& m = steps[s].matrix;
        for (Tile& t : tiles) {
            const auto cross_read = [&](std::size_t i, int lr, int lc, int src, int dr,
                                        int dc) -> double {
                int tlr, tlc, cell_r, cell_c;
                if (boundary == BoundaryMode::periodic) {
                    tlr = lr + dr;
                    tlc = lc + dc;
                    if (tlr < 0 || tlr >= t.lh || tlc < 0 || tlc >= t.lw)
                        return 0.0;  // outermost halo thread; result discarded
                    const std::size_t ti = static_cast<std::size_t>(tlr) * t.lw + tlc;
                    cell_r = t.grow[ti];
                    cell_c = t.gcol[ti];
                } else {
                    cell_r = resolve_index(t.grow[i] + dr, H, boundary);
                    cell_c = resolve_index(t.gcol[i] + dc, W, boundary);
                    tlr = cell_r - (t.r0 - halo);
                    tlc = cell_c - (t.c0 - halo);
                    if (tlr < 0 || tlr >= t.lh || tlc < 0 || tlc >= t.lw)
                        return 0.0;
                }
                const std::size_t ti = static_cast<std::size_t>(tlr) * t.lw + tlc;
                if (st.stale_src[src]) {
                    const auto key = std::make_pair(src, ti);
                    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
                        seen.push_back(key);
                        trace.hazards.push_back(
                            {static_cast<int>(s), t.thread_base + static_cast<int>(i),
                             src, cell_r, cell_c,
                             t.thread_base + static_cast<int>(ti)});
                    }
                }
                return t.prev[src][ti];
            };

            for (int lr = 0; lr < t.lh; ++lr)
                for (int lc = 0; lc < t.lw; ++lc) {
                    const std::size_t i = static_cast<std::size_t>(lr) * t.lw + lc;
                    if (!t.active[i]) continue;
                    double regs[4], out[4];
                    for (int comp = 0; comp < 4; ++comp) regs[comp] = t.cur[comp][i];
                    seen.clear();
                    for (int comp = 0; comp < 4; ++comp) {
                        double acc = 0.0;
                        for (int src = 0; src < 4; ++src) {
                            const LaurentPoly2& entry = m.entry(comp, src);
                            if (entry.is_zero()) continue;
                            if (comp == src && entry.is_one()) {
                                acc += regs[src];
                                continue;
                            }
                            for (const auto& [exp, coeff] : entry.terms()) {
                                const int dr = -exp.second, dc = -exp.first;
                                const double v = (dr == 0 && dc == 0)
                                                     ? regs[src]
                                                     : cross_read(i, lr, lc, src, dr, dc);
                                acc += coeff.to_double() * v;
                            }
                        }
                        out[comp] = acc;
                    }
                    for (int comp = 0; comp < 4; ++comp) t.cur[comp][i] = out[comp];
                }
        }
    }

    QuadGrid out(W, H);
    for (const Tile& t : tiles)
        for (int lr = halo; lr < halo + t.ch; ++lr)
            for (int lc = halo; lc < halo + t.cw; ++lc) {
                const std::size_t i = static_cast<std::size_t>(lr) * t.lw + lc;
                for (int comp = 0; comp < 4; ++comp)
                    out.at(comp, t.r0 + lr - halo, t.c0 + lc - halo) = t.cur[comp][i];
            }
    return {std::move(out), std::move(trace)};
}

const std::vector<HazardRecord>& detect_hazards(const ExecTrace& trace) {
    return trace.hazards;
}

TrafficReport traffic_report(const Scheme& scheme, const TileConfig&) {
    const Analysis a = analyze(effective_steps(scheme));
    return {a.reads, a.writes};
}

int cells_report(const Scheme& scheme, const TileConfig& cfg) {
    const Analysis a = analyze(effective_steps(scheme));
    return cfg.buffering == Buffering::single_buffered ? a.cells_single : a.cells_double;
}

std::string ExecTrace::to_json() const {
    nlohmann::json j;
    j["barriers"] = barriers_executed;
    j["split_barriers"] = split_barriers;
    j["epochs"] = epochs;
    j["race_free"] = race_free();
    j["local_reads"] = local_reads;
    j["local_writes"] = local_writes;
    j["cells_per_quadruple"] = cells_per_quadruple;
    nlohmann::json steps = nlohmann::json::array();
    for (std::size_t i = 0; i < step_epochs.size(); ++i)
        steps.push_back({{"index", i},
                         {"label", i < step_labels.size() ? step_labels[i] : ""},
                         {"epoch", step_epochs[i]}});
    j["steps"] = std::move(steps);
    nlohmann::json hz = nlohmann::json::array();
    for (const HazardRecord& h : hazards)
        hz.push_back({{"step", h.step},
                      {"reader_thread", h.reader_thread},
                      {"cell",
                       {{"component", h.component}, {"row", h.cell_row}, {"col", h.cell_col}}},
                      {"writer_thread", h.writer_thread}});
    j["hazards"] = std::move(hz);
    return j.dump(2);
}

}  // namespace wavelift
