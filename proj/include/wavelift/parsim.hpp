#pragma once

// Deterministic simulator of the tiled work-group execution model: image
// tiles with halo rings mapped to work-groups, one simulated thread per
// coefficient quadruple, explicit barrier epochs, single/double buffering,
// race-hazard detection, and the static local-memory traffic/occupancy
// models.
//
// Execution model. The component grid is partitioned into core tiles; each
// tile's local buffer covers the core plus a halo ring, and every buffer
// cell holds one coefficient quadruple owned by one simulated thread.
// Epoch 0 loads the quadruples from the input planes (the load acts as a
// pseudo-step preceding all scheme steps); every step flagged needs_barrier
// executes a barrier, which snapshots the buffer and starts a new epoch.
// Within an epoch a thread's reads at offset (0,0) come from its own
// registers (current values), while reads at any non-zero offset come from
// the snapshot taken at the epoch boundary. Writes always target the
// thread's own cell. Core cells are harvested at the end; halo threads
// compute alongside but their results are discarded.
//
// Hazards. A non-zero-offset read is a race hazard when the same epoch
// contains an *earlier* write (including the load) to the read cell: the
// reader observes the stale snapshot where the in-order reference semantics
// require the written value, and on real hardware the outcome would depend
// on thread timing. A write at the same or a later step of the epoch is
// harmless under double buffering (the reader's buffer is never touched)
// and is covered under single buffering by the read/write phase split
// barrier that the simulator inserts for any epoch whose cross-read
// components intersect its written components. Those split barriers are
// counted in barriers_executed only in single-buffered mode.

#include "wavelift/schemes.hpp"
#include "wavelift/transform.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wavelift {

enum class Buffering { single_buffered, double_buffered };

std::string buffering_name(Buffering b);                        // "single" / "double"
std::optional<Buffering> parse_buffering(const std::string&);   // inverse

struct TileConfig {
    int tile_w = 8;  // core tile width, component-grid units; even positive
    int tile_h = 8;  // core tile height, component-grid units; even positive
    int halo = -1;   // halo ring width; negative selects required_halo(scheme)
    Buffering buffering = Buffering::double_buffered;
};

struct HazardRecord {
    int step = 0;           // index into effective_steps of the reading step
    int reader_thread = 0;
    int component = 0;      // component of the read cell
    int cell_row = 0;       // component-grid coordinates of the read cell
    int cell_col = 0;
    int writer_thread = 0;  // thread owning (and writing) the read cell
};

struct ExecTrace {
    int barriers_executed = 0;  // includes split barriers in single mode
    int split_barriers = 0;     // single-buffer read/write phase barriers
    std::vector<HazardRecord> hazards;

    // Static per-quadruple models (see traffic_report / cells_report).
    long local_reads = 0;
    long local_writes = 0;
    int cells_per_quadruple = 0;

    std::vector<int> step_epochs;  // epoch index per effective step
    std::vector<std::string> step_labels;
    int epochs = 0;  // total epoch count (load epoch included)

    bool race_free() const { return hazards.empty(); }
    std::string to_json() const;
};

// The steps the simulator executes: the scheme's own list, or the single
// full-matrix step reassembled from the four 2-D filters for a Convolution
// scheme (charged its one initial data-availability barrier).
std::vector<Step> effective_steps(const Scheme& scheme);

// Minimal halo ring width for exact core results: per-component directional
// dependency reach composed across all steps (a step's output reach is the
// maximum over its taps of the source component's reach shifted by the read
// offset). At least the maximum single-step shift; strictly more when later
// steps read components whose values already depend on shifted neighbours.
int required_halo(const Scheme& scheme);

// Returns the scheme with the n-th barrier flag (1-based, counted over
// barrier-flagged steps) cleared — the negative-control knob for hazard
// detection. Throws std::invalid_argument when n is out of range.
Scheme break_barrier(const Scheme& scheme, int n);

// Runs the scheme over the image (scaling excluded) under the tiling
// config. Returns the harvested component planes and the execution trace.
// For step schemes the returned planes equal transform.forward of the same
// boundary mode whenever the trace is race-free. A Convolution scheme is
// executed as its reassembled polyphase step, which under the symmetric
// boundary mirrors on the component grid where the direct convolution path
// mirrors on the image grid: the planes then agree with forward away from
// image borders only (under the periodic boundary they agree everywhere).
// Throws std::invalid_argument on odd image dimensions, non-even/
// non-positive tile dimensions, or a halo below required_halo(scheme).
std::pair<QuadGrid, ExecTrace> simulate(const Image& img, const Scheme& scheme,
                                        const TileConfig& cfg,
                                        BoundaryMode boundary = BoundaryMode::periodic);

// The trace's recorded races: reads whose cell was written earlier in the
// reader's own epoch by another thread.
const std::vector<HazardRecord>& detect_hazards(const ExecTrace& trace);

// Static local-memory traffic model, per thread over the whole scheme.
// Reads: distinct (component, offset, value-version) fetches from shared
// storage, where offset-(0,0) operands are register-resident and free, and
// a fetched value stays cached until the component is rewritten. Writes:
// values published to shared storage, i.e. loaded or computed values that
// some neighbouring thread fetches; values only ever used by their own
// thread stay in registers and are not counted.
struct TrafficReport {
    long reads = 0;
    long writes = 0;
};
TrafficReport traffic_report(const Scheme& scheme, const TileConfig& cfg);

// Static peak of simultaneously-live shared cells per thread under the
// config's buffering mode. A published value lives from the epoch after its
// birth until the epoch of its last fetch. Double buffering keeps an
// epoch's inputs and its published outputs in separate cells; single
// buffering lets outputs reuse the cells of values that die in the same
// epoch. An idle scheme still holds one resident cell.
int cells_report(const Scheme& scheme, const TileConfig& cfg);

}  // namespace wavelift
