#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "snow/grid.hpp"

namespace snow {

/// Complete growth record of one cell, assembled from the trace tables.
struct FreezeEvent {
    AxialCoord cell;
    std::int64_t first_boundary = -1;  ///< B: first step with a frozen neighbor
    std::int64_t freeze_time = -1;     ///< T: first step with s >= 1
    AxialCoord source;                 ///< neighbor whose freezing caused B
    DirectionAngle angle = DirectionAngle::M90;
    bool has_source = false;           ///< false only for the seed cell
};

/// One step's newly-boundary record.
struct BoundaryHit {
    std::int32_t cell = -1;     ///< dense cell index
    std::int32_t source = -1;   ///< dense index of the source neighbor
    DirectionAngle angle = DirectionAngle::M90;
    bool tie = false;           ///< several neighbors froze this same step
};

/// Events produced by one step, as dense cell indices.
struct StepEvents {
    std::vector<std::int32_t> frozen;
    std::vector<BoundaryHit> became_boundary;
};

/// Cheap per-step audit values recorded by run().
struct StepDiagnostics {
    std::int64_t t = 0;                       ///< time after the step
    std::int32_t frozen_cells = 0;
    std::int32_t max_frozen_ring = 0;
    double total_water = 0.0;
    /// max |ds - gamma| over cells classified frozen at step start
    double frozen_growth_error = 0.0;
    /// |sum s before redistribution - after|; 0 when the phase is skipped
    double redistribution_drift = 0.0;
    /// non-edge nonreceptive cells that gained water this step (> 1e-15)
    std::int32_t nr_water_gain_cells = 0;
};

enum class StopReason : std::uint8_t {
    MarginReached,     ///< a frozen cell reached ring R - stop_margin
    BudgetExhausted,   ///< max_steps hit first
};

/// Everything a finished (or persisted) run exposes to analysis: per-cell
/// event tables, per-step diagnostics, and optionally the final state.
struct SimTrace {
    std::shared_ptr<const HexIndex> geo;
    SimParams params;
    std::int64_t steps = 0;
    StopReason stop_reason = StopReason::BudgetExhausted;

    // Per-cell tables, -1 = never happened. source is a dense cell index
    // (-1 for the seed). angle is the DirectionAngle value or -1.
    std::vector<std::int64_t> first_boundary;
    std::vector<std::int64_t> freeze_time;
    std::vector<std::int32_t> source;
    std::vector<std::int8_t> angle;
    std::vector<std::uint8_t> source_tie;

    std::vector<StepDiagnostics> diagnostics;
    std::optional<GridState> final_state;

    const HexIndex& index() const { return *geo; }

    bool frozen(AxialCoord c) const;
    bool ever_boundary(AxialCoord c) const;
    /// Full record for a frozen cell; throws std::domain_error otherwise.
    FreezeEvent freeze_event(AxialCoord c) const;

    /// Empty trace with tables sized for the grid (test/build hook).
    static SimTrace empty(std::shared_ptr<const HexIndex> geo, SimParams params);
};

/// Initial condition: s = 1 at the origin, beta elsewhere, classification
/// and u/v partition applied, t = 0. Validates params.
GridState init_state(const SimParams& params);

/// Recomputes every cell's class from the current s field and its frozen
/// neighbors, then partitions: receptive cells get v = s, u = 0;
/// nonreceptive cells get u = s, v = 0. Edge cells are always nonreceptive.
void classify_and_partition(GridState& g);

/// Constant addition: v + gamma for receptive cells, 0 for the rest.
std::vector<double> add_vapor(const GridState& g);

/// Relaxation step u + (alpha/2)(mean of neighbors - u) for non-edge cells,
/// reading only pre-step values; edge cells are reset to beta. The neighbor
/// mean is evaluated in a symmetry-invariant order, so symmetric states stay
/// bitwise symmetric.
std::vector<double> diffuse(const GridState& g);

/// s := u_plus + v_plus, stores the intermediate fields, increments t.
/// Classification is NOT recomputed here.
void combine(GridState& g, std::span<const double> u_plus, std::span<const double> v_plus);

/// One full synchronous step: classify/partition, vapor + diffusion from one
/// snapshot, combine, shell redistribution when epsilon > 0, then event
/// detection. Returns the step's events; fills *diag when given.
StepEvents step(GridState& g, StepDiagnostics* diag = nullptr);

/// Assembles trace tables from step() events. run() drives this; use it
/// directly when a custom stopping rule is needed.
class TraceRecorder {
public:
    /// Seeds the t = 0 records (the frozen seed and its six neighbors).
    explicit TraceRecorder(const GridState& initial);

    /// Folds one step's events and diagnostics into the tables; call with
    /// the state as it is right after that step.
    void absorb(const GridState& g, const StepEvents& events, const StepDiagnostics& diag);

    /// Hands the finished trace over, attaching the final state.
    SimTrace finish(GridState&& final_state, StopReason reason);

private:
    SimTrace trace_;
};

/// Runs step() until a frozen cell reaches ring R - stop_margin or the step
/// budget runs out, collecting event tables and per-step diagnostics.
SimTrace run(const SimParams& params);

}  // namespace snow
