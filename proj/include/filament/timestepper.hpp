#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "filament/diagnostics.hpp"
#include "filament/geometry.hpp"

namespace filament {

enum class Preset { asymmetric, notched_arc, semicircle, equilibrium, custom };

std::string preset_name(Preset p);
Preset preset_from_name(const std::string& name);  // throws ConfigError

struct InitialCondition {
    Preset preset = Preset::asymmetric;
    // asymmetric: Y = sin s - a exp(-(s-d)^2/(2w^2)) sin^2 s
    double a = 0.5;
    double d = 0.4 * pi;
    double w = 0.12 * pi;
    // notched_arc: apex height h, notch width s_w, notch depth s_d (no default)
    double h = 1.7;
    double s_w = 0.06;
    std::optional<double> s_d;
    // equilibrium
    double c = 0.0;
    // custom
    Curve samples;
};

/// Throws ConfigError for invalid preset parameters.
Filament make_initial(const InitialCondition& ic, std::size_t n);

struct StepHooks {
    bool zero_remainder = false;  // pure linear flow
    bool euler_stage = false;     // corrector reuses R(X_n) instead of R(X_{n+1/2})
};

struct SimConfig {
    std::size_t n_nodes = 512;
    double dt = 0.01;
    double t_final = 10.0;
    InitialCondition ic;
    long snapshot_every = 100;
    GeometricBounds bounds;
    long geometry_check_every = 1;
    bool record_diagnostics = true;
    std::map<std::string, double> tolerances;
    StepHooks hooks;

    /// Throws ConfigError.
    void validate() const;
    double tolerance(const std::string& name, double fallback) const;
};

struct TrajectoryState {
    Filament filament;
    long step = 0;
    double time = 0.0;
    DiagnosticsRecord diagnostics;
    double reference_area = 0.0;  // area at step 0; 0 means "use this state"
};

struct StepOutput {
    Filament next;
    Curve remainder_at_input;
};

/// One exponential-midpoint step of size h.
StepOutput advance(const Filament& x, double h, const StepHooks& hooks = {});

/// Checks star norm, reflected-ratio bound and the C^{1,1/2} surrogate;
/// throws GeometryViolation naming the failed invariant.
void check_geometry(const Filament& f, const GeometricBounds& bounds, long step);

/// Checks the input state, then advances it by cfg.dt.
TrajectoryState step(const TrajectoryState& state, const SimConfig& cfg);

struct SimResult {
    std::vector<TrajectoryState> snapshots;
    std::vector<DiagnosticsRecord> diagnostics;
    std::optional<Filament> final_state;
    bool aborted = false;
    std::string violated_invariant;
    long violation_step = -1;
    std::string message;
    double max_area_drift() const;
};

/// ceil(t_final/dt) steps, the last one clipped to land on t_final.
SimResult simulate(const SimConfig& cfg);

/// Steps x0 to t_final without diagnostics or geometry checks.
Filament integrate(const Filament& x0, double dt, double t_final, const StepHooks& hooks = {});

struct OrderResult {
    double order = 0.0;
    double diff_coarse = 0.0;  // |X(dt) - X(dt/2)|_inf
    double diff_fine = 0.0;    // |X(dt/2) - X(dt/4)|_inf
};

/// Self-convergence with dt, dt/2, dt/4; order = log2(diff_coarse/diff_fine).
OrderResult second_order_check(const SimConfig& cfg);

}  // namespace filament
