#include "filament/timestepper.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "filament/equilibria.hpp"
#include "filament/errors.hpp"
#include "filament/remainder.hpp"
#include "filament/spectral.hpp"

namespace filament {
namespace {

// X_j - l_j per component, extended oddly.
std::array<PeriodicField, 2> odd_part(const Curve& x)
{
    return {odd_extend(component(x, 0)), odd_extend(component(x, 1))};
}

std::array<PeriodicField, 2> odd_fields(const Curve& v)
{
    return {odd_extend_vanishing(component(v, 0)), odd_extend_vanishing(component(v, 1))};
}

// Back to [0, pi] plus the chord. The odd projection puts exact zeros at
// the anchors, where the odd field vanishes analytically.
Filament restore(const std::array<PeriodicField, 2>& w, std::size_t n)
{
    const std::size_t m = 2 * n - 2;
    Curve out(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double chord = 1.0 - 2.0 * static_cast<double>(j) / static_cast<double>(n - 1);
        Vec2 odd = Vec2::Zero();
        if (j != 0 && j + 1 != n)
            for (int c = 0; c < 2; ++c)
                odd[c] = 0.5 * (w[c].values[j] - w[c].values[m - j]);
        out[j] = Vec2(chord, 0.0) + odd;
    }
    return Filament(std::move(out));
}

Curve remainder_or_zero(const Filament& x, const StepHooks& hooks)
{
    if (hooks.zero_remainder)
        return Curve(x.size(), Vec2::Zero());
    return remainder_assemble(x);
}

// S(a) w + b S(c) r
std::array<PeriodicField, 2> duhamel(const std::array<PeriodicField, 2>& w, double a,
                                     const std::array<PeriodicField, 2>& r, double b, double c)
{
    std::array<PeriodicField, 2> out;
    for (int k = 0; k < 2; ++k) {
        out[k] = semigroup_apply(w[k], a);
        const PeriodicField forced = semigroup_apply(r[k], c);
        for (std::size_t j = 0; j < out[k].size(); ++j)
            out[k].values[j] += b * forced.values[j];
    }
    return out;
}

double max_distance(const Filament& a, const Filament& b)
{
    double m = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j)
        m = std::max(m, (a[j] - b[j]).lpNorm<Eigen::Infinity>());
    return m;
}

}  // namespace

std::string preset_name(Preset p)
{
    switch (p) {
    case Preset::asymmetric: return "asymmetric";
    case Preset::notched_arc: return "notched_arc";
    case Preset::semicircle: return "semicircle";
    case Preset::equilibrium: return "equilibrium";
    case Preset::custom: return "custom";
    }
    return "unknown";
}

Preset preset_from_name(const std::string& name)
{
    for (Preset p : {Preset::asymmetric, Preset::notched_arc, Preset::semicircle, Preset::equilibrium, Preset::custom})
        if (preset_name(p) == name)
            return p;
    throw ConfigError("unknown initial-condition preset '" + name + "'");
}

Filament make_initial(const InitialCondition& ic, std::size_t n)
{
    switch (ic.preset) {
    case Preset::asymmetric: {
        if (!(ic.w > 0.0))
            throw ConfigError("asymmetric preset: w must be positive");
        const double a = ic.a, d = ic.d, w = ic.w;
        return Filament::sample(n, [=](double s) {
            const double sn = std::sin(s);
            return Vec2(std::cos(s), sn - a * std::exp(-(s - d) * (s - d) / (2.0 * w * w)) * sn * sn);
        });
    }
    case Preset::notched_arc: {
        if (!ic.s_d)
            throw ConfigError("notched_arc preset: s_d is required");
        if (!(ic.h > 0.0) || !(ic.s_w > 0.0))
            throw ConfigError("notched_arc preset: h and s_w must be positive");
        const double c = (ic.h * ic.h - 1.0) / (2.0 * ic.h);
        const double rc = std::hypot(1.0, c);
        const double phi0 = std::atan(-c);
        const double phi1 = pi - std::atan(-c);
        const double sd = *ic.s_d, sw = ic.s_w;
        return Filament::sample(n, [=](double s) {
            const double phi = phi0 + (phi1 - phi0) * s / pi;
            const double q = (s - pi / 2) / sw;
            const double notch = std::exp(-q * q) * std::sin(s);
            const double y_arc = c + rc * std::sin(phi) - sd * notch;
            return Vec2(rc * std::cos(phi), std::max(0.05 * std::sin(s), y_arc));
        });
    }
    case Preset::semicircle:
        return Filament::sample(n, [](double s) { return Vec2(std::cos(s), std::sin(s)); });
    case Preset::equilibrium:
        return equilibrium_arc(ic.c, n);
    case Preset::custom:
        if (ic.samples.size() != n)
            throw ConfigError("custom preset: sample count does not match n_nodes");
        try {
            return Filament(ic.samples);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("custom preset: ") + e.what());
        }
    }
    throw ConfigError("unknown preset");
}

void SimConfig::validate() const
{
    if (n_nodes < 4)
        throw ConfigError("n_nodes must be at least 4");
    if (!(dt > 0.0))
        throw ConfigError("dt must be positive");
    if (!(t_final >= dt))
        throw ConfigError("t_final must be at least dt");
    if (snapshot_every < 1 || geometry_check_every < 1)
        throw ConfigError("cadences must be positive");
    try {
        bounds.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

double SimConfig::tolerance(const std::string& name, double fallback) const
{
    const auto it = tolerances.find(name);
    return it == tolerances.end() ? fallback : it->second;
}

StepOutput advance(const Filament& x, double h, const StepHooks& hooks)
{
    const std::size_t n = x.size();
    const auto w = odd_part(x.nodes());
    Curve r0 = remainder_or_zero(x, hooks);
    const Filament half = restore(duhamel(w, h / 2, odd_fields(r0), h / 2, h / 2), n);
    const Curve r_mid = hooks.euler_stage ? r0 : remainder_or_zero(half, hooks);
    Filament next = restore(duhamel(w, h, odd_fields(r_mid), h, h / 2), n);
    return {std::move(next), std::move(r0)};
}

void check_geometry(const Filament& f, const GeometricBounds& bounds, long step)
{
    const std::string at = " at step " + std::to_string(step);
    double sn = 0.0;
    try {
        sn = star_norm(f, bounds);
    } catch (const GeometryError& e) {
        throw GeometryViolation("star_norm", step, e.what() + at);
    }
    if (!(sn >= bounds.m_bound))
        throw GeometryViolation("star_norm", step,
                                "star norm " + std::to_string(sn) + " below m_bound" + at);
    const RatioCheck rc = deltar_ratio_bound_check(f, bounds);
    if (!rc.passes)
        throw GeometryViolation("deltar_ratio", step,
                                "reflected ratio " + std::to_string(rc.min_ratio) + " below bound" + at);
    const double c1 = c1gamma_surrogate(f);
    if (!(c1 <= bounds.M_bound))
        throw GeometryViolation("c1gamma", step,
                                "C^{1,1/2} surrogate " + std::to_string(c1) + " above M_bound" + at);
}

TrajectoryState step(const TrajectoryState& state, const SimConfig& cfg)
{
    check_geometry(state.filament, cfg.bounds, state.step);
    StepOutput out = advance(state.filament, cfg.dt, cfg.hooks);
    const double area0 = state.reference_area > 0.0 ? state.reference_area : enclosed_area(state.filament);
    TrajectoryState next{std::move(out.next), state.step + 1, state.time + cfg.dt, {}, area0};
    next.diagnostics = record(next.filament, next.step, next.time, area0, cfg.bounds.sigma);
    return next;
}

double SimResult::max_area_drift() const
{
    double m = 0.0;
    for (const auto& r : diagnostics)
        m = std::max(m, r.area_rel_error);
    return m;
}

SimResult simulate(const SimConfig& cfg)
{
    cfg.validate();
    Filament x = make_initial(cfg.ic, cfg.n_nodes);
    const double area0 = enclosed_area(x);
    const double sigma = cfg.bounds.sigma;
    const long nsteps = std::max(1L, static_cast<long>(std::ceil(cfg.t_final / cfg.dt - 1e-9)));
    SimResult res;

    auto fail = [&](const GeometryViolation& e) {
        res.aborted = true;
        res.violated_invariant = e.invariant;
        res.violation_step = e.step;
        res.message = e.what();
    };

    try {
        check_geometry(x, cfg.bounds, 0);
    } catch (const GeometryViolation& e) {
        fail(e);
        res.final_state = x;
        return res;
    }

    double t = 0.0;
    for (long n = 0; n < nsteps; ++n) {
        const double h = (n + 1 == nsteps) ? cfg.t_final - t : cfg.dt;
        std::optional<StepOutput> out;
        try {
            out = advance(x, h, cfg.hooks);
        } catch (const GeometryError& e) {
            fail(GeometryViolation("kernel", n, e.what()));
            break;
        }
        DiagnosticsRecord rec;
        if (cfg.record_diagnostics) {
            rec = record(x, n, t, area0, sigma, out->remainder_at_input);
            res.diagnostics.push_back(rec);
        }
        if (n % cfg.snapshot_every == 0)
            res.snapshots.push_back({x, n, t, rec, area0});
        x = std::move(out->next);
        t = (n + 1 == nsteps) ? cfg.t_final : static_cast<double>(n + 1) * cfg.dt;
        if ((n + 1) % cfg.geometry_check_every == 0 || n + 1 == nsteps) {
            try {
                check_geometry(x, cfg.bounds, n + 1);
            } catch (const GeometryViolation& e) {
                fail(e);
                break;
            }
        }
    }

    const long last = res.aborted ? res.violation_step : nsteps;
    DiagnosticsRecord rec;
    if (cfg.record_diagnostics) {
        std::optional<Curve> rem;
        try {
            rem = cfg.hooks.zero_remainder ? Curve(x.size(), Vec2::Zero()) : remainder_assemble(x);
        } catch (const GeometryError&) {
            rem = Curve(x.size(), Vec2::Constant(std::nan("")));
        }
        rec = record(x, last, t, area0, sigma, rem);
        res.diagnostics.push_back(rec);
    }
    res.snapshots.push_back({x, last, t, rec, area0});
    res.final_state = x;
    return res;
}

Filament integrate(const Filament& x0, double dt, double t_final, const StepHooks& hooks)
{
    const long nsteps = std::max(1L, static_cast<long>(std::ceil(t_final / dt - 1e-9)));
    Filament x = x0;
    double t = 0.0;
    for (long n = 0; n < nsteps; ++n) {
        const double h = (n + 1 == nsteps) ? t_final - t : dt;
        x = advance(x, h, hooks).next;
        t = static_cast<double>(n + 1) * dt;
    }
    return x;
}

OrderResult second_order_check(const SimConfig& cfg)
{
    const Filament x0 = make_initial(cfg.ic, cfg.n_nodes);
    const Filament a = integrate(x0, cfg.dt, cfg.t_final, cfg.hooks);
    const Filament b = integrate(x0, cfg.dt / 2, cfg.t_final, cfg.hooks);
    const Filament c = integrate(x0, cfg.dt / 4, cfg.t_final, cfg.hooks);
    OrderResult out;
    out.diff_coarse = max_distance(a, b);
    out.diff_fine = max_distance(b, c);
    out.order = std::log2(out.diff_coarse / out.diff_fine);
    return out;
}

}  // namespace filament
