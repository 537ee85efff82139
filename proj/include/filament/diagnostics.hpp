#pragma once

#include <optional>

#include "filament/geometry.hpp"

namespace filament {

struct DiagnosticsRecord {
    long step = 0;
    double time = 0.0;
    double area = 0.0;
    double area_rel_error = 0.0;  // |area - area0| / area0
    double iso_error = 0.0;
    double chord_arc = 0.0;
    double min_height = 0.0;
    double remainder_endpoint_norm = 0.0;
};

/// Trapezoid rule applied to |spectral tangent|.
double arc_length(const Filament& f);

/// |L(f) / L(arc) - 1| with arc the equal-area equilibrium at the same N.
double isoperimetric_error(const Filament& f);

/// max(|R_0|, |R_{N-1}|)
double remainder_endpoint_norm(const Curve& remainder);

/// Evaluates every observable. When `remainder` is absent it is assembled.
DiagnosticsRecord record(const Filament& f, long step, double time, double area0, double sigma,
                         const std::optional<Curve>& remainder = std::nullopt);

}  // namespace filament
