#include "filament/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "filament/equilibria.hpp"
#include "filament/remainder.hpp"
#include "filament/spectral.hpp"

namespace filament {

double arc_length(const Filament& f)
{
    const Curve t = curve_tangent(f.nodes());
    const std::size_t n = f.size();
    double sum = 0.5 * (t.front().norm() + t.back().norm());
    for (std::size_t j = 1; j + 1 < n; ++j)
        sum += t[j].norm();
    return sum * f.ds();
}

double isoperimetric_error(const Filament& f)
{
    return std::abs(arc_length(f) / arc_length(equilibrium_for(f)) - 1.0);
}

double remainder_endpoint_norm(const Curve& remainder)
{
    return std::max(remainder.front().norm(), remainder.back().norm());
}

DiagnosticsRecord record(const Filament& f, long step, double time, double area0, double sigma,
                         const std::optional<Curve>& remainder)
{
    DiagnosticsRecord rec;
    rec.step = step;
    rec.time = time;
    rec.area = enclosed_area(f);
    rec.area_rel_error = std::abs(rec.area - area0) / std::abs(area0);
    rec.iso_error = isoperimetric_error(f);
    rec.chord_arc = chord_arc_constant(f);
    rec.min_height = interior_height(f, sigma);
    rec.remainder_endpoint_norm = remainder_endpoint_norm(remainder ? *remainder : remainder_assemble(f));
    return rec;
}

}  // namespace filament
