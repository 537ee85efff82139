#include "filament/equilibria.hpp"

#include <cmath>
#include <stdexcept>

namespace filament {

ArcCenter arc_center(double c)
{
    const double r = std::hypot(c, 1.0);
    return {c, r, r + c};
}

Filament equilibrium_arc(double c, std::size_t n)
{
    const double r = std::hypot(c, 1.0);
    double slope = 1.0;
    double offset = 0.0;
    if (c > 0.0) {
        const double a = std::atan(1.0 / c);
        slope = 2.0 - 2.0 / pi * a;
        offset = a - pi / 2;
    } else if (c < 0.0) {
        const double a = std::atan(1.0 / c);
        slope = -2.0 / pi * a;
        offset = a + pi / 2;
    }
    return Filament::sample(n, [=](double s) {
        const double th = slope * s + offset;
        return Vec2(r * std::cos(th), r * std::sin(th) + c);
    });
}

double area_of_center(double c)
{
    if (c == 0.0)
        return pi / 2;
    const double a = std::atan(1.0 / c);
    if (c > 0.0)
        return (pi - a) * (c * c + 1.0) + c;
    return -a * (c * c + 1.0) + c;
}

double center_of_area(double area)
{
    if (!(area > 0.0))
        throw std::invalid_argument("center_of_area: area must be positive");
    if (area == pi / 2)
        return 0.0;
    double lo = -1e6;
    double hi = 1e6;
    while (area_of_center(lo) > area)
        lo *= 2.0;
    while (area_of_center(hi) < area)
        hi *= 2.0;
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi)
            break;
        if (area_of_center(mid) < area)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double equilibrium_center_for(const Filament& f)
{
    const double target = enclosed_area(f);
    if (!(target > 0.0))
        throw std::invalid_argument("equilibrium_for: enclosed area must be positive");
    const std::size_t n = f.size();
    auto g = [&](double c) { return enclosed_area(equilibrium_arc(c, n)) - target; };

    // secant polish from the continuum inverse so the discrete polygon areas match
    double c0 = center_of_area(target);
    double g0 = g(c0);
    double c1 = c0 + 1e-6 * std::max(1.0, std::abs(c0));
    double g1 = g(c1);
    for (int it = 0; it < 50 && g1 != 0.0 && g1 != g0; ++it) {
        const double c2 = c1 - g1 * (c1 - c0) / (g1 - g0);
        c0 = c1;
        g0 = g1;
        c1 = c2;
        g1 = g(c1);
        if (std::abs(c1 - c0) <= 1e-15 * std::max(1.0, std::abs(c1)))
            break;
    }
    return std::abs(g1) <= std::abs(g0) ? c1 : c0;
}

Filament equilibrium_for(const Filament& f)
{
    return equilibrium_arc(equilibrium_center_for(f), f.size());
}

}  // namespace filament
