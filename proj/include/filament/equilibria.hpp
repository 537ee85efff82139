#pragma once

#include "filament/geometry.hpp"

namespace filament {

/// Circle through (+-1, 0) with center (0, c).
struct ArcCenter {
    double c = 0.0;
    double r = 1.0;  // sqrt(c^2 + 1)
    double h = 1.0;  // apex height r + c
};

ArcCenter arc_center(double c);

/// Arc of the circle centered at (0, c), parametrized at constant speed.
Filament equilibrium_arc(double c, std::size_t n);

/// Area between the arc and the wall.
double area_of_center(double c);

/// Inverse of area_of_center, to 1e-12 in c. Throws for area <= 0.
double center_of_area(double area);

/// The arc with the same number of nodes whose polygon encloses the same
/// area as f.
Filament equilibrium_for(const Filament& f);

/// Center of the equal-area arc at the resolution of f.
double equilibrium_center_for(const Filament& f);

}  // namespace filament
