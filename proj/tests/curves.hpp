#pragma once

#include <cmath>
#include <random>

#include "filament/geometry.hpp"

namespace testcurves {

using filament::Filament;
using filament::Vec2;

inline Filament semicircle(std::size_t n)
{
    return Filament::sample(n, [](double s) { return Vec2(std::cos(s), std::sin(s)); });
}

// (1 + p(s)) e^{is} with p = eps sin(s) sin(2s)
inline Filament perturbed_arc(std::size_t n, double eps = 0.15)
{
    return Filament::sample(n, [eps](double s) {
        const double p = 1.0 + eps * std::sin(s) * std::sin(2.0 * s);
        return Vec2(p * std::cos(s), p * std::sin(s));
    });
}

// smooth radial perturbation of the semicircle with random coefficients
inline Filament random_filament(std::size_t n, unsigned seed, double amp = 0.1)
{
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> dist(-amp, amp);
    double c[4];
    for (double& v : c)
        v = dist(gen);
    return Filament::sample(n, [c](double s) {
        double p = 1.0;
        for (int k = 0; k < 4; ++k)
            p += c[k] * std::sin((k + 1) * s) * std::sin(s);
        return Vec2(p * std::cos(s), p * std::sin(s));
    });
}

// crosses itself once
inline Filament figure_eight(std::size_t n)
{
    return Filament::sample(n, [](double s) {
        return Vec2(std::cos(s) + 2.0 * std::sin(2.0 * s), std::sin(s) * (1.0 + 0.8 * std::cos(2.0 * s)));
    });
}

// leaves the right anchor straight up on [0, 0.3]
inline Filament vertical_takeoff(std::size_t n)
{
    return Filament::sample(n, [](double s) {
        const double g = s <= 0.3 ? 0.0 : std::pow((s - 0.3) / (filament::pi - 0.3), 2);
        return Vec2(1.0 - 2.0 * g, std::sin(s));
    });
}

}  // namespace testcurves
