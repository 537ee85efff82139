#pragma once

#include <Eigen/Core>
#include <numbers>
#include <vector>

namespace filament {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using Curve = std::vector<Vec2>;

inline constexpr double pi = std::numbers::pi;

// Reflection across the wall, R = diag(1, -1).
inline Vec2 reflect(const Vec2& p) { return {p.x(), -p.y()}; }

inline Mat2 reflection_matrix()
{
    Mat2 r;
    r << 1.0, 0.0, 0.0, -1.0;
    return r;
}

// s_j = j*pi/(N-1)
inline double grid_point(std::size_t j, std::size_t n)
{
    return pi * static_cast<double>(j) / static_cast<double>(n - 1);
}

}  // namespace filament
