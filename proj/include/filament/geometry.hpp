#pragma once

#include <functional>
#include <span>
#include <vector>

#include "filament/vec.hpp"

namespace filament {

/// Sampled curve on the inclusive grid s_j = j*pi/(N-1), pinned at (1, 0)
/// and (-1, 0).
class Filament {
public:
    /// Throws std::invalid_argument if N < 4 or the anchors are not exact.
    explicit Filament(Curve nodes);

    /// Samples X(s_j), checks the end samples are within `snap_tol` of the
    /// anchors, then sets them exactly.
    static Filament sample(std::size_t n, const std::function<Vec2(double)>& x, double snap_tol = 1e-12);

    /// The chord l(s) = (1 - 2s/pi, 0).
    static Filament chord(std::size_t n);

    std::size_t size() const { return nodes_.size(); }
    double ds() const { return pi / static_cast<double>(nodes_.size() - 1); }
    double s(std::size_t j) const { return grid_point(j, nodes_.size()); }
    const Vec2& operator[](std::size_t j) const { return nodes_[j]; }
    const Curve& nodes() const { return nodes_; }

private:
    Curve nodes_;
};

struct GeometricBounds {
    double M_bound = 50.0;
    double m_bound = 0.05;
    double sigma = 0.2;

    /// Throws std::invalid_argument when 0 < m < M, 0 < sigma < pi/4, m < pi/2 fails.
    void validate() const;
};

Curve reflect(std::span<const Vec2> points);

Vec2 delta(const Filament& f, std::size_t k, std::size_t l);
Vec2 delta_r(const Filament& f, std::size_t k, std::size_t l);

/// min over k < l of |X_k - X_l| / |s_k - s_l|.
double chord_arc_constant(const Filament& f);

/// atan(z2/z1) in (-pi/2, pi/2]; pi/2 when z1 == 0. Throws GeometryError at 0.
double wall_angle(const Vec2& z);

/// chi_sigma(r): 1 on [0, sigma], 2 - r/sigma on [sigma, 2 sigma], 0 beyond.
double cutoff(double r, double sigma);

struct IncidenceAngles {
    double theta0_inf = 0.0;
    double thetapi_inf = 0.0;
};

/// Infima of |theta_0| over 0 < s <= sigma and of |theta_pi| over
/// pi - sigma <= s < pi, on grid nodes.
IncidenceAngles incidence_angles(const Filament& f, double sigma);

/// inf |X_2(s)| over sigma/2 <= s <= pi - sigma/2.
double interior_height(const Filament& f, double sigma);

double star_norm(const Filament& f, const GeometricBounds& bounds);

/// sup|X| + sup|X'| + max over pairs |X'(s) - X'(t)| / |s - t|^gamma, with
/// X' the spectral tangent.
double c1gamma_surrogate(const Filament& f, double gamma = 0.5);

/// star_norm >= m and c1gamma_surrogate <= M.
bool is_admissible(const Filament& f, const GeometricBounds& bounds);

struct RatioCheck {
    double min_ratio = 0.0;
    double threshold = 0.0;
    bool passes = false;
};

/// min over interior pairs of |X_k - R X_l| / (sin((s_k + s_l)/2) / 2)
/// against min{2, m sin(m) sigma}.
RatioCheck deltar_ratio_bound_check(const Filament& f, const GeometricBounds& bounds);

/// Shoelace area of the nodes closed by the wall chord; positive above the wall.
double enclosed_area(std::span<const Vec2> points);
inline double enclosed_area(const Filament& f) { return enclosed_area(f.nodes()); }

}  // namespace filament
