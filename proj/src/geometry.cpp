#include "filament/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "filament/errors.hpp"
#include "filament/spectral.hpp"

namespace filament {
namespace {

const Vec2 right_anchor{1.0, 0.0};
const Vec2 left_anchor{-1.0, 0.0};

}  // namespace

Filament::Filament(Curve nodes) : nodes_(std::move(nodes))
{
    if (nodes_.size() < 4)
        throw std::invalid_argument("filament needs at least 4 nodes");
    if (nodes_.front() != right_anchor || nodes_.back() != left_anchor)
        throw std::invalid_argument("filament endpoints must be exactly (1,0) and (-1,0)");
}

Filament Filament::sample(std::size_t n, const std::function<Vec2(double)>& x, double snap_tol)
{
    if (n < 4)
        throw std::invalid_argument("filament needs at least 4 nodes");
    Curve nodes(n);
    for (std::size_t j = 0; j < n; ++j)
        nodes[j] = x(grid_point(j, n));
    if ((nodes.front() - right_anchor).norm() > snap_tol || (nodes.back() - left_anchor).norm() > snap_tol)
        throw std::invalid_argument("sampled curve misses the anchors");
    nodes.front() = right_anchor;
    nodes.back() = left_anchor;
    return Filament(std::move(nodes));
}

Filament Filament::chord(std::size_t n)
{
    return sample(n, [](double s) { return Vec2(1.0 - 2.0 * s / pi, 0.0); });
}

void GeometricBounds::validate() const
{
    if (!(m_bound > 0.0 && m_bound < M_bound))
        throw std::invalid_argument("bounds: need 0 < m_bound < M_bound");
    if (!(m_bound < pi / 2))
        throw std::invalid_argument("bounds: need m_bound < pi/2");
    if (!(sigma > 0.0 && sigma < pi / 4))
        throw std::invalid_argument("bounds: need 0 < sigma < pi/4");
}

Curve reflect(std::span<const Vec2> points)
{
    Curve out(points.size());
    std::transform(points.begin(), points.end(), out.begin(), [](const Vec2& p) { return reflect(p); });
    return out;
}

Vec2 delta(const Filament& f, std::size_t k, std::size_t l) { return f[k] - f[l]; }

Vec2 delta_r(const Filament& f, std::size_t k, std::size_t l) { return f[k] - reflect(f[l]); }

double chord_arc_constant(const Filament& f)
{
    const std::size_t n = f.size();
    const double ds = f.ds();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
            best = std::min(best, (f[k] - f[l]).norm() / (static_cast<double>(l - k) * ds));
    return best;
}

double wall_angle(const Vec2& z)
{
    if (z.x() == 0.0) {
        if (z.y() == 0.0)
            throw GeometryError("degenerate chord: zero vector has no angle");
        return pi / 2;
    }
    return std::atan(z.y() / z.x());
}

double cutoff(double r, double sigma)
{
    if (r <= sigma)
        return 1.0;
    if (r <= 2.0 * sigma)
        return 2.0 - r / sigma;
    return 0.0;
}

IncidenceAngles incidence_angles(const Filament& f, double sigma)
{
    if (!(sigma > 0.0 && sigma < pi / 4))
        throw std::invalid_argument("incidence_angles: need 0 < sigma < pi/4");
    const std::size_t n = f.size();
    const double eps = 1e-14;
    IncidenceAngles out{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    bool any = false;
    for (std::size_t j = 1; j + 1 < n; ++j) {
        const double s = f.s(j);
        if (s <= sigma + eps) {
            const double th = cutoff(s, sigma) * wall_angle(f[j] - f[0]);
            out.theta0_inf = std::min(out.theta0_inf, std::abs(th));
            any = true;
        }
        if (pi - s <= sigma + eps) {
            const double th = cutoff(pi - s, sigma) * wall_angle(f[n - 1] - f[j]);
            out.thetapi_inf = std::min(out.thetapi_inf, std::abs(th));
        }
    }
    if (!any)
        throw std::invalid_argument("incidence_angles: sigma is below the grid spacing");
    return out;
}

double interior_height(const Filament& f, double sigma)
{
    double best = std::numeric_limits<double>::infinity();
    const double eps = 1e-14;
    for (std::size_t j = 0; j < f.size(); ++j) {
        const double s = f.s(j);
        if (s + eps >= sigma / 2 && s <= pi - sigma / 2 + eps)
            best = std::min(best, std::abs(f[j].y()));
    }
    return best;
}

double star_norm(const Filament& f, const GeometricBounds& bounds)
{
    const auto inc = incidence_angles(f, bounds.sigma);
    return std::min({chord_arc_constant(f), inc.theta0_inf, inc.thetapi_inf, interior_height(f, bounds.sigma)});
}

double c1gamma_surrogate(const Filament& f, double gamma)
{
    const Curve t = curve_tangent(f.nodes());
    const std::size_t n = f.size();
    double sup_x = 0.0;
    double sup_t = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        sup_x = std::max(sup_x, f[j].norm());
        sup_t = std::max(sup_t, t[j].norm());
    }
    double holder = 0.0;
    const double ds = f.ds();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
            holder = std::max(holder, (t[k] - t[l]).norm() / std::pow(static_cast<double>(l - k) * ds, gamma));
    return sup_x + sup_t + holder;
}

bool is_admissible(const Filament& f, const GeometricBounds& bounds)
{
    return star_norm(f, bounds) >= bounds.m_bound && c1gamma_surrogate(f) <= bounds.M_bound;
}

RatioCheck deltar_ratio_bound_check(const Filament& f, const GeometricBounds& bounds)
{
    const std::size_t n = f.size();
    const long twice = 2 * static_cast<long>(n - 1);
    const double unit = pi / static_cast<double>(twice);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k + 1 < n; ++k) {
        for (std::size_t l = k; l + 1 < n; ++l) {
            const long m = static_cast<long>(k + l);
            const double half_sin = 0.5 * std::sin(unit * static_cast<double>(std::min(m, twice - m)));
            best = std::min(best, delta_r(f, k, l).norm() / half_sin);
        }
    }
    RatioCheck out;
    out.min_ratio = best;
    const double m = bounds.m_bound;
    out.threshold = std::min(2.0, m * std::sin(m) * bounds.sigma);
    out.passes = best >= out.threshold;
    return out;
}

double enclosed_area(std::span<const Vec2> points)
{
    const std::size_t n = points.size();
    double twice = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const Vec2& a = points[j];
        const Vec2& b = points[(j + 1) % n];
        twice += a.x() * b.y() - b.x() * a.y();
    }
    return 0.5 * twice;
}

}  // namespace filament
