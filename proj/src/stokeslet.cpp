#include "filament/stokeslet.hpp"

#include <cmath>

#include "filament/errors.hpp"

namespace filament {
namespace {

double checked_norm2(const Vec2& d, const char* what)
{
    const double r2 = d.squaredNorm();
    if (r2 == 0.0)
        throw SingularPoint(what);
    return r2;
}

}  // namespace

Vec2 stokeslet_free(const Vec2& x, const Vec2& y, const Vec2& f)
{
    const Vec2 d = x - y;
    const double r2 = checked_norm2(d, "stokeslet: coincident points");
    return (-0.5 * std::log(r2) * f + f.dot(d) * d / r2) / (4.0 * pi);
}

Vec2 stokeslet_image(const Vec2& x, const Vec2& y, const Vec2& f)
{
    const Vec2 d = x - reflect(y);
    checked_norm2(d, "stokeslet: point coincides with image");
    return stokeslet_free(x, reflect(y), reflect(f));
}

double correction_potential(const Vec2& x, const Vec2& y, const Vec2& f)
{
    const Vec2 r = x - reflect(y);
    const double r2 = checked_norm2(r, "correction potential: point coincides with image");
    return -f.y() / (4.0 * pi) * std::log(r2) - y.y() / (2.0 * pi) * reflect(f).dot(r) / r2;
}

Vec2 correction_potential_gradient(const Vec2& x, const Vec2& y, const Vec2& f)
{
    const Vec2 r = x - reflect(y);
    const double r2 = checked_norm2(r, "correction potential: point coincides with image");
    const Vec2 fr = reflect(f);
    return -f.y() / (2.0 * pi) * r / r2 - y.y() / (2.0 * pi) * (fr / r2 - 2.0 * fr.dot(r) * r / (r2 * r2));
}

Vec2 stokeslet_correction(const Vec2& x, const Vec2& y, const Vec2& f)
{
    return Vec2(0.0, -correction_potential(x, y, f)) + x.y() * correction_potential_gradient(x, y, f);
}

Vec2 stokeslet_halfspace(const Vec2& x, const Vec2& y, const Vec2& f)
{
    const Vec2 d = x - y;
    const double d2 = checked_norm2(d, "stokeslet: coincident points");
    if (y.y() == 0.0)
        return Vec2::Zero();
    const Vec2 r = x - reflect(y);
    const double r2 = checked_norm2(r, "stokeslet: point coincides with image");
    const Vec2 fr = reflect(f);
    const double x2 = x.y();
    const double y2 = y.y();
    Vec2 u = 0.5 * (std::log(r2) - std::log(d2)) * f + d * (d.dot(f) / d2) - d * (r.dot(fr) / r2);
    u /= 4.0 * pi;
    u -= x2 * f.y() / (2.0 * pi) * r / r2;
    u -= x2 * y2 / (2.0 * pi) * (fr / r2 - 2.0 * r * (r.dot(fr) / (r2 * r2)));
    return u;
}

Vec2 stokeslet_halfspace_images(const Vec2& x, const Vec2& y, const Vec2& f)
{
    if (y.y() == 0.0) {
        checked_norm2(x - y, "stokeslet: coincident points");
        return Vec2::Zero();
    }
    return stokeslet_free(x, y, f) - stokeslet_image(x, y, f) + stokeslet_correction(x, y, f);
}

double pressure_free(const Vec2& x, const Vec2& y, const Vec2& f)
{
    const Vec2 d = x - y;
    const double r2 = checked_norm2(d, "pressure: coincident points");
    return f.dot(d) / (2.0 * pi * r2);
}

double pressure_image(const Vec2& x, const Vec2& y, const Vec2& f)
{
    const Vec2 r = x - reflect(y);
    const double r2 = checked_norm2(r, "pressure: point coincides with image");
    return reflect(f).dot(r) / (2.0 * pi * r2);
}

double pressure_correction(const Vec2& x, const Vec2& y, const Vec2& f)
{
    const Vec2 r = x - reflect(y);
    const double r2 = checked_norm2(r, "pressure: point coincides with image");
    const double x2 = x.y();
    const double y2 = y.y();
    return -x2 * f.y() / (pi * r2) + 2.0 * y2 * (x2 + y2) * reflect(f).dot(r) / (pi * r2 * r2);
}

double pressure_halfspace(const Vec2& x, const Vec2& y, const Vec2& f)
{
    return pressure_free(x, y, f) - pressure_image(x, y, f) + pressure_correction(x, y, f);
}

StokesResidual stokes_residual(const VelocityField& u, const PressureField& p, const Vec2& x, double h)
{
    const Vec2 e1(h, 0.0);
    const Vec2 e2(0.0, h);
    const Vec2 u0 = u(x);
    const Vec2 ue = u(x + e1), uw = u(x - e1), un = u(x + e2), us = u(x - e2);
    const Vec2 lap = (ue + uw + un + us - 4.0 * u0) / (h * h);
    const Vec2 grad_p((p(x + e1) - p(x - e1)) / (2.0 * h), (p(x + e2) - p(x - e2)) / (2.0 * h));
    const double d11 = (ue.x() - uw.x()) / (2.0 * h);
    const double d22 = (un.y() - us.y()) / (2.0 * h);

    StokesResidual out;
    out.momentum = (-lap + grad_p).norm();
    out.momentum_scale = lap.norm() + grad_p.norm();
    out.divergence = std::abs(d11 + d22);
    out.divergence_scale = std::abs(d11) + std::abs(d22);
    return out;
}

StokesResidual stokes_residual_check(const Vec2& x, const Vec2& y, const Vec2& f, double h)
{
    return stokes_residual([&](const Vec2& z) { return stokeslet_halfspace(z, y, f); },
                           [&](const Vec2& z) { return pressure_halfspace(z, y, f); }, x, h);
}

}  // namespace filament
