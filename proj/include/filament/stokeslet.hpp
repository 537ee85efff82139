#pragma once

#include <functional>

#include "filament/vec.hpp"

namespace filament {

// Viscosity is 1 throughout. x is the evaluation point, y the force
// location, f the force. Each function throws SingularPoint when it
// would divide by zero.

/// S[f](x,y) = (1/4pi)(-log|x-y| f + (f.(x-y))(x-y)/|x-y|^2)
Vec2 stokeslet_free(const Vec2& x, const Vec2& y, const Vec2& f);

/// S^r[f](x,y) = S[f^r](x, y^r)
Vec2 stokeslet_image(const Vec2& x, const Vec2& y, const Vec2& f);

/// Phi = -(f2/2pi) log|x-y^r| - (y2/2pi) f^r.(x-y^r)/|x-y^r|^2
double correction_potential(const Vec2& x, const Vec2& y, const Vec2& f);
Vec2 correction_potential_gradient(const Vec2& x, const Vec2& y, const Vec2& f);

/// S^T = (0, -Phi) + x2 grad Phi
Vec2 stokeslet_correction(const Vec2& x, const Vec2& y, const Vec2& f);

/// Half-space Stokeslet by the closed four-term formula. Returns exact zero
/// when y lies on the wall.
Vec2 stokeslet_halfspace(const Vec2& x, const Vec2& y, const Vec2& f);

/// Same field assembled as S - S^r + S^T.
Vec2 stokeslet_halfspace_images(const Vec2& x, const Vec2& y, const Vec2& f);

double pressure_free(const Vec2& x, const Vec2& y, const Vec2& f);
double pressure_image(const Vec2& x, const Vec2& y, const Vec2& f);
/// P^T = 2 d/dx2 Phi
double pressure_correction(const Vec2& x, const Vec2& y, const Vec2& f);
/// P+ = P - P^r + P^T
double pressure_halfspace(const Vec2& x, const Vec2& y, const Vec2& f);

struct StokesResidual {
    double momentum = 0.0;        // |-Lap u + grad p|
    double divergence = 0.0;      // |div u|
    double momentum_scale = 0.0;  // |Lap u| + |grad p|
    double divergence_scale = 0.0;  // |d1 u1| + |d2 u2|
    double relative_momentum() const { return momentum / momentum_scale; }
    double relative_divergence() const { return divergence / divergence_scale; }
};

using VelocityField = std::function<Vec2(const Vec2&)>;
using PressureField = std::function<double(const Vec2&)>;

/// Second-order central differences with step h (5-point Laplacian).
StokesResidual stokes_residual(const VelocityField& u, const PressureField& p, const Vec2& x, double h);

/// Residual of (S+, P+) for a point force f at y.
StokesResidual stokes_residual_check(const Vec2& x, const Vec2& y, const Vec2& f, double h = 1e-4);

}  // namespace filament
