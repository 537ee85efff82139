#pragma once

#include <span>
#include <vector>

#include "filament/vec.hpp"

namespace filament {

/// Samples of a 2*pi periodic field on M = 2N-2 equispaced points.
struct PeriodicField {
    std::vector<double> values;
    std::size_t size() const { return values.size(); }
};

/// Endpoint values u(0), u(pi) of the linear part l(s).
struct LinearPart {
    double u0 = 0.0;
    double upi = 0.0;
    double at(double s) const { return u0 + (upi - u0) * s / pi; }
    double slope() const { return (upi - u0) / pi; }
};

LinearPart linear_part(std::span<const double> u);

/// Subtracts the discrete linear part and extends oddly onto M = 2N-2 points.
PeriodicField odd_extend(std::span<const double> u);

/// Odd extension of samples that already vanish at both ends (no subtraction).
PeriodicField odd_extend_vanishing(std::span<const double> w);

/// First n values, i.e. the samples on [0, pi].
std::vector<double> restrict_field(const PeriodicField& w, std::size_t n);

/// D_h: symbol ik, Nyquist mode zeroed.
PeriodicField spectral_derivative(const PeriodicField& w);

/// S_h(t): symbol exp(-t|k|/4), Nyquist mode zeroed. Throws for t < 0.
PeriodicField semigroup_apply(const PeriodicField& w, double t);

/// Lambda: symbol |k|, Nyquist mode zeroed. L_D = -Lambda/4 on odd data.
PeriodicField abs_derivative(const PeriodicField& w);

/// Band-limited interpolation onto refine*M points (zero padding).
PeriodicField upsample(const PeriodicField& w, int refine);

/// Direct principal-value quadrature of L_D, using the spectral derivative
/// of the odd extension for u'. Only the singular node is dropped from the
/// sum; its cell contributes the limit -2*ds*u''(s_k).
std::vector<double> linear_operator_LD(std::span<const double> u);

/// Derivative on [0, pi] of arbitrary samples: D_h of the odd extension plus
/// the slope of the linear part.
std::vector<double> derivative_on_interval(std::span<const double> u);

// Curve helpers; X is sampled on the inclusive grid s_j.
std::vector<double> component(std::span<const Vec2> x, int c);
Curve curve_tangent(std::span<const Vec2> x);
Curve curve_second_derivative(std::span<const Vec2> x);

struct PoissonNorms {
    double l1 = 0.0;
    double sup = 0.0;
};

/// L1 norm and sup of d/dx of the line Poisson kernel t/(pi(t^2+x^2)),
/// by adaptive quadrature and a grid scan refined by Brent's method.
PoissonNorms poisson_line_norms(double t);

}  // namespace filament
