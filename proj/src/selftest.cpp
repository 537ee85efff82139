#include "filament/selftest.hpp"

#include <algorithm>
#include <cmath>

#include "filament/analysis.hpp"
#include "filament/diagnostics.hpp"
#include "filament/remainder.hpp"
#include "filament/spectral.hpp"
#include "filament/stokeslet.hpp"
#include "filament/timestepper.hpp"

namespace filament {

double halton(unsigned i, unsigned base)
{
    double f = 1.0;
    double r = 0.0;
    for (unsigned k = i + 1; k > 0; k /= base) {
        f /= base;
        r += f * (k % base);
    }
    return r;
}

namespace {

SelftestResult at_most(std::string name, double value, double threshold)
{
    return {std::move(name), value <= threshold, value, threshold};
}

double no_slip()
{
    double worst = 0.0;
    for (unsigned i = 0; i < 200; ++i) {
        const Vec2 y(4.0 * halton(i, 2) - 2.0, 0.05 + 2.0 * halton(i, 3));
        const Vec2 f(2.0 * halton(i, 5) - 1.0, 2.0 * halton(i, 7) - 1.0);
        for (unsigned j = 0; j < 20; ++j) {
            const Vec2 x(6.0 * halton(j, 11) - 3.0, 0.0);
            worst = std::max(worst, stokeslet_halfspace(x, y, f).norm());
        }
    }
    return worst;
}

double stokes_residual()
{
    double worst = 0.0;
    for (unsigned i = 0; i < 20; ++i) {
        const Vec2 y(2.0 * halton(i, 2) - 1.0, 0.3 + halton(i, 3));
        const Vec2 f(2.0 * halton(i, 5) - 1.0, 2.0 * halton(i, 7) - 1.0);
        Vec2 x(2.0 * halton(i, 11) - 1.0, 0.3 + 1.5 * halton(i, 13));
        if ((x - y).norm() < 0.25)
            x.y() += 0.5;
        const auto r = stokes_residual_check(x, y, f, 1e-4);
        worst = std::max({worst, r.relative_momentum(), r.relative_divergence()});
    }
    return worst;
}

double semigroup_eigen()
{
    const std::size_t n = 65;
    const std::size_t m = 2 * n - 2;
    double worst = 0.0;
    for (double t : {0.1, 1.0}) {
        for (std::size_t k = 1; k <= m / 4; ++k) {
            std::vector<double> u(n);
            for (std::size_t j = 0; j < n; ++j)
                u[j] = std::sin(static_cast<double>(k) * grid_point(j, n));
            const auto out = restrict_field(semigroup_apply(odd_extend(u), t), n);
            for (std::size_t j = 0; j < n; ++j)
                worst = std::max(worst, std::abs(out[j] - std::exp(-t * k / 4.0) * u[j]));
        }
    }
    return worst;
}

double ld_linear_kernel()
{
    const std::size_t n = 256;
    std::vector<double> u(n);
    for (std::size_t j = 0; j < n; ++j)
        u[j] = 0.7 - 1.3 * grid_point(j, n);
    const auto l = linear_operator_LD(u);
    double worst = 0.0;
    for (double v : l)
        worst = std::max(worst, std::abs(v));
    return worst;
}

double endpoint_vanishing()
{
    InitialCondition ic;
    const Filament f = make_initial(ic, 128);
    return remainder_endpoint_norm(remainder_assemble(f));
}

double poisson()
{
    const double t = 1.0;
    const auto p = poisson_line_norms(t);
    return std::max(std::abs(p.l1 - 2.0 / pi), std::abs(p.sup - 9.0 / (8.0 * pi * std::sqrt(3.0))));
}

}  // namespace

std::vector<SelftestResult> run_selftest()
{
    std::vector<SelftestResult> out;
    out.push_back(at_most("stokeslet no-slip", no_slip(), 1e-13));
    out.push_back(at_most("stokes residual (relative)", stokes_residual(), 1e-5));
    out.push_back(at_most("semigroup eigenfunctions", semigroup_eigen(), 1e-13));
    out.push_back(at_most("L_D annihilates linear data", ld_linear_kernel(), 1e-6));
    out.push_back(at_most("remainder endpoint vanishing", endpoint_vanishing(), 1e-6));
    const auto se = sin_equivalence_check(400, 8.0 * pi);
    out.push_back({"sin-equivalence constant", se.passes, se.tightest_constant, 8.0 * pi});
    out.push_back(at_most("poisson kernel norms", poisson(), 1e-6));
    return out;
}

}  // namespace filament
