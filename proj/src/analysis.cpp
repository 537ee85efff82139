#include "filament/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "filament/spectral.hpp"
#include "filament/vec.hpp"

namespace filament {

void HolderParams::validate() const
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("alpha must lie in (0,1)");
    if (!(beta >= 0.0 && beta < 1.0))
        throw std::invalid_argument("beta must lie in [0,1)");
    if (!(gamma > 0.0 && gamma < 1.0 - alpha))
        throw std::invalid_argument("gamma must lie in (0, 1-alpha)");
}

double weighted_seminorm(std::span<const double> u, double alpha, double weight_exponent)
{
    const std::size_t n = u.size();
    if (n < 3)
        throw std::invalid_argument("weighted_seminorm: need at least 3 samples");
    const double ds = pi / static_cast<double>(n - 1);
    const std::size_t twice = 2 * (n - 1);
    const double unit = pi / static_cast<double>(twice);

    std::vector<double> dist(n), weight(twice + 1, 0.0);
    for (std::size_t m = 1; m < n; ++m)
        dist[m] = std::pow(static_cast<double>(m) * ds, -alpha);
    for (std::size_t m = 1; m < twice; ++m)
        weight[m] = std::pow(std::sin(unit * static_cast<double>(std::min(m, twice - m))), weight_exponent);

    double best = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
            best = std::max(best, weight[j + k] * dist[k - j] * std::abs(u[j] - u[k]));
    return best;
}

double weighted_holder_norm(std::span<const double> u, const HolderParams& p, HolderVariant variant)
{
    auto sup = [](std::span<const double> v) {
        double m = 0.0;
        for (double x : v)
            m = std::max(m, std::abs(x));
        return m;
    };
    if (variant == HolderVariant::C0_minusbeta)
        return sup(u) + weighted_seminorm(u, p.alpha, p.beta);
    const auto du = derivative_on_interval(u);
    return sup(u) + sup(du) + weighted_seminorm(du, p.alpha, -p.beta);
}

SmoothingResult semigroup_smoothing_test(std::span<const double> u0, const HolderParams& p, double t)
{
    if (!(t > 0.0))
        throw std::invalid_argument("semigroup_smoothing_test: t must be positive");
    const std::size_t n = u0.size();
    const PeriodicField w = odd_extend(u0);
    const auto w0 = restrict_field(w, n);
    const auto wt = restrict_field(semigroup_apply(w, t), n);
    SmoothingResult r;
    r.lhs = weighted_holder_norm(wt, p, HolderVariant::C1_beta);
    r.rhs_bound = 16.0 / t * weighted_holder_norm(w0, p, HolderVariant::C0_minusbeta);
    r.passes = r.lhs <= r.rhs_bound;
    return r;
}

std::vector<BatteryDatum> smoothing_battery(std::size_t n)
{
    struct Entry {
        const char* name;
        double (*fn)(double);
    };
    static const Entry entries[] = {
        {"sin(s)", [](double s) { return std::sin(s); }},
        {"sin(2s)", [](double s) { return std::sin(2 * s); }},
        {"sin(3s)", [](double s) { return std::sin(3 * s); }},
        {"sin(4s)", [](double s) { return std::sin(4 * s); }},
        {"sin(6s)", [](double s) { return std::sin(6 * s); }},
        {"sin(8s)", [](double s) { return std::sin(8 * s); }},
        {"sin(16s)", [](double s) { return std::sin(16 * s); }},
        {"sin(32s)", [](double s) { return std::sin(32 * s); }},
        {"s(pi-s)", [](double s) { return s * (pi - s); }},
        {"s^2(pi-s)", [](double s) { return s * s * (pi - s); }},
        {"sin^3(s)", [](double s) { return std::pow(std::sin(s), 3); }},
        {"s(pi-s)(s-pi/2)", [](double s) { return s * (pi - s) * (s - pi / 2); }},
        {"bump", [](double s) { return std::exp(-(s - 1.0) * (s - 1.0) / 0.1) * s * (pi - s); }},
        {"sin(s)+sin(3s)/2", [](double s) { return std::sin(s) + 0.5 * std::sin(3 * s); }},
        {"sin(2s)-0.3sin(7s)", [](double s) { return std::sin(2 * s) - 0.3 * std::sin(7 * s); }},
        {"sin(s)|cos(s)|", [](double s) { return std::sin(s) * std::abs(std::cos(s)); }},
        {"tent", [](double s) { return std::min(s, pi - s); }},
        {"sqrt(sin(s))", [](double s) { return std::sqrt(std::max(0.0, std::sin(s))); }},
        {"sin(s)cos(5s)", [](double s) { return std::sin(s) * std::cos(5 * s); }},
        {"sum sin(ks)/k^2", [](double s) {
             double v = 0.0;
             for (int k = 1; k <= 10; ++k)
                 v += std::sin(k * s) / (k * k);
             return v;
         }},
    };
    std::vector<BatteryDatum> out;
    for (const auto& e : entries) {
        BatteryDatum d{e.name, std::vector<double>(n)};
        for (std::size_t j = 0; j < n; ++j)
            d.samples[j] = e.fn(grid_point(j, n));
        d.samples.front() = 0.0;
        d.samples.back() = 0.0;
        out.push_back(std::move(d));
    }
    return out;
}

SinEquivalence sin_equivalence_check(int samples, double constant)
{
    if (samples < 2)
        throw std::invalid_argument("sin_equivalence_check: need at least 2 samples");
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    const double h = pi / (samples - 1);
    for (int i = 0; i < samples; ++i) {
        const double x = i * h;
        const double sx = std::sin(x);
        for (int j = 0; j < samples; ++j) {
            const double y = j * h;
            const double den = sx + std::abs(x - y);
            const double num = std::sin(0.5 * (x + y));
            if (den <= 0.0)
                continue;  // x = y = 0: both sides vanish
            const double r = num / den;
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
    }
    SinEquivalence out;
    out.worst_ratio_low = lo;
    out.worst_ratio_high = hi;
    out.tightest_constant = std::max(1.0 / lo, hi);
    out.passes = lo >= 1.0 / constant && hi <= constant;
    return out;
}

}  // namespace filament
