#include <doctest.h>

#include <cmath>
#include <vector>

#include "filament/analysis.hpp"
#include "filament/vec.hpp"

using namespace filament;

namespace {

std::vector<double> sample(std::size_t n, double (*fn)(double))
{
    std::vector<double> u(n);
    for (std::size_t j = 0; j < n; ++j)
        u[j] = fn(grid_point(j, n));
    return u;
}

// direct pair scan of sin((s+t)/2)^e |s-t|^-alpha |u(s)-u(t)| for an analytic u
double brute_seminorm(double (*fn)(double), std::size_t n, double alpha, double e)
{
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double s = grid_point(i, n), t = grid_point(j, n);
            const double w = std::sin((s + t) / 2);
            best = std::max(best, std::pow(w, e) * std::abs(fn(s) - fn(t)) / std::pow(t - s, alpha));
        }
    return best;
}

double mixed(double s) { return std::sin(3 * s) + 0.25 * std::sin(8 * s); }

}  // namespace

TEST_CASE("parameter validation")
{
    CHECK_NOTHROW(HolderParams{}.validate());
    CHECK_THROWS_AS((HolderParams{1.0, 0.5, 0.25}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((HolderParams{0.5, 1.0, 0.25}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((HolderParams{0.5, 0.5, 0.5}.validate()), std::invalid_argument);
}

TEST_CASE("constants have no seminorm")
{
    const std::vector<double> u(65, -2.5);
    const HolderParams p;
    CHECK(weighted_holder_norm(u, p, HolderVariant::C0_minusbeta) == 2.5);
    CHECK(weighted_holder_norm(u, p, HolderVariant::C1_beta) == doctest::Approx(2.5).epsilon(1e-13));
}

TEST_CASE("linear function in the C1 norm")
{
    const auto u = sample(129, [](double s) { return s; });
    CHECK(weighted_holder_norm(u, HolderParams{}, HolderVariant::C1_beta) == doctest::Approx(pi + 1.0).epsilon(1e-12));
}

TEST_CASE("seminorm against a direct scan")
{
    const auto sinfn = [](double s) { return std::sin(s); };
    for (double e : {0.5, -0.5, 0.0}) {
        const double grid = weighted_seminorm(sample(129, sinfn), 0.5, e);
        CHECK(grid == doctest::Approx(brute_seminorm(sinfn, 129, 0.5, e)).epsilon(1e-13));
        const double fine = brute_seminorm(sinfn, 4 * 128 + 1, 0.5, e);
        CHECK(grid <= fine + 1e-12);
        CHECK(grid >= 0.95 * fine);
    }
}

TEST_CASE("seminorm is monotone under refinement")
{
    double prev = 0.0;
    for (std::size_t n : {17, 33, 65, 129, 257}) {
        const double v = weighted_seminorm(sample(n, mixed), 0.5, 0.5);
        CHECK(v >= prev - 1e-12);
        prev = v;
    }
}

TEST_CASE("smoothing bound on single modes")
{
    const HolderParams p;
    const auto s1 = sample(257, [](double s) { return std::sin(s); });
    const auto r1 = semigroup_smoothing_test(s1, p, 1.0);
    CHECK(r1.passes);
    CHECK(r1.lhs <= r1.rhs_bound);

    const auto s32 = sample(257, [](double s) { return std::sin(32 * s); });
    for (double t : {0.1, 1.0})
        CHECK(semigroup_smoothing_test(s32, p, t).passes);

    CHECK_THROWS_AS(semigroup_smoothing_test(s1, p, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(semigroup_smoothing_test(s1, p, -1.0), std::invalid_argument);
}

TEST_CASE("smoothing bound on the battery")
{
    const auto battery = smoothing_battery(257);
    REQUIRE(battery.size() == 20);
    const HolderParams p;
    for (const auto& datum : battery) {
        CHECK(std::abs(datum.samples.front()) <= 1e-14);
        CHECK(std::abs(datum.samples.back()) <= 1e-14);
        for (double t : {0.25, 0.5, 1.0, 2.0, 4.0}) {
            const auto r = semigroup_smoothing_test(datum.samples, p, t);
            INFO(datum.name << " t = " << t << " lhs " << r.lhs << " bound " << r.rhs_bound);
            CHECK(r.passes);
        }
    }
}

TEST_CASE("smoothed norm decays in time")
{
    const auto u = sample(257, mixed);
    const HolderParams p;
    const double ts[] = {1.0, 2.0, 4.0, 8.0};
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double t : ts) {
        const double x = std::log(t), y = std::log(semigroup_smoothing_test(u, p, t).lhs);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double slope = (4 * sxy - sx * sy) / (4 * sxx - sx * sx);
    MESSAGE("log-log slope " << slope);
    CHECK(slope <= -0.9);
}

TEST_CASE("trigonometric equivalence")
{
    const auto r = sin_equivalence_check(1000, 8 * pi);
    CHECK(r.passes);
    CHECK(r.worst_ratio_low >= 1.0 / (8 * pi));
    CHECK(r.worst_ratio_high <= 8 * pi);
    CHECK(r.tightest_constant < 8 * pi);
    MESSAGE("tightest constant " << r.tightest_constant);
    CHECK_FALSE(sin_equivalence_check(200, 1.5).passes);
}
